// Copyright 2026 The orient9 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end.

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "orient9/catalog.hpp"
#include "orient9/discharging.hpp"
#include "orient9/errors.hpp"
#include "orient9/graph_ops.hpp"
#include "orient9/hom_flow.hpp"
#include "orient9/io.hpp"
#include "orient9/orientation.hpp"
#include "orient9/partition.hpp"
#include "orient9/reduction.hpp"
#include "orient9/signed_flow.hpp"
#include "orient9/suite.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace orient9;

constexpr int kFound = 0;
constexpr int kNone = 1;
constexpr int kError = 2;

enum class Mode { kHuman, kJson, kDot };

Mode g_mode = Mode::kHuman;

void emit(const std::string& kind, bool verified, const json& payload, const std::string& human) {
  if (g_mode == Mode::kJson) {
    json out;
    out["schema"] = 1;
    out["kind"] = kind;
    out["verified"] = verified;
    out["payload"] = payload;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

GraphFile load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

std::optional<PlaneEmbedding> load_embedding(const GraphFile& gf, const std::string& path) {
  if (!path.empty()) return parse_embedding(read_text_file(path), gf.graph);
  return gf.embedding;
}

json tails(const Multigraph& g, const Orientation& d) {
  json t = json::array();
  for (int i = 0; i < g.num_edges(); ++i) t.push_back(d.tail(g.edges()[i], i));
  return t;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

std::string join_tails(const Multigraph& g, const Orientation& d) {
  std::vector<int> t;
  for (int i = 0; i < g.num_edges(); ++i) t.push_back(d.tail(g.edges()[i], i));
  return join(t);
}

int cmd_weight(const std::string& path, bool all) {
  Multigraph g = load_graph(path).graph;
  MinWeight mw = min_weight(g);
  bool verified = weight_of_partition(g, mw.argmin) == mw.value;
  Family fam = classify_family(g);
  bool n_good = is_N_good(g).good, s_good = is_S_good(g).good;
  json payload{{"weight", mw.value},
               {"partition", mw.argmin.labels()},
               {"family", to_string(fam)},
               {"n_good", n_good},
               {"s_good", s_good}};
  std::ostringstream human;
  human << "weight " << mw.value << " at " << to_string(mw.argmin) << "\n"
        << "family " << to_string(fam) << "\nN-good " << (n_good ? "yes" : "no")
        << "\nS-good " << (s_good ? "yes" : "no") << "\n";
  if (all) {
    if (g.num_vertices() > default_caps().partition_vertices) {
      throw CapExceeded("partition listing limited to " +
                        std::to_string(default_caps().partition_vertices) + " vertices");
    }
    json list = json::array();
    for_each_partition(g.num_vertices(), g.num_vertices(), [&](const std::vector<int>& lab) {
      Partition p(lab);
      if (p.num_blocks() < 2) return true;
      long w = weight_of_partition(g, p);
      list.push_back({{"partition", lab}, {"weight", w}});
      human << to_string(p) << " " << w << "\n";
      return true;
    });
    payload["partitions"] = list;
  }
  emit("partition", verified, payload, human.str());
  return verified ? kFound : kError;
}

int cmd_membership(const std::string& path, int k, bool sc) {
  Multigraph g = load_graph(path).graph;
  MembershipResult r = sc ? is_in_SC(g, k) : is_strongly_zk_connected(g, k);
  int modulus = sc || k % 2 == 0 ? 2 * k : k;
  bool verified = true;
  if (!r.member && r.missing) {
    verified = sc ? !find_sc_orientation(g, 2 * k, *r.missing).has_value()
                  : !find_zk_orientation(g, modulus, *r.missing).has_value();
  }
  std::string cls = sc ? "SC_" + std::to_string(k) : "SZ_" + std::to_string(k);
  json payload{{"class", cls}, {"member", r.member}};
  if (r.missing) payload["missing_boundary"] = *r.missing;
  std::string human = r.member ? "member of " + cls + "\n"
                               : "not in " + cls + "; missing boundary " +
                                     (r.missing ? join(*r.missing) : std::string("?")) + "\n";
  emit("orientation", verified, payload, human);
  if (!verified) return kError;
  return r.member ? kFound : kNone;
}

int cmd_orient(const std::string& path, int modulus, const std::string& boundary_path) {
  Multigraph g = load_graph(path).graph;
  std::vector<int> beta(g.num_vertices(), 0);
  if (!boundary_path.empty()) beta = parse_boundary(read_text_file(boundary_path), g.num_vertices());
  auto d = find_zk_orientation(g, modulus, beta);
  json payload{{"modulus", modulus}, {"boundary", beta}};
  if (!d) {
    payload["orientation"] = nullptr;
    emit("orientation", true, payload, "none: no orientation realises the boundary\n");
    return kNone;
  }
  bool verified = is_beta_orientation(g, *d, beta, modulus);
  payload["orientation"] = tails(g, *d);
  emit("orientation", verified, payload, "tails " + join_tails(g, *d) + "\n");
  return verified ? kFound : kError;
}

int cmd_hom(const std::string& path, int k) {
  Multigraph g = load_graph(path).graph;
  HomResult r = find_homomorphism(g, k);
  json payload{{"k", k}, {"status", to_string(r.status)}, {"nodes", r.nodes}};
  bool verified = true;
  std::string human = to_string(r.status) + " after " + std::to_string(r.nodes) + " nodes\n";
  if (r.map) {
    verified = is_homomorphism(g, *r.map);
    payload["hom"] = r.map->image;
    human += "hom " + join(r.map->image) + "\n";
  }
  emit("hom", verified, payload, human);
  if (!verified || r.status == HomStatus::kBudget) return kError;
  return r.status == HomStatus::kFound ? kFound : kNone;
}

int cmd_gadget(int k, const std::string& out) {
  EmbeddedGraph eg = gadget(k);
  validate_embedding(eg.graph, eg.embedding);
  std::string text = serialize_graph(eg.graph) + serialize_embedding(eg.embedding);
  if (!out.empty()) write_text_file(out, text);
  int girth = odd_girth(eg.graph).length;
  json payload{{"k", k},
               {"vertices", eg.graph.num_vertices()},
               {"edges", eg.graph.num_edges()},
               {"odd_girth", girth}};
  if (!out.empty()) payload["file"] = out;
  if (g_mode == Mode::kDot) {
    std::cout << to_dot(eg.graph);
  } else {
    emit("graph", girth == 4 * k - 1, payload, out.empty() ? text : "wrote " + out + "\n");
  }
  return kFound;
}

int cmd_dualize(const std::string& path, const std::string& emb_path) {
  GraphFile gf = load_graph(path);
  auto emb = load_embedding(gf, emb_path);
  if (!emb) throw InvalidInput("an embedding is required");
  DualGraph d = dual(gf.graph, *emb);
  validate_embedding(d.graph, d.embedding);
  std::string text = serialize_graph(d.graph) + serialize_embedding(d.embedding);
  if (g_mode == Mode::kDot) {
    std::cout << to_dot(d.graph);
  } else {
    emit("graph", true, {{"faces", d.graph.num_vertices()}, {"text", text}}, text);
  }
  return kFound;
}

int cmd_signed(const std::string& path, int k) {
  SignedGraph gs = parse_signed_graph(read_text_file(path));
  SignedPipeline r = run_signed_pipeline(gs, k);
  if (!r.orientation_found) {
    emit("flow", true, {{"found", false}}, "none: 2G has no suitable strongly connected orientation\n");
    return kNone;
  }
  bool verified = r.check.valid && verify_signed_flow(gs, r.flow).valid;
  json payload{{"found", true},
               {"p", r.flow.p},
               {"q", r.flow.q},
               {"orientation", tails(gs.graph, r.flow.orientation)},
               {"value", r.flow.value},
               {"tight_cut", r.tight_cut ? json(*r.tight_cut) : json(nullptr)}};
  std::string human = "circular " + std::to_string(r.flow.p) + "/" + std::to_string(r.flow.q) +
                      "-flow\ntails " + join_tails(gs.graph, r.flow.orientation) + "\nvalues " +
                      join(r.flow.value) + "\ntight cut " + (r.tight_cut ? "found" : "none") + "\n";
  emit("flow", verified, payload, human);
  if (!verified) return kError;
  return r.tight_cut ? kNone : kFound;
}

int cmd_detect(const std::string& path, const std::string& pattern, const std::string& catalog_path) {
  Multigraph g = load_graph(path).graph;
  std::vector<ConfigPattern> catalog =
      catalog_path.empty() ? default_catalog() : parse_catalog(read_text_file(catalog_path));
  auto matches = detect_config(g, pattern, catalog);
  json list = json::array();
  std::ostringstream human;
  bool verified = true;
  for (const ConfigMatch& m : matches) {
    const ConfigPattern& p = find_pattern(catalog, m.pattern);
    for (const auto& [a, b, t] : match_key(p, m.assignment)) verified &= g.multiplicity(a, b) >= t;
    list.push_back({{"pattern", m.pattern}, {"assignment", m.assignment}, {"edges", m.edges}});
    human << m.pattern << " at " << join(m.assignment) << "\n";
  }
  if (matches.empty()) human << "none\n";
  emit("match", verified, {{"matches", list}}, human.str());
  if (!verified) return kError;
  return matches.empty() ? kNone : kFound;
}

int cmd_solve9(const std::string& path, const std::string& emb_path, bool scaled) {
  GraphFile gf = load_graph(path);
  auto emb = load_embedding(gf, emb_path);
  SolverConstants c = scaled ? SolverConstants::scaled() : SolverConstants{};
  SolveReport r = solve_modular_9(gf.graph, emb ? &*emb : nullptr, c);
  json payload{{"modulus", c.modulus}, {"lambda", c.lambda}, {"ok", r.ok}, {"trace", r.trace}};
  std::ostringstream human;
  for (const auto& t : r.trace) human << t << "\n";
  bool verified = true;
  if (r.ok) {
    verified = is_beta_orientation(gf.graph, *r.orientation,
                                   std::vector<int>(gf.graph.num_vertices(), 0), c.modulus);
    payload["orientation"] = tails(gf.graph, *r.orientation);
    human << "modular " << c.modulus << "-orientation, tails " << join_tails(gf.graph, *r.orientation)
          << "\n";
  } else {
    payload["failed_step"] = r.failed_step;
    human << "failed step: " << r.failed_step << "\n";
  }
  emit("orientation", verified, payload, human.str());
  if (!verified) return kError;
  return r.ok ? kFound : kNone;
}

json lifts_json(const std::vector<LiftRecord>& lifts) {
  json out = json::array();
  for (const auto& l : lifts) {
    out.push_back({{"v", l.v}, {"x", l.x}, {"y", l.y}, {"e1", l.e1}, {"e2", l.e2}});
  }
  return out;
}

int cmd_witness(const std::string& path, const std::string& emb_path, const std::vector<int>& clauses,
                bool no_catalog) {
  GraphFile gf = load_graph(path);
  auto emb = load_embedding(gf, emb_path);
  WitnessOptions o;
  if (!clauses.empty()) o.clauses = clauses;
  o.use_catalog = !no_catalog;
  const PlaneEmbedding* e = emb ? &*emb : nullptr;
  ReductionCertificate c = reduction_witness(gf.graph, e, o);
  if (c.status == WitnessStatus::kExhausted) {
    emit("match", true, {{"status", "exhausted"}, {"note", c.note}, {"checks", c.checks}},
         "exhausted: " + c.note + "\n");
    return kNone;
  }
  bool verified = verify_reduction_certificate(gf.graph, c, e);
  json payload{{"status", "certificate"}, {"clause", c.clause},     {"source", c.source},
               {"lifts", lifts_json(c.lifts)}, {"checks", c.checks}};
  std::ostringstream human;
  human << "clause " << c.clause << " (" << c.source << ")\n";
  for (const auto& l : c.lifts) {
    human << "lift at " << l.v << ": edges " << l.e1 << "," << l.e2 << " become " << l.x << "-" << l.y
          << "\n";
  }
  if (c.clause == 1 || c.clause == 2) {
    payload["subgraph_vertices"] = c.subgraph_vertices;
    json ids = json::array();
    for (const Edge& ed : c.subgraph.edges()) ids.push_back(ed.id);
    payload["subgraph_edges"] = ids;
    human << "H on " << join(c.subgraph_vertices) << " with " << c.subgraph.num_edges() << " edges\n";
  }
  if (c.clause == 3) {
    payload["vertex"] = c.vertex;
    human << "vertex " << c.vertex << "\n";
  }
  emit("match", verified, payload, human.str());
  return verified ? kFound : kError;
}

int cmd_discharge(const std::string& path, const std::string& emb_path, const std::string& report,
                  const std::string& csv) {
  if (report == "json") g_mode = Mode::kJson;
  GraphFile gf = load_graph(path);
  auto emb = load_embedding(gf, emb_path);
  if (!emb) throw InvalidInput("an embedding is required");
  ChargeLedger ledger = apply_rules(gf.graph, *emb);
  auto bad = verdict(gf.graph, ledger);
  bool verified = ledger.total_final() == ledger.total_initial();
  if (!csv.empty()) {
    std::ostringstream out;
    out << "from,to,rule,amount\n";
    for (const Transfer& t : ledger.transfers) {
      out << t.from << "," << t.to << "," << t.rule << "," << charge_string(t.amount) << "\n";
    }
    write_text_file(csv, out.str());
  }
  json faces = json::array();
  std::ostringstream human;
  for (int f = 0; f < static_cast<int>(ledger.classes.size()); ++f) {
    const FaceClass& c = ledger.classes[f];
    faces.push_back({{"face", f},
                     {"degree", c.degree},
                     {"class", to_string(c.kind)},
                     {"params", c.params},
                     {"initial", charge_string(ledger.initial[f])},
                     {"final", charge_string(ledger.final_charge[f])}});
    human << "face " << f << " degree " << c.degree << " " << to_string(c.kind) << " final "
          << charge_string(ledger.final_charge[f]) << "\n";
  }
  json deficient = json::array();
  for (const auto& d : bad) {
    json near = json::array();
    for (const auto& m : d.nearby) near.push_back({{"pattern", m.pattern}, {"assignment", m.assignment}});
    deficient.push_back({{"face", d.face}, {"charge", charge_string(d.charge)}, {"nearby", near}});
    human << "deficient face " << d.face << " (" << charge_string(d.charge) << ")";
    for (const auto& m : d.nearby) human << " " << m.pattern;
    human << "\n";
  }
  if (bad.empty()) human << "every face ends with at least 46/21\n";
  emit("ledger", verified,
       {{"total", charge_string(ledger.total_final())},
        {"transfers", ledger.transfers.size()},
        {"faces", faces},
        {"deficient", deficient}},
       human.str());
  if (!verified) return kError;
  return bad.empty() ? kFound : kNone;
}

int cmd_verify(const std::string& scale) {
  SuiteScale s = scale == "quick" ? SuiteScale::kQuick : SuiteScale::kFull;
  SuiteReport r = run_suite(s, default_caps(), [](const SuiteItem& item) {
    if (g_mode != Mode::kJson) std::cout << format_item(item) << std::endl;
  });
  if (g_mode == Mode::kJson) {
    json items = json::array();
    for (const auto& i : r.items) {
      items.push_back({{"id", i.id}, {"name", i.name}, {"passed", i.passed}, {"detail", i.detail},
                       {"seconds", i.seconds}});
    }
    emit("suite-report", true, {{"scale", scale}, {"items", items}}, "");
  }
  return r.all_passed() ? kFound : kNone;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orient9: modular orientations, flows and reducible configurations"};
  app.require_subcommand(1);
  std::string format = "human", caps_spec;
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"human", "json", "dot"}));
  app.add_option("--caps", caps_spec, "Cap overrides, e.g. partition=13,sz=1e8");

  std::function<int()> run;
  std::string graph, second, out, boundary, pattern = "all", catalog, report = "text", csv,
                                         scale = "full";
  int k = 9, modulus = 9;
  bool all = false, min = false, scaled = false, no_catalog = false;
  std::vector<int> clauses;

  auto* weight = app.add_subcommand("weight", "Minimum partition weight and goodness");
  weight->add_option("graph", graph)->required();
  weight->add_flag("--all-partitions", all);
  weight->add_flag("--min", min);
  weight->callback([&] { run = [&] { return cmd_weight(graph, all); }; });

  auto* sz = app.add_subcommand("sz", "Strong Z_k-connectivity");
  sz->add_option("--k", k)->required();
  sz->add_option("graph", graph)->required();
  sz->callback([&] { run = [&] { return cmd_membership(graph, k, false); }; });

  auto* sc = app.add_subcommand("sc", "SC_k membership");
  sc->add_option("--k", k)->required();
  sc->add_option("graph", graph)->required();
  sc->callback([&] { run = [&] { return cmd_membership(graph, k, true); }; });

  auto* orient = app.add_subcommand("orient", "Orientation with a prescribed boundary");
  orient->add_option("--mod", modulus)->required();
  orient->add_option("--boundary", boundary);
  orient->add_option("graph", graph)->required();
  orient->callback([&] { run = [&] { return cmd_orient(graph, modulus, boundary); }; });

  auto* hom = app.add_subcommand("hom", "Homomorphism to C_{2k+1}");
  hom->add_option("--k", k)->required();
  hom->add_option("graph", graph)->required();
  hom->callback([&] { run = [&] { return cmd_hom(graph, k); }; });

  auto* gad = app.add_subcommand("gadget", "Odd-girth gadget with its embedding");
  gad->add_option("--k", k)->required();
  gad->add_option("-o,--output", out);
  gad->callback([&] { run = [&] { return cmd_gadget(k, out); }; });

  auto* dualize = app.add_subcommand("dualize", "Geometric dual");
  dualize->add_option("graph", graph)->required();
  dualize->add_option("embedding", second);
  dualize->callback([&] { run = [&] { return cmd_dualize(graph, second); }; });

  auto* sflow = app.add_subcommand("signed-flow", "Signed circular flow from 2G");
  sflow->add_option("--k", k)->required();
  sflow->add_option("graph", graph)->required();
  sflow->callback([&] { run = [&] { return cmd_signed(graph, k); }; });

  auto* detect = app.add_subcommand("detect", "Configuration matches");
  detect->add_option("graph", graph)->required();
  detect->add_option("--pattern", pattern);
  detect->add_option("--catalog", catalog);
  detect->callback([&] { run = [&] { return cmd_detect(graph, pattern, catalog); }; });

  auto* solve = app.add_subcommand("solve9", "Recursive modular orientation");
  solve->add_option("graph", graph)->required();
  solve->add_option("--embedding", second);
  solve->add_flag("--scaled", scaled, "Use modulus 5 and odd-edge-connectivity 11");
  solve->callback([&] { run = [&] { return cmd_solve9(graph, second, scaled); }; });

  auto* witness = app.add_subcommand("witness-1-12", "Reduction certificate search");
  witness->add_option("graph", graph)->required();
  witness->add_option("--embedding", second);
  witness->add_option("--clauses", clauses)->delimiter(',');
  witness->add_flag("--no-catalog", no_catalog);
  witness->callback([&] { run = [&] { return cmd_witness(graph, second, clauses, no_catalog); }; });

  auto* discharge = app.add_subcommand("discharge", "Face charging");
  discharge->add_option("graph", graph)->required();
  discharge->add_option("embedding", second);
  discharge->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
  discharge->add_option("--csv", csv, "Transfer log");
  discharge->callback([&] { run = [&] { return cmd_discharge(graph, second, report, csv); }; });

  auto* verify = app.add_subcommand("verify-paper", "Acceptance suite");
  verify->add_option("--scale", scale)->check(CLI::IsMember({"quick", "full"}));
  verify->callback([&] { run = [&] { return cmd_verify(scale); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }
  try {
    default_caps() = Caps::from_env();
    if (!caps_spec.empty()) default_caps() = Caps::parse(caps_spec);
    g_mode = format == "json" ? Mode::kJson : format == "dot" ? Mode::kDot : Mode::kHuman;
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
