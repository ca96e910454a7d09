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


#include "orient9/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <set>

#include "orient9/catalog.hpp"
#include "orient9/discharging.hpp"
#include "orient9/errors.hpp"
#include "orient9/generators.hpp"
#include "orient9/graph_ops.hpp"
#include "orient9/hom_flow.hpp"
#include "orient9/oracles.hpp"
#include "orient9/orientation.hpp"
#include "orient9/partition.hpp"
#include "orient9/reduction.hpp"
#include "orient9/signed_flow.hpp"

namespace orient9 {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string triple(int a, int b, int c) {
  return "T_{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "}";
}

Outcome sz9_families(bool full, const Caps& caps) {
  Outcome o;
  int k2 = 0, tri = 0, quad = 0;
  for (int a = 8; a <= 12; ++a, ++k2) {
    if (!is_strongly_zk_connected(multi_k2(a), 9, caps).member) {
      o.fail(std::to_string(a) + "K_2 not in SZ_9");
    }
  }
  for (int a = 1; a <= 18; ++a) {
    for (int b = a; b <= 18; ++b) {
      for (int c = b; a + b + c <= 18; ++c) {
        if (a + b + c < 16 || a + b < 8) continue;
        ++tri;
        if (!is_strongly_zk_connected(multi_triangle(a, b, c), 9, caps).member) {
          o.fail(triple(a, b, c) + " not in SZ_9");
        }
      }
    }
  }
  if (full) {
    Rng rng(2025);
    std::uniform_int_distribution<int> mult(0, 7);
    while (quad < 25) {
      std::array<int, 6> m;
      int sum = 0;
      for (int& x : m) sum += (x = mult(rng));
      if (sum != 25) continue;
      Multigraph g = Multigraph::from_multiplicities(
          4, {{0, 1, m[0]}, {0, 2, m[1]}, {0, 3, m[2]}, {1, 2, m[3]}, {1, 3, m[4]}, {2, 3, m[5]}});
      if (g.min_degree() < 8) continue;
      ++quad;
      if (!is_strongly_zk_connected(g, 9, caps).member) {
        o.fail("4-vertex graph with multiplicities " + std::to_string(m[0]) + "," +
               std::to_string(m[1]) + "," + std::to_string(m[2]) + "," + std::to_string(m[3]) +
               "," + std::to_string(m[4]) + "," + std::to_string(m[5]) + " not in SZ_9");
      }
    }
  }
  if (o.passed) {
    o.detail = std::to_string(k2) + " multi-K_2, " + std::to_string(tri) + " triangles, " +
               std::to_string(quad) + " sampled 4-vertex graphs in SZ_9";
  }
  return o;
}

Outcome n_rejected(const Caps& caps) {
  Outcome o;
  int count = 0;
  auto check = [&](const Multigraph& g, const std::string& name) {
    ++count;
    MembershipResult r = is_strongly_zk_connected(g, 9, caps);
    if (r.member) return o.fail(name + " accepted");
    if (!r.missing) return o.fail(name + " rejected without a witness");
    if (find_zk_orientation(g, 9, *r.missing, caps)) o.fail(name + " witness is realisable");
  };
  for (int a = 1; a <= 7; ++a) check(multi_k2(a), std::to_string(a) + "K_2");
  for (int a = 1; a <= 13; ++a) {
    for (int b = a; a + 2 * b <= 15; ++b) {
      for (int c = b; a + b + c <= 15; ++c) check(multi_triangle(a, b, c), triple(a, b, c));
    }
  }
  if (find_zk_orientation(multi_k2(7), 9, {0, 0}, caps)) o.fail("7K_2 realises the zero boundary");
  if (o.passed) o.detail = std::to_string(count) + " graphs rejected with verified witnesses";
  return o;
}

Outcome w16_sc16(bool full, const Caps& caps) {
  Outcome o;
  if (!is_weakly_contractible(multi_k2(16), 16, caps).member) o.fail("16K_2 not in W_16");
  for (int a : {17, 18}) {
    if (!is_in_SC(multi_k2(a), 16, caps).member) o.fail(std::to_string(a) + "K_2 not in SC_16");
  }
  int tri = 0;
  for (int a = 1; a <= 33; ++a) {
    for (int b = a; a + 2 * b <= 33; ++b) {
      int c = 33 - a - b;
      if (c < b || a + b < 17) continue;
      ++tri;
      if (!is_in_SC(multi_triangle(a, b, c), 16, caps).member) o.fail(triple(a, b, c) + " not in SC_16");
    }
  }
  std::string extra;
  if (full) {
    Caps slow = caps;
    slow.slow_mode = true;
    Multigraph k4 = Multigraph::from_multiplicities(
        4, {{0, 1, 9}, {0, 2, 8}, {0, 3, 8}, {1, 2, 8}, {1, 3, 8}, {2, 3, 9}});
    if (!is_in_SC(k4, 16, slow).member) o.fail("designated K_4 (9,8,8,8,8,9) not in SC_16");
    extra = ", K_4 (9,8,8,8,8,9) in SC_16";
  }
  if (o.passed) {
    o.detail = "16K_2 in W_16, 17K_2 and 18K_2 in SC_16, " + std::to_string(tri) +
               " triangles with sum 33" + extra;
  }
  return o;
}

Outcome jaeger(const Caps& caps) {
  Outcome o;
  Rng rng(71);
  int done = 0;
  for (int i = 0; i < 5000 && done < 100; ++i) {
    Multigraph g = random_multigraph(rng, 2 + i % 5, 6, 0.7);
    if (g.num_edges() > 20) continue;
    auto d = modular_orientation(g, 9, caps);
    if (!d) continue;
    ++done;
    CircularFlow f = orientation_to_flow(g, *d, 4);
    if (!check_circular_flow(g, f).valid) o.fail("flow from orientation invalid");
    Orientation back = flow_to_orientation(g, f, 4);
    if (!is_beta_orientation(g, back, std::vector<int>(g.num_vertices(), 0), 9)) {
      o.fail("round trip lost the zero boundary");
    }
  }
  if (done < 100) o.fail("only " + std::to_string(done) + " instances");
  if (o.passed) o.detail = "100 round trips preserve the zero boundary mod 9";
  return o;
}

Outcome duality(const Caps& caps) {
  Outcome o;
  Rng rng(55);
  int done = 0;
  for (int i = 0; i < 2000 && done < 50; ++i) {
    EmbeddedGraph eg = random_subdivided_plane_graph(rng, 5, 3, 4);
    HomResult r = find_homomorphism(eg.graph, 4, caps);
    if (r.status != HomStatus::kFound) continue;
    ++done;
    DualGraph d = dual(eg.graph, eg.embedding);
    CircularFlow f = hom_to_dual_flow(eg.graph, d, *r.map);
    if (!check_circular_flow(d.graph, f).valid) o.fail("dual flow invalid");
    for (int v : f.value) {
      if (std::abs(v) != 4) o.fail("dual flow value other than +-4");
    }
    if (!is_homomorphism(eg.graph, dual_flow_to_hom(eg.graph, d, f, 4))) {
      o.fail("recovered map is not a homomorphism");
    }
  }
  if (done < 50) o.fail("only " + std::to_string(done) + " instances");
  if (o.passed) o.detail = "50 dual 9/4-flows verified and inverted";
  return o;
}

Outcome gadgets(bool full, const Caps& caps) {
  Outcome o;
  int top = full ? 4 : 3;
  std::string sizes;
  for (int k = 1; k <= top; ++k) {
    EmbeddedGraph g = gadget(k);
    int girth = odd_girth(g.graph).length;
    if (girth != 4 * k - 1) o.fail("gadget(" + std::to_string(k) + ") odd girth " + std::to_string(girth));
    HomResult r = find_homomorphism(g.graph, k, caps);
    if (r.status != HomStatus::kNone) {
      o.fail("gadget(" + std::to_string(k) + ") search ended with " + to_string(r.status));
    }
    sizes += (sizes.empty() ? "" : ", ") + std::to_string(g.graph.num_vertices());
  }
  if (o.passed) {
    o.detail = "k = 1.." + std::to_string(top) + " (" + sizes + " vertices): odd girth 4k-1, no homomorphism";
  }
  return o;
}

Outcome weight_identity(bool full, const Caps& caps) {
  Outcome o;
  Rng rng(77);
  int target = full ? 10000 : 1000, checked = 0;
  while (checked < target) {
    int n = 3 + checked % 8;
    Multigraph g = random_multigraph(rng, n, 6, 0.5);
    Partition p = random_partition(rng, n, 1 + n / 2);
    if (p.num_blocks() < 2) continue;
    auto blocks = p.blocks();
    int b = static_cast<int>(rng() % blocks.size());
    int sz = static_cast<int>(blocks[b].size());
    if (sz < 2) continue;
    Partition q = random_partition(rng, sz, sz);
    RefinementCheck r = refinement_identity(g, p, b, q);
    if (!r.holds || r.lhs != r.rhs) o.fail("identity failed for partition " + to_string(p));
    ++checked;
  }
  int mono_target = full ? 1000 : 100, mono = 0;
  while (mono < mono_target) {
    int n = 3 + mono % 5;
    Multigraph g = random_multigraph(rng, n, 8, 0.7);
    std::vector<int> s;
    for (int v = 0; v < n; ++v) {
      if (rng() % 2) s.push_back(v);
    }
    if (s.size() < 2 || static_cast<int>(s.size()) == n) continue;
    if (!induced_subgraph(g, s).connected()) continue;
    ++mono;
    if (min_weight(contract_subset(g, s).graph, {}, caps).value < min_weight(g, {}, caps).value) {
      o.fail("contraction lowered the minimum weight");
    }
  }
  if (o.passed) {
    o.detail = std::to_string(checked) + " identity triples, " + std::to_string(mono) +
               " monotonicity pairs";
  }
  return o;
}

Outcome splitting(bool full, const Caps& caps) {
  Outcome o;
  Rng rng(23);
  int target = full ? 10000 : 1000, instances = 0, falsified = 0;
  while (instances < target) {
    int n = 2 + static_cast<int>(rng() % 5);
    Multigraph g = random_multigraph(rng, n, 5, 0.8);
    int lambda = odd_edge_connectivity(g, caps).value;
    for (VertexId v = 0; v < n; ++v) {
      int d = g.degree(v);
      if (d < 3 || d == lambda) continue;
      ++instances;
      SplitResult s = zhang_split(g, v, nullptr, caps);
      if (!s.found) {
        ++falsified;
      } else if (odd_edge_connectivity(s.graph, caps).value != lambda) {
        o.fail("split changed the odd-edge-connectivity");
      }
      break;
    }
  }
  if (falsified) o.fail(std::to_string(falsified) + " falsification events");
  if (o.passed) o.detail = std::to_string(instances) + " splits verified, no falsification";
  return o;
}

Outcome signed_pipeline(const Caps& caps) {
  Outcome o;
  Rng rng(99);
  int done = 0;
  for (int i = 0; i < 2000 && done < 20; ++i) {
    int n = 2 + i % 2;
    Multigraph g = random_multigraph(rng, n, 7, 1.0);
    SignedGraph gs{g, {}};
    for (int j = 0; j < g.num_edges(); ++j) gs.sign.push_back(rng() % 3 ? 1 : -1);
    SignedPipeline r = run_signed_pipeline(gs, 8, caps);
    if (!r.orientation_found) continue;
    ++done;
    if (r.flow.p != 32 || r.flow.q != 14) o.fail("unexpected (p, q)");
    if (!r.check.valid) o.fail("flow ranges violated");
    if (r.tight_cut) o.fail("tight cut found");
  }
  if (done < 20) o.fail("only " + std::to_string(done) + " instances");
  if (o.passed) o.detail = "20 signed graphs: (32,14)-flows verified, no tight cut";
  return o;
}

Outcome discharging_item() {
  Outcome o;
  CaseTableReport table = case_table_verify();
  for (const auto& item : table.items) {
    if (!item.holds) o.fail("case table item '" + item.name + "' fails");
  }
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    EmbeddedGraph eg = random_plane_multigraph(rng, 3 + i % 6, 2 + i % 9);
    ChargeLedger ledger = apply_rules(eg.graph, eg.embedding);
    Charge expected = 2 * eg.graph.num_edges() * kChargeDenominator;
    if (ledger.total_initial() != expected || ledger.total_final() != expected) {
      o.fail("charge not conserved");
    }
    if (!euler_density_check(eg.graph, eg.embedding).consistent) o.fail("density check inconsistent");
  }
  Multigraph k4 = Multigraph::from_multiplicities(
      4, {{0, 1, 4}, {0, 2, 4}, {0, 3, 4}, {1, 2, 4}, {2, 3, 4}, {3, 1, 5}});
  PlaneEmbedding emb = embedding_from_coordinates(k4, {{0, 0}, {0, 1}, {-0.87, -0.5}, {0.87, -0.5}});
  DensityCheck tight = euler_density_check(k4, emb);
  if (!tight.weight_hypothesis || !tight.inequality || 21 * tight.twice_edges != 46 * 23 - 8) {
    o.fail("tight density instance");
  }
  if (o.passed) {
    o.detail = std::to_string(table.items.size()) +
               " case identities exact, conservation on 100 embeddings, density bound tight at 2e = 23v - 42";
  }
  return o;
}

Outcome detector(bool full) {
  Outcome o;
  Rng rng(11);
  int target = full ? 1000 : 200, matches = 0;
  const auto& catalog = default_catalog();
  for (int i = 0; i < target; ++i) {
    int n = 2 + i % 5;
    Multigraph g = random_multigraph(rng, n, 8, 0.7);
    for (const ConfigPattern& p : catalog) {
      if (p.num_vertices() > n) continue;
      std::set<std::vector<std::array<int, 3>>> got;
      for (const ConfigMatch& m : detect_config(g, p)) got.insert(match_key(p, m.assignment));
      std::vector<std::array<int, 3>> pairs;
      for (const auto& pp : p.pairs) pairs.push_back({pp.a, pp.b, pp.threshold});
      if (got != oracle::config_matches(g, p.num_vertices(), pairs)) {
        o.fail("mismatch on pattern " + p.name);
      }
      matches += static_cast<int>(got.size());
    }
  }
  if (o.passed) {
    o.detail = std::to_string(target) + " graphs, " + std::to_string(matches) + " matches agree";
  }
  return o;
}

Outcome scaled_solver(const Caps& caps) {
  Outcome o;
  Rng rng(5);
  int compared = 0, attempts = 0, recursed = 0;
  while (compared < 50 && attempts < 20000) {
    ++attempts;
    int n = 3 + static_cast<int>(rng() % 5);
    EmbeddedGraph base = random_plane_multigraph(rng, n, static_cast<int>(rng() % 4));
    Multigraph g(n);
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : base.graph.edges()) {
      if (!seen.insert(std::minmax(e.u, e.v)).second) continue;
      int m = 3 + static_cast<int>(rng() % 7);
      for (int i = 0; i < m; ++i) g.add_edge(e.u, e.v);
    }
    if (odd_edge_connectivity(g, caps).value < 11) continue;
    ++compared;
    SolveReport r = solve_modular_9(g, nullptr, SolverConstants::scaled(), caps);
    bool direct = modular_orientation(g, 5, caps).has_value();
    if (r.ok != direct) o.fail("solver and direct search disagree: " + r.failed_step);
    if (r.ok && !is_beta_orientation(g, *r.orientation, std::vector<int>(n, 0), 5)) {
      o.fail("solver output is not a modular 5-orientation");
    }
    recursed += r.trace.size() > 1;
  }
  if (compared < 50) o.fail("only " + std::to_string(compared) + " toys");
  if (o.passed) {
    o.detail = "50 odd-11-edge-connected toys agree with the direct search (" +
               std::to_string(recursed) + " used splitting or contraction)";
  }
  return o;
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.passed; });
}

SuiteReport run_suite(SuiteScale scale, const Caps& caps,
                      const std::function<void(const SuiteItem&)>& on_item) {
  bool full = scale == SuiteScale::kFull;
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, "SZ_9 families", [&] { return sz9_families(full, caps); }},
      {2, "N fails SZ_9", [&] { return n_rejected(caps); }},
      {3, "W_16 and SC_16", [&] { return w16_sc16(full, caps); }},
      {4, "orientation-flow round trip", [&] { return jaeger(caps); }},
      {5, "dual circular flows", [&] { return duality(caps); }},
      {6, "tightness gadget", [&] { return gadgets(full, caps); }},
      {7, "weight identity and monotonicity", [&] { return weight_identity(full, caps); }},
      {8, "splitting lemma", [&] { return splitting(full, caps); }},
      {9, "signed flow pipeline", [&] { return signed_pipeline(caps); }},
      {10, "discharging", [&] { return discharging_item(); }},
      {11, "configuration detector", [&] { return detector(full); }},
      {12, "scaled solver", [&] { return scaled_solver(caps); }},
  };
  SuiteReport report;
  report.scale = scale;
  for (const Entry& e : entries) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.run();
    } catch (const std::exception& ex) {
      out.fail(std::string("error: ") + ex.what());
    }
    SuiteItem item{e.id, e.name, out.passed, out.detail,
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
    if (on_item) on_item(item);
    report.items.push_back(std::move(item));
  }
  return report;
}

std::string format_item(const SuiteItem& item) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", item.seconds);
  return std::string(item.passed ? "[PASS] " : "[FAIL] ") + std::to_string(item.id) + " " +
         item.name + " (" + secs + "): " + item.detail;
}

}  // namespace orient9
