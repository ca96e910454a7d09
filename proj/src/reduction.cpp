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


#include "orient9/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "orient9/errors.hpp"
#include "orient9/graph_ops.hpp"

namespace orient9 {

namespace {

std::string set_string(const std::vector<VertexId>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::vector<VertexId> mask_members(std::uint32_t mask, int n) {
  std::vector<VertexId> out;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1) out.push_back(v);
  }
  return out;
}

bool induced_connected(const std::vector<int>& mu, int n, std::uint32_t mask) {
  int first = __builtin_ctz(mask);
  std::uint32_t seen = 1U << first, frontier = seen;
  while (frontier) {
    int a = __builtin_ctz(frontier);
    frontier &= frontier - 1;
    for (int b = 0; b < n; ++b) {
      if ((mask >> b & 1) && !(seen >> b & 1) && mu[a * n + b] > 0) {
        seen |= 1U << b;
        frontier |= 1U << b;
      }
    }
  }
  return seen == mask;
}

PlaneEmbedding restrict_embedding(const PlaneEmbedding& emb,
                                  const std::vector<VertexId>& keep) {
  std::vector<std::vector<EndId>> rot;
  for (VertexId v : keep) rot.push_back(emb.rotation(v));
  return PlaneEmbedding(std::move(rot));
}

Lifted replay_lift(const Multigraph& g, const LiftRecord& r,
                   const PlaneEmbedding* emb) {
  require(g.has_edge(r.e1) && g.has_edge(r.e2), "lift edge missing");
  const Edge& a = g.edge(r.e1);
  const Edge& b = g.edge(r.e2);
  require((a.u == r.v || a.v == r.v) && a.other(r.v) == r.x,
          "lift edge does not join v and x");
  require((b.u == r.v || b.v == r.v) && b.other(r.v) == r.y,
          "lift edge does not join v and y");
  return lift_edges(g, r.v, r.e1, r.e2, emb);
}

}  // namespace

const std::array<GapThreshold, 6>& gap_thresholds() {
  static const std::array<GapThreshold, 6> t = {{{2, 1, 9},
                                                 {3, 1, 16},
                                                 {2, 2, 18},
                                                 {4, 1, 20},
                                                 {3, 2, 25},
                                                 {3, 3, 32}}};
  return t;
}

GapResult gap_lemma_extract(const Multigraph& g, const Partition& p,
                            const Caps& caps) {
  require(p.size() == g.num_vertices(), "partition size mismatch");
  require(p.num_blocks() >= 2, "partition needs at least two blocks");
  require(!p.is_trivial(), "partition must be nontrivial");
  GapResult r;
  std::vector<int> sizes = p.sorted_sizes();
  for (const auto& t : gap_thresholds()) {
    if (sizes[0] >= t.first && sizes[1] >= t.second) {
      r.threshold = std::max(r.threshold, t.threshold);
    }
  }
  r.weight = weight_of_partition(g, p);
  auto blocks = p.blocks();
  r.block = 0;
  for (int i = 1; i < static_cast<int>(blocks.size()); ++i) {
    if (blocks[i].size() > blocks[r.block].size()) r.block = i;
  }
  r.witness_vertices = blocks[r.block];
  RefinementCheck rc = refinement_identity(
      g, p, r.block, Partition::trivial(static_cast<int>(r.witness_vertices.size())));
  if (!rc.holds) throw Error("refinement identity failed");
  r.inner_weight = rc.lhs;
  r.applicable = r.threshold > 0 && r.weight < r.threshold;
  if (!r.applicable) {
    r.note = "not applicable: weight " + std::to_string(r.weight) +
             " meets threshold " + std::to_string(r.threshold);
    return r;
  }
  Multigraph h = induced_subgraph(g, r.witness_vertices);
  if (h.connected() && is_N_good(h, {}, caps).good) {
    r.witness = h;
    r.note = "G[P_1] is N-good";
  } else {
    r.note = "G[P_1] is not N-good";
  }
  return r;
}

std::vector<EdgeId> cyclic_edges(const Multigraph& g, VertexId v,
                                 const PlaneEmbedding* emb) {
  std::vector<EdgeId> out;
  if (emb) {
    for (EndId d : emb->rotation(v)) out.push_back(edge_of_end(d));
  } else {
    out = g.incident(v);
  }
  return out;
}

SplitResult zhang_split(const Multigraph& g, VertexId v,
                        const PlaneEmbedding* emb, const Caps& caps) {
  int d = g.degree(v);
  SplitResult r;
  r.lambda = odd_edge_connectivity(g, caps).value;
  require(d != 2, "vertex degree 2 is excluded");
  require(d != r.lambda, "vertex degree equals the odd-edge-connectivity");
  require(d >= 3, "vertex needs at least three edges");
  std::vector<EdgeId> order = cyclic_edges(g, v, emb);
  for (int i = 0; i < d; ++i) {
    EdgeId e1 = order[i], e2 = order[(i + 1) % d];
    Lifted l = split_off(g, v, e1, e2, emb);
    if (odd_edge_connectivity(l.graph, caps).value != r.lambda) continue;
    r.found = true;
    r.index = i;
    r.e1 = e1;
    r.e2 = e2;
    r.graph = std::move(l.graph);
    r.embedding = std::move(l.embedding);
    return r;
  }
  r.falsification = true;
  return r;
}

bool is_subgraph_by_ids(const Multigraph& h, const std::vector<VertexId>& vertices,
                        const Multigraph& g) {
  if (static_cast<int>(vertices.size()) != h.num_vertices()) return false;
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(e.id)) return false;
    const Edge& f = g.edge(e.id);
    VertexId a = vertices[e.u], b = vertices[e.v];
    if (!((f.u == a && f.v == b) || (f.u == b && f.v == a))) return false;
  }
  return true;
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(const Multigraph& g, const PlaneEmbedding* emb, const Caps& caps)
      : g_(g), emb_(emb), caps_(caps) {}

  std::uint64_t checks() const { return checks_; }
  bool budget_hit() const { return budget_hit_; }

  std::optional<ReductionCertificate> clause1() {
    ReductionCertificate c;
    if (!find_subgraph(g_, true, &c)) return std::nullopt;
    c.clause = 1;
    c.source = "subgraph search";
    return c;
  }

  std::optional<ReductionCertificate> clause2(bool use_catalog) {
    if (use_catalog) {
      for (const ConfigPattern& p : default_catalog()) {
        if (p.recipe.empty()) continue;
        for (const ConfigMatch& m : detect_config(g_, p)) {
          auto c = from_recipe(p, m);
          if (c) return c;
          if (budget_hit_) return std::nullopt;
        }
      }
    }
    std::vector<State> level{{g_, emb_ ? std::optional<PlaneEmbedding>(*emb_) : std::nullopt, {}}};
    std::set<std::vector<int>> seen{g_.multiplicity_matrix()};
    for (int depth = 1; depth <= caps_.witness_lifts; ++depth) {
      std::vector<State> next;
      for (const State& s : level) {
        for (State& t : successors(s)) {
          if (!seen.insert(t.graph.multiplicity_matrix()).second) continue;
          ReductionCertificate c;
          if (find_subgraph(t.graph, false, &c)) {
            c.clause = 2;
            c.lifts = t.lifts;
            c.lifted = t.graph;
            c.source = "lifting search";
            return c;
          }
          if (budget_hit_) return std::nullopt;
          next.push_back(std::move(t));
        }
      }
      level = std::move(next);
    }
    return std::nullopt;
  }

  std::optional<ReductionCertificate> clause3() {
    int n = g_.num_vertices();
    std::set<std::vector<int>> seen;
    for (VertexId v = 0; v < n; ++v) {
      int d = g_.degree(v);
      std::vector<int> alphas;
      if (d <= 14) {
        for (int a = 1; 2 * a <= d; ++a) {
          if (d - a <= 11 && d - 2 * a >= 8) alphas.push_back(a);
        }
      }
      for (int a = 1; 2 * a <= d; ++a) {
        if (std::find(alphas.begin(), alphas.end(), a) == alphas.end()) alphas.push_back(a);
      }
      std::vector<EdgeId> order = cyclic_edges(g_, v, emb_);
      for (int a : alphas) {
        for (int off = 0; off < d; ++off) {
          auto lifted = lift_at(v, order, off, a);
          if (!lifted) continue;
          if (!seen.insert(lifted->first.multiplicity_matrix()).second) continue;
          if (!tick()) return std::nullopt;
          if (quotient_in_N(lifted->first, false, caps_)) continue;
          if (!tick()) return std::nullopt;
          Multigraph rest = delete_vertex(lifted->first, v);
          if (!is_S_good(rest, {}, caps_).good) continue;
          ReductionCertificate c;
          c.clause = 3;
          c.vertex = v;
          c.lifts = lifted->second;
          c.lifted = lifted->first;
          c.source = (d <= 14 && d - a <= 11 && d - 2 * a >= 8)
                         ? "low-degree lifting"
                         : "single-vertex lifting";
          return c;
        }
      }
    }
    return std::nullopt;
  }

 private:
  struct State {
    Multigraph graph;
    std::optional<PlaneEmbedding> embedding;
    std::vector<LiftRecord> lifts;
  };

  bool tick() {
    if (checks_ >= caps_.witness_checks) {
      budget_hit_ = true;
      return false;
    }
    ++checks_;
    return true;
  }

  bool n_good(const Multigraph& h) {
    auto key = h.multiplicity_matrix();
    key.push_back(h.num_vertices());
    auto it = n_good_memo_.find(key);
    if (it != n_good_memo_.end()) return it->second;
    if (!tick()) return false;
    bool r = h.connected() && is_N_good(h, {}, caps_).good;
    n_good_memo_[key] = r;
    return r;
  }

  bool s_good(const Multigraph& h) {
    auto key = h.multiplicity_matrix();
    key.push_back(h.num_vertices());
    auto it = s_good_memo_.find(key);
    if (it != s_good_memo_.end()) return it->second;
    if (!tick()) return false;
    bool r = h.num_vertices() >= 2 && is_S_good(h, {}, caps_).good;
    s_good_memo_[key] = r;
    return r;
  }

  // H on vertex set s of g with multiplicities m per listed pair.
  static Multigraph build(const Multigraph& g, const std::vector<VertexId>& s,
                          const std::vector<std::pair<int, int>>& pairs,
                          const std::vector<int>& m) {
    Multigraph h(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto ids = g.edges_between(s[pairs[i].first], s[pairs[i].second]);
      std::sort(ids.begin(), ids.end());
      for (int j = 0; j < m[i]; ++j) {
        const Edge& e = g.edge(ids[j]);
        int lu = static_cast<int>(std::find(s.begin(), s.end(), e.u) - s.begin());
        int lv = static_cast<int>(std::find(s.begin(), s.end(), e.v) - s.begin());
        h.add_edge_with_id(e.id, lu, lv);
      }
    }
    return h;
  }

  // Clause 1 (proper = true): N-good proper subgraph of g.
  // Clause 2 (proper = false): N-good H with g / V(H) S-good.
  bool find_subgraph(const Multigraph& g, bool proper, ReductionCertificate* out) {
    int n = g.num_vertices();
    if (n > 20) throw CapExceeded("subgraph search limited to 20 vertices");
    std::vector<int> mu = g.multiplicity_matrix();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1U << n); ++m) {
      if (__builtin_popcount(m) >= 2) masks.push_back(m);
    }
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
      return __builtin_popcount(a) < __builtin_popcount(b);
    });
    std::uint32_t all = (1U << n) - 1;
    for (std::uint32_t m : masks) {
      if (!proper && m == all) continue;
      if (!induced_connected(mu, n, m)) continue;
      std::vector<VertexId> s = mask_members(m, n);
      if (!proper) {
        if (!s_good(contract_subset(g, s).graph)) {
          if (budget_hit_) return false;
          continue;
        }
      }
      std::vector<std::pair<int, int>> pairs;
      std::vector<int> full;
      for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(s.size()); ++j) {
          int k = mu[s[i] * n + s[j]];
          if (k > 0) {
            pairs.emplace_back(i, j);
            full.push_back(k);
          }
        }
      }
      auto consider = [&](const std::vector<int>& mult) {
        int edges = 0;
        for (int x : mult) edges += x;
        if (proper && m == all && edges == g.num_edges()) return false;
        Multigraph h = build(g, s, pairs, mult);
        if (!n_good(h)) return false;
        out->subgraph_vertices = s;
        out->subgraph = h;
        out->status = WitnessStatus::kCertificate;
        return true;
      };
      if (s.size() <= 3) {
        std::vector<int> cur = full;
        std::function<bool(std::size_t)> rec = [&](std::size_t i) {
          if (budget_hit_) return false;
          if (i == cur.size()) return consider(cur);
          for (int x = full[i]; x >= 0; --x) {
            cur[i] = x;
            if (rec(i + 1)) return true;
          }
          cur[i] = full[i];
          return false;
        };
        if (rec(0)) return true;
      } else {
        if (consider(full)) return true;
        for (std::size_t i = 0; i < full.size() && !budget_hit_; ++i) {
          std::vector<int> less = full;
          --less[i];
          if (consider(less)) return true;
        }
      }
      if (budget_hit_) return false;
    }
    return false;
  }

  std::optional<ReductionCertificate> from_recipe(const ConfigPattern& p,
                                                  const ConfigMatch& m) {
    State s{g_, emb_ ? std::optional<PlaneEmbedding>(*emb_) : std::nullopt, {}};
    for (const RecipeLift& step : p.recipe) {
      VertexId v = m.assignment[step.v], x = m.assignment[step.x],
               y = m.assignment[step.y];
      const PlaneEmbedding* cur = s.embedding ? &*s.embedding : nullptr;
      auto pick = choose_lift(s.graph, v, x, y, cur);
      if (!pick) return std::nullopt;
      s.lifts.push_back({v, x, y, pick->e1, pick->e2});
      Lifted l = lift_edges(s.graph, v, pick->e1, pick->e2, cur);
      s.graph = std::move(l.graph);
      s.embedding = std::move(l.embedding);
    }
    std::vector<VertexId> t;
    for (const auto& pp : p.target) {
      for (int q : {pp.a, pp.b}) t.push_back(m.assignment[q]);
    }
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (static_cast<int>(t.size()) == s.graph.num_vertices()) return std::nullopt;
    if (!s_good(contract_subset(s.graph, t).graph)) return std::nullopt;
    std::vector<int> mu = s.graph.multiplicity_matrix();
    int n = s.graph.num_vertices();
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> exact, full;
    for (int i = 0; i < static_cast<int>(t.size()); ++i) {
      for (int j = i + 1; j < static_cast<int>(t.size()); ++j) {
        int k = mu[t[i] * n + t[j]];
        if (k == 0) continue;
        int want = 0;
        for (const auto& pp : p.target) {
          VertexId a = m.assignment[pp.a], b = m.assignment[pp.b];
          if ((a == t[i] && b == t[j]) || (a == t[j] && b == t[i])) want = pp.threshold;
        }
        pairs.emplace_back(i, j);
        exact.push_back(std::min(want, k));
        full.push_back(k);
      }
    }
    for (const auto& mult : {exact, full}) {
      Multigraph h = build(s.graph, t, pairs, mult);
      if (!n_good(h)) continue;
      ReductionCertificate c;
      c.status = WitnessStatus::kCertificate;
      c.clause = 2;
      c.lifts = s.lifts;
      c.lifted = s.graph;
      c.subgraph_vertices = t;
      c.subgraph = h;
      c.source = "catalog " + p.name;
      return c;
    }
    return std::nullopt;
  }

  std::vector<State> successors(const State& s) {
    std::vector<State> out;
    const Multigraph& g = s.graph;
    const PlaneEmbedding* emb = s.embedding ? &*s.embedding : nullptr;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      std::vector<LiftChoice> choices;
      if (emb) {
        const auto& rot = emb->rotation(v);
        int d = static_cast<int>(rot.size());
        for (int i = 0; i < d && d >= 2; ++i) {
          EndId a = rot[i], b = rot[(i + 1) % d];
          if (d == 2 && i == 1) break;
          if (end_vertex(g, twin(a)) == end_vertex(g, twin(b))) continue;
          choices.push_back({edge_of_end(a), edge_of_end(b)});
        }
      } else {
        std::vector<VertexId> nb = g.neighbours(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
          for (std::size_t j = i + 1; j < nb.size(); ++j) {
            choices.push_back(*choose_lift(g, v, nb[i], nb[j], nullptr));
          }
        }
      }
      for (const LiftChoice& c : choices) {
        const Edge& a = g.edge(c.e1);
        const Edge& b = g.edge(c.e2);
        State t;
        t.lifts = s.lifts;
        t.lifts.push_back({v, a.other(v), b.other(v), c.e1, c.e2});
        Lifted l = lift_edges(g, v, c.e1, c.e2, emb);
        t.graph = std::move(l.graph);
        t.embedding = std::move(l.embedding);
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  std::optional<std::pair<Multigraph, std::vector<LiftRecord>>> lift_at(
      VertexId v, const std::vector<EdgeId>& order, int off, int alpha) {
    int d = static_cast<int>(order.size());
    Multigraph g = g_;
    std::optional<PlaneEmbedding> emb;
    if (emb_) emb = *emb_;
    std::vector<LiftRecord> lifts;
    for (int j = 0; j < alpha; ++j) {
      EdgeId e1 = order[(off + 2 * j) % d], e2 = order[(off + 2 * j + 1) % d];
      VertexId x = g.edge(e1).other(v), y = g.edge(e2).other(v);
      if (x == y) return std::nullopt;
      lifts.push_back({v, x, y, e1, e2});
      Lifted l = lift_edges(g, v, e1, e2, emb ? &*emb : nullptr);
      g = std::move(l.graph);
      emb = std::move(l.embedding);
    }
    return std::make_pair(g, lifts);
  }

  const Multigraph& g_;
  const PlaneEmbedding* emb_;
  const Caps& caps_;
  std::uint64_t checks_ = 0;
  bool budget_hit_ = false;
  std::map<std::vector<int>, bool> n_good_memo_;
  std::map<std::vector<int>, bool> s_good_memo_;
};

}  // namespace

ReductionCertificate reduction_witness(const Multigraph& g,
                                       const PlaneEmbedding* emb,
                                       const WitnessOptions& options,
                                       const Caps& caps) {
  int n = g.num_vertices();
  require(n >= 2, "graph must have at least two vertices");
  if (n > caps.witness_vertices) {
    throw CapExceeded("witness search limited to " +
                      std::to_string(caps.witness_vertices) + " vertices");
  }
  if (emb) validate_embedding(g, *emb);
  long w = min_weight(g, {}, caps).value;
  if (w < 0) throw InvalidInput("hypothesis violated: w(G) = " + std::to_string(w));
  if (auto p = quotient_in_N(g, false, caps)) {
    throw InvalidInput("hypothesis violated: G/P lies in N for P = " + to_string(*p));
  }
  WitnessSearch search(g, emb, caps);
  ReductionCertificate result;
  for (int clause : options.clauses) {
    std::optional<ReductionCertificate> c;
    if (clause == 4 && n <= 4) {
      c = ReductionCertificate{};
      c->clause = 4;
      c->source = "vertex count";
    } else if (clause == 1) {
      c = search.clause1();
    } else if (clause == 2) {
      c = search.clause2(options.use_catalog);
    } else if (clause == 3) {
      c = search.clause3();
    }
    if (c) {
      c->status = WitnessStatus::kCertificate;
      c->checks = search.checks();
      std::string why;
      if (!verify_reduction_certificate(g, *c, emb, &why, caps)) {
        throw Error("certificate failed re-verification: " + why);
      }
      return *c;
    }
    if (search.budget_hit()) break;
  }
  result.status = WitnessStatus::kExhausted;
  result.checks = search.checks();
  result.note = search.budget_hit() ? "check budget exhausted"
                                    : "bounded search found no certificate";
  return result;
}

bool verify_reduction_certificate(const Multigraph& g,
                                  const ReductionCertificate& cert,
                                  const PlaneEmbedding* emb, std::string* why,
                                  const Caps& caps) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.status != WitnessStatus::kCertificate) return fail("no certificate");
  if (cert.clause == 4) {
    return g.num_vertices() <= 4 ? true : fail("more than four vertices");
  }
  Multigraph cur = g;
  std::optional<PlaneEmbedding> cur_emb;
  if (emb) cur_emb = *emb;
  try {
    for (const LiftRecord& r : cert.lifts) {
      if (cert.clause == 3 && r.v != cert.vertex) return fail("lift away from v");
      Lifted l = replay_lift(cur, r, cur_emb ? &*cur_emb : nullptr);
      cur = std::move(l.graph);
      cur_emb = std::move(l.embedding);
    }
  } catch (const Error& e) {
    return fail(std::string("lift replay: ") + e.what());
  }
  if (!cert.lifts.empty() && !cur.same_multigraph(cert.lifted)) {
    return fail("lifted graph differs");
  }
  if (cert.clause == 1 || cert.clause == 2) {
    if (cert.clause == 1 && !cert.lifts.empty()) return fail("subgraph clause with lifts");
    if (cert.clause == 2 && cert.lifts.empty()) return fail("lifting clause without lifts");
    const Multigraph& h = cert.subgraph;
    if (!is_subgraph_by_ids(h, cert.subgraph_vertices, cur)) return fail("not a subgraph");
    if (h.num_vertices() < 2 || !h.connected()) return fail("subgraph not connected");
    if (!is_N_good(h, {}, caps).good) return fail("subgraph not N-good");
    if (cert.clause == 1) {
      if (h.num_vertices() == g.num_vertices() && h.num_edges() == g.num_edges()) {
        return fail("subgraph not proper");
      }
      return true;
    }
    if (h.num_vertices() == cur.num_vertices()) return fail("subgraph spans G'");
    Multigraph q = contract_subset(cur, cert.subgraph_vertices).graph;
    if (!is_S_good(q, {}, caps).good) return fail("quotient not S-good");
    return true;
  }
  if (cert.clause == 3) {
    if (cert.lifts.empty()) return fail("no lifting at v");
    if (quotient_in_N(cur, false, caps)) return fail("a quotient of G'' lies in N");
    if (!is_S_good(delete_vertex(cur, cert.vertex), {}, caps).good) {
      return fail("G'' - v not S-good");
    }
    return true;
  }
  return fail("unknown clause");
}

namespace {

class ModularSolver {
 public:
  ModularSolver(const SolverConstants& c, const Caps& caps, SolveReport& report)
      : c_(c), caps_(caps), report_(report) {}

  std::optional<Orientation> solve(const Multigraph& g, const PlaneEmbedding* emb,
                                   int depth) {
    std::string pad(2 * depth, ' ');
    if (g.num_edges() == 0) return Orientation{};
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) > 0) keep.push_back(v);
    }
    if (static_cast<int>(keep.size()) < g.num_vertices()) {
      Multigraph h = induced_subgraph(g, keep);
      std::optional<PlaneEmbedding> he;
      if (emb) he = restrict_embedding(*emb, keep);
      auto d = solve(h, he ? &*he : nullptr, depth);
      if (!d) return std::nullopt;
      return transfer_by_id(h, *d, g);
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      int d = g.degree(v);
      if (d % 2 != 0 || d >= c_.lambda) continue;
      return split(g, emb, v, depth);
    }
    if (edge_connectivity(g).value >= c_.lambda) {
      report_.trace.push_back(pad + "direct on " + std::to_string(g.num_vertices()) +
                              " vertices, " + std::to_string(g.num_edges()) + " edges");
      auto d = modular_orientation(g, c_.modulus, caps_);
      if (!d) return fail("direct orientation of a highly connected graph");
      return d;
    }
    auto cut = smallest_cut_below(g, c_.lambda, caps_);
    if (!cut) return fail("small cut search");
    const std::vector<VertexId>& x = cut->side;
    report_.trace.push_back(pad + "shore " + set_string(x) + " with d(X) = " +
                            std::to_string(cut->value));
    if (x.size() < 2) return fail("minimal shore has one vertex");
    Multigraph h = induced_subgraph(g, x);
    if (!h.connected()) return fail("minimal shore is disconnected");
    if (c_.modulus == 9 && c_.lambda == 23) {
      long w = min_weight(h, {}, caps_).value;
      if (w < 19) return fail("weight of the minimal shore below 19");
    }
    if (!is_strongly_zk_connected(h, c_.modulus, caps_).member) {
      return fail("minimal shore is not strongly Z_" + std::to_string(c_.modulus) +
                  "-connected");
    }
    Contraction con = contract_subset(g, x, emb);
    auto inner = solve(con.graph, con.embedding ? &*con.embedding : nullptr, depth + 1);
    if (!inner) return std::nullopt;
    auto d = extend_by_contraction(g, x, *inner,
                                   std::vector<int>(g.num_vertices(), 0),
                                   c_.modulus, caps_);
    if (!d) return fail("extension across the contracted shore");
    return d;
  }

 private:
  std::optional<Orientation> split(const Multigraph& g, const PlaneEmbedding* emb,
                                   VertexId v, int depth) {
    std::string pad(2 * depth, ' ');
    int d = g.degree(v);
    Multigraph next;
    std::optional<PlaneEmbedding> next_emb;
    EdgeId e1, e2;
    if (d == 2) {
      auto inc = cyclic_edges(g, v, emb);
      e1 = inc[0];
      e2 = inc[1];
      Lifted l = split_off(g, v, e1, e2, emb);
      next = std::move(l.graph);
      next_emb = std::move(l.embedding);
    } else {
      SplitResult s = zhang_split(g, v, emb, caps_);
      if (!s.found) return fail("no split pair at vertex " + std::to_string(v));
      e1 = s.e1;
      e2 = s.e2;
      next = std::move(s.graph);
      next_emb = std::move(s.embedding);
    }
    int lam = odd_edge_connectivity(next, caps_).value;
    if (lam < c_.lambda) {
      return fail("split at vertex " + std::to_string(v) + " lowered the odd-edge-connectivity");
    }
    report_.trace.push_back(pad + "split " + std::to_string(e1) + "," + std::to_string(e2) +
                            " at vertex " + std::to_string(v) + " (degree " +
                            std::to_string(d) + ")");
    auto inner = solve(next, next_emb ? &*next_emb : nullptr, depth + 1);
    if (!inner) return std::nullopt;
    VertexId x = g.edge(e1).other(v), y = g.edge(e2).other(v);
    VertexId from = x;
    for (int i = 0; i < next.num_edges(); ++i) {
      const Edge& e = next.edges()[i];
      if (!g.has_edge(e.id)) from = inner->tail(e, i);
    }
    Orientation out;
    out.reversed.assign(g.num_edges(), 0);
    for (int i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edges()[i];
      if (e.id == e1 || e.id == e2) {
        VertexId tail = (e.id == e1) == (from == x) ? e.other(v) : v;
        out.reversed[i] = tail != e.u;
      } else {
        out.reversed[i] = inner->reversed[next.index_of(e.id)];
      }
    }
    (void)y;
    return out;
  }

  std::optional<Orientation> fail(const std::string& step) {
    if (report_.failed_step.empty()) report_.failed_step = step;
    return std::nullopt;
  }

  SolverConstants c_;
  const Caps& caps_;
  SolveReport& report_;
};

}  // namespace

SolveReport solve_modular_9(const Multigraph& g, const PlaneEmbedding* emb,
                            const SolverConstants& constants, const Caps& caps) {
  require(constants.modulus >= 3 && constants.modulus % 2 == 1,
          "modulus must be odd and at least 3");
  if (emb) validate_embedding(g, *emb);
  int lam = odd_edge_connectivity(g, caps).value;
  require(lam >= constants.lambda,
          "odd-edge-connectivity " + std::to_string(lam) + " is below " +
              std::to_string(constants.lambda));
  SolveReport report;
  ModularSolver solver(constants, caps, report);
  auto d = solver.solve(g, emb, 0);
  if (d) {
    if (!is_beta_orientation(g, *d, std::vector<int>(g.num_vertices(), 0),
                             constants.modulus)) {
      report.failed_step = "final verification";
      return report;
    }
    report.ok = true;
    report.orientation = d;
  }
  return report;
}

}  // namespace orient9
