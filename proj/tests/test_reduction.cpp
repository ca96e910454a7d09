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


#include <doctest.h>

#include <set>

#include "orient9/errors.hpp"
#include "orient9/generators.hpp"
#include "orient9/graph_ops.hpp"
#include "orient9/oracles.hpp"
#include "orient9/reduction.hpp"

using namespace orient9;

namespace {

std::vector<std::array<int, 3>> pattern_triples(const ConfigPattern& p) {
  std::vector<std::array<int, 3>> out;
  for (const auto& pp : p.pairs) out.push_back({pp.a, pp.b, pp.threshold});
  return out;
}

Multigraph from_pairs(int n, const std::vector<std::array<int, 3>>& pairs) {
  Multigraph g(n);
  for (const auto& [a, b, m] : pairs) {
    for (int i = 0; i < m; ++i) g.add_edge(a, b);
  }
  return g;
}

// T_{1,1,7} on x = 0, y = 1, v = 2 plus random edges touching 3..n-1.
std::optional<Multigraph> t117_host(Rng& rng, int n) {
  Multigraph g = from_pairs(n, {{0, 1, 7}, {0, 2, 1}, {2, 1, 1}});
  for (int a = 0; a < n; ++a) {
    for (int b = std::max(a + 1, 3); b < n; ++b) {
      int m = static_cast<int>(rng() % 9);
      for (int i = 0; i < m; ++i) g.add_edge(a, b);
    }
  }
  if (!g.connected() || min_weight(g).value < 0 || quotient_in_N(g)) return std::nullopt;
  return g;
}

}  // namespace

TEST_CASE("detector agrees with the brute-force matcher") {
  Rng rng(11);
  const auto& catalog = default_catalog();
  int matched = 0;
  for (int i = 0; i < 1000; ++i) {
    int n = 2 + i % 5;
    Multigraph g = random_multigraph(rng, n, 8, 0.7);
    for (const ConfigPattern& p : catalog) {
      if (p.num_vertices() > n) continue;
      std::set<std::vector<std::array<int, 3>>> got;
      for (const ConfigMatch& m : detect_config(g, p)) {
        got.insert(match_key(p, m.assignment));
        for (const auto& [a, b, t] : match_key(p, m.assignment)) {
          int have = 0;
          for (EdgeId e : m.edges) {
            const Edge& ed = g.edge(e);
            if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) ++have;
          }
          CHECK(have == t);
        }
      }
      auto want = oracle::config_matches(g, p.num_vertices(), pattern_triples(p));
      CHECK(got == want);
      matched += static_cast<int>(got.size());
    }
  }
  CHECK(matched > 0);
}

TEST_CASE("detector on named instances") {
  const auto& catalog = default_catalog();
  Multigraph t117 = find_pattern(catalog, "T117").instance();
  CHECK(detect_config(t117, "T117").size() == 1);
  Multigraph t118 = multi_triangle(8, 1, 1);
  CHECK(detect_config(t118, "T117").size() == 1);
  CHECK(detect_config(t118, "8K2").size() == 1);
  CHECK(detect_config(multi_k2(7), "8K2").empty());
  CHECK_THROWS_AS(detect_config(t117, "nope"), InvalidInput);
  CHECK_FALSE(detect_config(t117, "all").empty());
}

TEST_CASE("catalog recipes reach their targets") {
  for (const ConfigPattern& p : default_catalog()) {
    if (p.recipe.empty()) continue;
    CAPTURE(p.name);
    Multigraph g = p.instance();
    ConfigMatch identity{p.name, {}, {}};
    for (int i = 0; i < p.num_vertices(); ++i) identity.assignment.push_back(i);
    auto out = apply_recipe(g, p, identity);
    REQUIRE(out.has_value());
    CHECK(out->target_met);
    CHECK(g.num_edges() - out->graph.num_edges() == static_cast<int>(p.recipe.size()));
  }
  const ConfigPattern& f = find_pattern(default_catalog(), "F");
  CHECK(f.recipe.size() == 4);
  std::multiset<int> mults;
  for (const auto& t : f.target) mults.insert(t.threshold);
  CHECK(mults == std::multiset<int>{5, 5, 6});
}

TEST_CASE("catalog text round trip") {
  auto parsed = parse_catalog(default_catalog_text());
  CHECK(parsed.size() == default_catalog().size());
  auto again = parse_catalog(serialize_catalog(parsed));
  REQUIRE(again.size() == parsed.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(again[i].name == parsed[i].name);
    CHECK(again[i].forbidden == parsed[i].forbidden);
    CHECK(again[i].instance().same_multigraph(parsed[i].instance()));
    CHECK(again[i].recipe.size() == parsed[i].recipe.size());
    CHECK(again[i].target.size() == parsed[i].target.size());
  }
  CHECK_THROWS_AS(parse_catalog("pattern X forbidden\nvertices a b\npair a c 2\nend\n"),
                  ParseError);
}

TEST_CASE("gap thresholds") {
  const auto& t = gap_thresholds();
  std::vector<int> values;
  for (const auto& g : t) values.push_back(g.threshold);
  CHECK(values == std::vector<int>{9, 16, 18, 20, 25, 32});

  for (int alpha = 8; alpha <= 12; ++alpha) {
    for (int c = 1; c <= 6; ++c) {
      // alpha K_2 on {0,1}, vertex 2 joined by c edges to each end.
      Multigraph g = from_pairs(3, {{0, 1, alpha}, {0, 2, c}, {1, 2, c}});
      Partition p = Partition::from_blocks(3, {{0, 1}, {2}});
      GapResult r = gap_lemma_extract(g, p);
      CHECK(r.threshold == 9);
      CHECK(r.weight == 4 * c - 4);
      CHECK(r.applicable == (4 * c - 4 < 9));
      if (r.applicable) {
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->num_edges() == alpha);
      }
    }
  }
  Multigraph k4 = from_pairs(4, {{0, 1, 9}, {0, 2, 9}, {0, 3, 1}, {1, 2, 9}, {1, 3, 1}, {2, 3, 1}});
  GapResult r = gap_lemma_extract(k4, Partition::from_blocks(4, {{0, 1, 2}, {3}}));
  CHECK(r.threshold == 16);
  CHECK(r.weight == 2);
  CHECK(r.applicable);
  CHECK(r.witness.has_value());
  CHECK_THROWS(gap_lemma_extract(k4, Partition::trivial(4)));
}

TEST_CASE("splitting keeps the odd-edge-connectivity") {
  Rng rng(23);
  int instances = 0, falsified = 0;
  while (instances < 10000) {
    int n = 2 + static_cast<int>(rng() % 5);
    Multigraph g = random_multigraph(rng, n, 5, 0.8);
    int lambda = odd_edge_connectivity(g).value;
    for (VertexId v = 0; v < n; ++v) {
      int d = g.degree(v);
      if (d < 3 || d == lambda) continue;
      SplitResult s = zhang_split(g, v);
      ++instances;
      if (!s.found) {
        ++falsified;
        continue;
      }
      CHECK(odd_edge_connectivity(s.graph).value == lambda);
      CHECK(s.graph.num_edges() >= g.num_edges() - 2);
      break;
    }
  }
  CHECK(falsified == 0);
}

TEST_CASE("splitting with a rotation order") {
  Rng rng(7);
  int done = 0;
  for (int i = 0; i < 300; ++i) {
    EmbeddedGraph eg = random_plane_multigraph(rng, 3 + i % 4, 4 + i % 5);
    int lambda = odd_edge_connectivity(eg.graph).value;
    for (VertexId v = 0; v < eg.graph.num_vertices(); ++v) {
      int d = eg.graph.degree(v);
      if (d < 3 || d == lambda) continue;
      SplitResult s = zhang_split(eg.graph, v, &eg.embedding);
      REQUIRE(s.found);
      REQUIRE(s.embedding.has_value());
      validate_embedding(s.graph, *s.embedding);
      CHECK(odd_edge_connectivity(s.graph).value == lambda);
      ++done;
    }
  }
  CHECK(done > 100);
}

TEST_CASE("splitting preconditions and a degree-24 vertex") {
  Multigraph g = from_pairs(4, {{0, 1, 8}, {0, 2, 8}, {0, 3, 8}, {1, 2, 8}, {1, 3, 7}, {2, 3, 8}});
  CHECK(g.degree(0) == 24);
  REQUIRE(odd_edge_connectivity(g).value == 23);
  SplitResult s = zhang_split(g, 0);
  REQUIRE(s.found);
  CHECK(odd_edge_connectivity(s.graph).value == 23);
  CHECK_THROWS_AS(zhang_split(multi_cycle({1, 1, 1}), 0), InvalidInput);
  CHECK_THROWS_AS(zhang_split(g, 1), InvalidInput);
}

TEST_CASE("witness on four vertices") {
  Multigraph g = from_pairs(4, {{0, 1, 8}, {0, 2, 8}, {0, 3, 8}, {1, 2, 8}, {1, 3, 8}, {2, 3, 8}});
  ReductionCertificate c = reduction_witness(g);
  CHECK(c.status == WitnessStatus::kCertificate);
  CHECK(c.clause == 4);
  CHECK(verify_reduction_certificate(g, c));
}

TEST_CASE("witness on T117 hosts") {
  Rng rng(1);
  int found = 0;
  for (int i = 0; i < 400 && found < 6; ++i) {
    auto g = t117_host(rng, 5 + i % 2);
    if (!g) continue;
    ++found;
    ReductionCertificate any = reduction_witness(*g);
    REQUIRE(any.status == WitnessStatus::kCertificate);
    CHECK(verify_reduction_certificate(*g, any));

    WitnessOptions only2;
    only2.clauses = {2};
    ReductionCertificate c = reduction_witness(*g, nullptr, only2);
    REQUIRE(c.status == WitnessStatus::kCertificate);
    CHECK(c.clause == 2);
    CHECK(c.source == "catalog T117");
    REQUIRE(c.lifts.size() == 1);
    CHECK(c.subgraph.num_edges() == 8);
    std::string why;
    CHECK(verify_reduction_certificate(*g, c, nullptr, &why));

    ReductionCertificate bad = c;
    bad.lifts[0].e1 = bad.lifts[0].e2;
    CHECK_FALSE(verify_reduction_certificate(*g, bad, nullptr, &why));
    bad = c;
    bad.subgraph_vertices = {3, 4};
    CHECK_FALSE(verify_reduction_certificate(*g, bad, nullptr, &why));

    only2.use_catalog = false;
    ReductionCertificate generic = reduction_witness(*g, nullptr, only2);
    if (generic.status == WitnessStatus::kCertificate) {
      CHECK(generic.clause == 2);
      CHECK(verify_reduction_certificate(*g, generic));
    }
  }
  CHECK(found >= 3);
}

TEST_CASE("witness hypotheses and budget") {
  CHECK_THROWS_AS(reduction_witness(multi_k2(7)), InvalidInput);
  CHECK_THROWS_AS(reduction_witness(multi_triangle(2, 2, 2)), InvalidInput);
  Rng rng(1);
  std::optional<Multigraph> g;
  while (!g) g = t117_host(rng, 6);
  Caps caps;
  caps.witness_checks = 0;
  WitnessOptions o;
  o.clauses = {1, 2, 3};
  ReductionCertificate c = reduction_witness(*g, nullptr, o, caps);
  CHECK(c.status == WitnessStatus::kExhausted);
  CHECK(c.note == "check budget exhausted");
  caps = Caps{};
  caps.witness_vertices = 5;
  CHECK_THROWS_AS(reduction_witness(*g, nullptr, o, caps), CapExceeded);
}

TEST_CASE("subgraph by ids") {
  Multigraph g = from_pairs(3, {{0, 1, 2}, {1, 2, 1}});
  Multigraph h = induced_subgraph(g, {1, 2});
  CHECK(is_subgraph_by_ids(h, {1, 2}, g));
  CHECK_FALSE(is_subgraph_by_ids(h, {0, 2}, g));
  CHECK_FALSE(is_subgraph_by_ids(h, {1}, g));
}

TEST_CASE("modular 9 solver on 23K2 and relatives") {
  SolveReport r = solve_modular_9(multi_k2(23));
  REQUIRE(r.ok);
  CHECK(is_beta_orientation(multi_k2(23), *r.orientation, {0, 0}, 9));
  CHECK_FALSE(r.trace.empty());

  // Two 23K_2 blocks joined by 23 edges form a chain with all cuts 23.
  Multigraph chain = from_pairs(3, {{0, 1, 23}, {1, 2, 23}});
  r = solve_modular_9(chain);
  REQUIRE(r.ok);
  CHECK(is_beta_orientation(chain, *r.orientation, {0, 0, 0}, 9));

  // An even vertex of degree 2 is split away first.
  Multigraph path = from_pairs(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 23}});
  r = solve_modular_9(path);
  REQUIRE(r.ok);
  CHECK(is_beta_orientation(path, *r.orientation, {0, 0, 0}, 9));

  CHECK_THROWS_AS(solve_modular_9(multi_k2(21)), InvalidInput);
}

TEST_CASE("scaled solver agrees with the direct orientation search") {
  Rng rng(5);
  int compared = 0, agreed = 0, attempts = 0;
  while (compared < 50 && attempts < 20000) {
    ++attempts;
    int n = 3 + static_cast<int>(rng() % 5);
    EmbeddedGraph base = random_plane_multigraph(rng, n, static_cast<int>(rng() % 4));
    Multigraph g(n);
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : base.graph.edges()) {
      auto key = std::minmax(e.u, e.v);
      if (!seen.insert(key).second) continue;
      int m = 3 + static_cast<int>(rng() % 7);
      for (int i = 0; i < m; ++i) g.add_edge(e.u, e.v);
    }
    if (odd_edge_connectivity(g).value < 11) continue;
    ++compared;
    SolveReport r = solve_modular_9(g, nullptr, SolverConstants::scaled());
    bool direct = modular_orientation(g, 5).has_value();
    CAPTURE(r.failed_step);
    CHECK(r.ok == direct);
    if (r.ok) {
      CHECK(is_beta_orientation(g, *r.orientation, std::vector<int>(n, 0), 5));
      ++agreed;
    }
  }
  CHECK(compared == 50);
  CHECK(agreed == compared);
}
