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

#include <algorithm>
#include <numeric>

#include "orient9/errors.hpp"
#include "orient9/generators.hpp"
#include "orient9/graph_ops.hpp"
#include "orient9/oracles.hpp"
#include "orient9/partition.hpp"

using namespace orient9;

namespace {

Multigraph six_c4_plus() {
  return Multigraph::from_multiplicities(
      4, {{0, 1, 7}, {1, 2, 6}, {2, 3, 6}, {3, 0, 6}});
}

Multigraph relabel(const Multigraph& g, const std::vector<int>& perm) {
  Multigraph h(g.num_vertices());
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

}  // namespace

TEST_CASE("trivial partition weight is 2e - 23v + 42") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    Multigraph g = random_multigraph(rng, 2 + i % 6, 5, 0.6);
    CHECK(weight_of_partition(g, Partition::trivial(g.num_vertices())) ==
          2L * g.num_edges() - 23L * g.num_vertices() + 42);
  }
  CHECK(weight_of_partition(multi_k2(8), Partition::trivial(2)) == 12);
  CHECK(weight_of_partition(multi_triangle(2, 7, 7), Partition::trivial(3)) == 5);
}

TEST_CASE("minimum weight of small families") {
  for (int a = 1; a <= 20; ++a) CHECK(min_weight(multi_k2(a)).value == 2 * a - 4);
  for (int a = 1; a <= 8; ++a) {
    for (int b = a; b <= 8; ++b) {
      for (int c = b; c <= 8; ++c) {
        CHECK(min_weight(multi_triangle(a, b, c)).value ==
              std::min(2 * (a + b + c) - 27,
                       2 * std::min({a + b, b + c, a + c}) - 4));
      }
    }
  }
  CHECK(min_weight(six_c4_plus()).value == 0);
}

TEST_CASE("4-vertex graphs without an 8-fold edge weigh 2e - 50") {
  Rng rng(5);
  int seen = 0;
  while (seen < 40) {
    Multigraph g = random_multigraph(rng, 4, 7, 1.0);
    if (g.min_degree() < 8) continue;
    ++seen;
    CHECK(min_weight(g).value == 2L * g.num_edges() - 50);
  }
}

TEST_CASE("branch and bound agrees with the naive enumerator") {
  Rng rng(2026);
  for (int i = 0; i < 300; ++i) {
    int n = 2 + i % 6;
    Multigraph g = random_multigraph(rng, n, 9, 0.7);
    MinWeight m = min_weight(g);
    CHECK(m.value == oracle::min_weight(g));
    CHECK(weight_of_partition(g, m.argmin) == m.value);
    CHECK(m.argmin.num_blocks() >= 2);
  }
}

TEST_CASE("min_weight enforces the vertex cap") {
  Caps caps;
  caps.partition_vertices = 3;
  CHECK_THROWS_AS(min_weight(multi_cycle({1, 1, 1, 1}), {}, caps), CapExceeded);
}

TEST_CASE("family membership") {
  CHECK(classify_family(multi_k2(7)) == Family::kN);
  CHECK(classify_family(multi_k2(8)) == Family::kWStar);
  CHECK(classify_family(multi_k2(9)) == Family::kNeither);
  CHECK(classify_family(multi_triangle(2, 7, 7)) == Family::kWStar);
  CHECK(classify_family(multi_triangle(1, 7, 8)) == Family::kNeither);
  CHECK(classify_family(multi_triangle(5, 5, 5)) == Family::kN);
  CHECK(classify_family(six_c4_plus()) == Family::kNeither);
}

TEST_CASE("family membership is invariant under relabelling") {
  std::vector<int> perm = {0, 1, 2};
  Multigraph t = multi_triangle(2, 7, 7);
  do {
    CHECK(classify_family(relabel(t, perm)) == Family::kWStar);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("goodness of named graphs") {
  CHECK(is_N_good(multi_triangle(2, 7, 7)).good);
  GoodnessReport s = is_S_good(multi_triangle(2, 7, 7));
  CHECK_FALSE(s.good);
  CHECK(s.witness.has_value());
  CHECK(is_N_good(six_c4_plus()).good);
  CHECK_FALSE(is_N_good(multi_k2(7)).good);
  CHECK(is_S_good(multi_k2(9)).good);
}

TEST_CASE("every W* graph is N-good") {
  CHECK(is_N_good(multi_k2(8)).good);
  int count = 0;
  for (int a = 1; a <= 16; ++a) {
    for (int b = a; a + b <= 16; ++b) {
      int c = 16 - a - b;
      if (c < b) continue;
      Multigraph t = multi_triangle(a, b, c);
      if (t.min_degree() < 9) continue;
      ++count;
      CHECK(classify_family(t) == Family::kWStar);
      CHECK(is_N_good(t).good);
    }
  }
  CHECK(count > 0);
}

TEST_CASE("every S-good graph is N-good") {
  Rng rng(9);
  int s_good = 0;
  for (int i = 0; i < 200; ++i) {
    Multigraph g = random_multigraph(rng, 2 + i % 4, 12, 0.9);
    if (is_S_good(g).good) {
      ++s_good;
      CHECK(is_N_good(g).good);
    }
  }
  CHECK(s_good > 0);
}

TEST_CASE("refinement identity on random triples") {
  Rng rng(77);
  int checked = 0;
  while (checked < 10000) {
    int n = 3 + checked % 8;
    Multigraph g = random_multigraph(rng, n, 6, 0.5);
    Partition p = random_partition(rng, n, 1 + n / 2);
    if (p.num_blocks() < 2) continue;
    auto blocks = p.blocks();
    int b = static_cast<int>(rng() % blocks.size());
    int sz = static_cast<int>(blocks[b].size());
    Partition q = sz >= 2 ? random_partition(rng, sz, sz) : Partition::trivial(1);
    if (sz >= 2 && q.num_blocks() < 2) q = Partition::trivial(sz);
    if (sz < 2) continue;
    RefinementCheck r = refinement_identity(g, p, b, q);
    CHECK(r.holds);
    CHECK(r.lhs == r.rhs);
    ++checked;
  }
}

TEST_CASE("refinement with a trivial inner partition") {
  Multigraph g = multi_triangle(3, 4, 5);
  Partition p = Partition::from_blocks(3, {{0, 1}, {2}});
  RefinementCheck r = refinement_identity(g, p, 0, Partition::trivial(2));
  CHECK(r.holds);
  CHECK(r.lhs == 2 * 3 - 46 + 42);
}

TEST_CASE("bound clauses never contradict direct classification") {
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    int n = 2 + i % 7;
    Multigraph g = random_multigraph(rng, n, 10, 0.6);
    Partition p = random_partition(rng, n, n);
    if (p.num_blocks() < 2) continue;
    BoundCheck b = partition_bound_check(g, p);
    CHECK(b.consistent);
  }
}

TEST_CASE("contraction never lowers the minimum weight") {
  Rng rng(101);
  for (int i = 0; i < 1000; ++i) {
    int n = 3 + i % 5;
    Multigraph g = random_multigraph(rng, n, 8, 0.7);
    std::vector<int> s;
    for (int v = 0; v < n; ++v) {
      if (rng() % 2) s.push_back(v);
    }
    if (s.size() < 2 || static_cast<int>(s.size()) == n) continue;
    if (!induced_subgraph(g, s).connected()) continue;
    Multigraph q = contract_subset(g, s).graph;
    CHECK(min_weight(q).value >= min_weight(g).value);
  }
}

TEST_CASE("partition normalisation and enumeration") {
  Partition p({3, 3, 1, 0});
  CHECK(p.labels() == std::vector<int>{0, 0, 1, 2});
  CHECK(p.sorted_sizes() == std::vector<int>{2, 1, 1});
  long bell = 0;
  for_each_partition(6, 6, [&](const std::vector<int>&) {
    ++bell;
    return true;
  });
  CHECK(bell == 203);
}
