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

#include "orient9/errors.hpp"
#include "orient9/generators.hpp"
#include "orient9/graph_ops.hpp"
#include "orient9/hom_flow.hpp"
#include "orient9/oracles.hpp"

using namespace orient9;

namespace {

Multigraph simple_cycle(int n) { return multi_cycle(std::vector<int>(n, 1)); }

bool same_up_to_symmetry(const HomMap& a, const HomMap& b) {
  int p = 2 * a.k + 1;
  for (int sign : {1, -1}) {
    for (int shift = 0; shift < p; ++shift) {
      bool ok = true;
      for (std::size_t v = 0; v < a.image.size() && ok; ++v) {
        ok = ((sign * a.image[v] + shift) % p + p) % p == b.image[v];
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("cycle homomorphisms") {
  HomResult id = find_homomorphism(simple_cycle(9), 4);
  CHECK(id.status == HomStatus::kFound);
  HomResult c23 = find_homomorphism(simple_cycle(23), 4);
  REQUIRE(c23.status == HomStatus::kFound);
  CHECK(is_homomorphism(simple_cycle(23), *c23.map));
}

TEST_CASE("short odd cycles never map to longer ones") {
  for (int k = 1; k <= 6; ++k) {
    for (int g = 3; g <= 13; g += 2) {
      HomResult r = find_homomorphism(simple_cycle(g), k);
      CHECK((r.status == HomStatus::kFound) == (g >= 2 * k + 1));
    }
  }
}

TEST_CASE("solver agrees with the brute-force oracle") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Multigraph g = random_multigraph(rng, 3 + i % 5, 2, 0.4);
    for (int k : {1, 2}) {
      HomResult r = find_homomorphism(g, k);
      CHECK((r.status == HomStatus::kFound) == oracle::has_cycle_hom(g, k));
      if (r.map) CHECK(is_homomorphism(g, *r.map));
    }
  }
}

TEST_CASE("node budget is reported separately") {
  Caps caps;
  caps.hom_nodes = 0;
  HomResult r = find_homomorphism(gadget(3).graph, 3, caps);
  CHECK(r.status == HomStatus::kBudget);
}

TEST_CASE("tightness gadget") {
  for (int k = 1; k <= 4; ++k) {
    EmbeddedGraph eg = gadget(k);
    CHECK(eg.graph.num_vertices() == 4 * k + (4 * k - 1) * (2 * k - 2));
    CHECK(odd_girth(eg.graph).length == 4 * k - 1);
    CHECK_NOTHROW(validate_embedding(eg.graph, eg.embedding));
    CHECK(find_homomorphism(eg.graph, k).status == HomStatus::kNone);
  }
  CHECK(gadget(1).graph.num_vertices() == 4);
  CHECK(gadget(2).graph.num_vertices() == 22);
  CHECK(gadget(4).graph.num_vertices() == 106);
}

TEST_CASE("triangle dual flow") {
  EmbeddedGraph eg = embedded_cycle(3);
  DualGraph d = dual(eg.graph, eg.embedding);
  HomMap phi{1, {0, 1, 2}};
  CircularFlow f = hom_to_dual_flow(eg.graph, d, phi);
  CHECK(d.graph.num_vertices() == 2);
  for (int v : f.value) CHECK(std::abs(v) == 1);
  CHECK(check_circular_flow(d.graph, f).valid);
}

TEST_CASE("dual flow round trip on random plane graphs") {
  Rng rng(55);
  int done = 0;
  for (int i = 0; i < 400 && done < 50; ++i) {
    EmbeddedGraph eg = random_subdivided_plane_graph(rng, 5, 3, 4);
    HomResult r = find_homomorphism(eg.graph, 4);
    if (r.status != HomStatus::kFound) continue;
    ++done;
    DualGraph d = dual(eg.graph, eg.embedding);
    CircularFlow f = hom_to_dual_flow(eg.graph, d, *r.map);
    CHECK(check_circular_flow(d.graph, f).valid);
    for (int v : f.value) CHECK(std::abs(v) == 4);
    HomMap back = dual_flow_to_hom(eg.graph, d, f, 4);
    CHECK(is_homomorphism(eg.graph, back));
    CHECK(same_up_to_symmetry(*r.map, back));
  }
  CHECK(done == 50);
}

TEST_CASE("invalid flows are rejected") {
  EmbeddedGraph eg = embedded_cycle(9);
  DualGraph d = dual(eg.graph, eg.embedding);
  HomMap phi{4, {0, 1, 2, 3, 4, 5, 6, 7, 8}};
  CircularFlow f = hom_to_dual_flow(eg.graph, d, phi);
  f.value[0] = 3;
  CHECK_FALSE(check_circular_flow(d.graph, f).valid);
  CHECK_THROWS_AS(dual_flow_to_hom(eg.graph, d, f, 4), InvalidInput);
  HomMap bad{4, {0, 0, 2, 3, 4, 5, 6, 7, 8}};
  CHECK_THROWS_AS(hom_to_dual_flow(eg.graph, d, bad), InvalidInput);
}

TEST_CASE("Jaeger conversions") {
  Multigraph g = multi_k2(9);
  Orientation same;
  same.reversed.assign(9, 0);
  CircularFlow f = orientation_to_flow(g, same, 4);
  CHECK(check_circular_flow(g, f).valid);
  for (int v : f.value) CHECK(v == 4);
  CHECK(net_outdegree(g, same)[0] == 9);
  Orientation back = flow_to_orientation(g, f, 4);
  CHECK(is_beta_orientation(g, back, {0, 0}, 9));

  Multigraph c9 = multi_cycle(std::vector<int>(9, 1));
  Orientation around;
  around.reversed.assign(9, 0);
  CircularFlow fc = orientation_to_flow(c9, around, 4);
  for (int x : net_outdegree(c9, around)) CHECK(x == 0);
  CHECK(check_circular_flow(c9, fc).valid);
}

TEST_CASE("Jaeger round trip on random multigraphs") {
  Rng rng(71);
  int done = 0;
  for (int i = 0; i < 2000 && done < 100; ++i) {
    Multigraph g = random_multigraph(rng, 2 + i % 5, 6, 0.7);
    if (g.num_edges() > 20) continue;
    auto d = modular_orientation(g, 9);
    if (!d) continue;
    ++done;
    CircularFlow f = orientation_to_flow(g, *d, 4);
    CHECK(check_circular_flow(g, f).valid);
    for (int j = 0; j < g.num_edges(); ++j) {
      if (rng() % 2) {
        f.orientation.reversed[j] ^= 1;
        f.value[j] = -f.value[j];
      }
      if (rng() % 3 == 0) f.value[j] += f.value[j] > 0 ? -9 : 9;
    }
    Orientation back = flow_to_orientation(g, f, 4);
    CHECK(is_beta_orientation(g, back, std::vector<int>(g.num_vertices(), 0), 9));
  }
  CHECK(done == 100);
}

TEST_CASE("out-of-range flow values are rejected") {
  Multigraph g = multi_k2(3);
  CircularFlow f = orientation_to_flow(g, Orientation{{0, 0, 0}}, 4);
  f.value[1] = 2;
  CHECK_THROWS_AS(flow_to_orientation(g, f, 4), InvalidInput);
}
