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

#include "orient9/embedding.hpp"
#include "orient9/errors.hpp"
#include "orient9/generators.hpp"
#include "orient9/graph_ops.hpp"
#include "orient9/oracles.hpp"

using namespace orient9;

TEST_CASE("contracting one side of T_{2,7,7} leaves 14 parallel edges") {
  Multigraph t = multi_triangle(2, 7, 7);
  Contraction c = contract_subset(t, {0, 1});
  CHECK(c.graph.num_vertices() == 2);
  CHECK(c.graph.multiplicity(0, 1) == 14);
  CHECK(c.old_to_new == std::vector<int>{0, 0, 1});
}

TEST_CASE("contraction keeps the ids of surviving edges") {
  Multigraph t = multi_triangle(1, 2, 3);
  Contraction c = contract_subset(t, {1, 2});
  for (const Edge& e : c.graph.edges()) {
    const Edge& orig = t.edge(e.id);
    CHECK(c.old_to_new[orig.u] == e.u);
    CHECK(c.old_to_new[orig.v] == e.v);
  }
  CHECK(c.graph.num_edges() == 4);
}

TEST_CASE("partition contraction of the trivial partition is the identity") {
  Rng rng(7);
  Multigraph g = random_multigraph(rng, 5, 3, 0.6);
  Contraction c = contract_partition(g, {0, 1, 2, 3, 4});
  CHECK(c.graph.same_multigraph(g));
  CHECK_THROWS_AS(contract_partition(g, {0, 0, 2, 2, 2}), InvalidInput);
}

TEST_CASE("lifting on T_{1,1,7} yields 8K_2 plus an isolated vertex") {
  Multigraph t = multi_triangle(1, 1, 7);  // 0-1 once, 1-2 once, 0-2 seven
  Lifted l = lift_pair(t, 1, 0, 2);
  CHECK(l.graph.multiplicity(0, 2) == 8);
  CHECK(l.graph.degree(1) == 0);
  CHECK(l.new_edge == t.next_edge_id());
  CHECK_THROWS_AS(lift_pair(t, 1, 0, 0), InvalidInput);
}

TEST_CASE("T_{4,4,4} has three single-vertex odd cuts of size 8") {
  Multigraph t = multi_triangle(4, 4, 4);
  CutResult odd = odd_edge_connectivity(t);
  CHECK(odd.value == kNoOddCut);
  CHECK(edge_connectivity(t).value == 8);
  Multigraph u = multi_triangle(4, 4, 5);
  CHECK(odd_edge_connectivity(u).value == 9);
}

TEST_CASE("edge connectivity and odd connectivity agree with direct recount") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 6;
    Multigraph g = random_multigraph(rng, n, 4, 0.5);
    CutResult c = edge_connectivity(g);
    CHECK(c.value == oracle::min_cut(g));
    CHECK(cut_size(g, c.side) == c.value);
    CutResult o = odd_edge_connectivity(g);
    int expect = oracle::min_odd_cut(g);
    if (expect < 0) {
      CHECK(o.value == kNoOddCut);
    } else {
      CHECK(o.value == expect);
      CHECK(cut_size(g, o.side) == expect);
    }
  }
}

TEST_CASE("disconnected graphs have edge connectivity zero") {
  Multigraph g = Multigraph::from_multiplicities(4, {{0, 1, 3}, {2, 3, 2}});
  CutResult c = edge_connectivity(g);
  CHECK(c.value == 0);
  CHECK(cut_size(g, c.side) == 0);
}

TEST_CASE("smallest cut below a bound prefers small shores") {
  Multigraph g = Multigraph::from_multiplicities(
      4, {{0, 1, 9}, {1, 2, 2}, {2, 3, 9}, {0, 3, 1}});
  auto c = smallest_cut_below(g, 5);
  REQUIRE(c.has_value());
  CHECK(c->side == std::vector<int>{0, 1});
  CHECK(c->value == 3);
  CHECK(!smallest_cut_below(g, 3).has_value());
}

TEST_CASE("odd girth") {
  CHECK(odd_girth(multi_cycle({1, 1, 1, 1, 1, 1, 1})).length == 7);
  CHECK(odd_girth(multi_cycle({2, 3, 1, 1})).length == kInfiniteGirth);
  Multigraph g = Multigraph::from_multiplicities(
      6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}, {2, 5, 1}, {0, 2, 1},
          {5, 0, 1}});
  OddGirth og = odd_girth(g);
  CHECK(og.length == 3);
  REQUIRE(og.cycle.size() == 3);
  for (std::size_t i = 0; i < og.cycle.size(); ++i) {
    CHECK(g.multiplicity(og.cycle[i], og.cycle[(i + 1) % 3]) > 0);
  }
}

TEST_CASE("faces of an embedded triangle with a doubled side") {
  Multigraph g = multi_triangle(2, 1, 1);
  PlaneEmbedding emb =
      embedding_from_coordinates(g, {{0, 0}, {1, 0}, {0.5, 1}});
  FaceStructure fs = faces(g, emb);
  CHECK(fs.faces.size() == 3);
  int total = 0;
  for (const Face& f : fs.faces) total += f.degree();
  CHECK(total == 2 * g.num_edges());
}

TEST_CASE("dual of the dual recovers the primal") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    EmbeddedGraph eg = random_plane_multigraph(rng, 3 + trial % 5, trial % 9);
    validate_embedding(eg.graph, eg.embedding);
    DualGraph d = dual(eg.graph, eg.embedding);
    validate_embedding(d.graph, d.embedding);
    CHECK(eg.graph.num_vertices() - eg.graph.num_edges() +
              d.graph.num_vertices() ==
          2);
    DualGraph dd = dual(d.graph, d.embedding);
    REQUIRE(dd.graph.num_vertices() == eg.graph.num_vertices());
    // Faces of the dual are the primal rotations; match them up.
    std::vector<int> map(eg.graph.num_vertices(), -1);
    for (int f = 0; f < dd.graph.num_vertices(); ++f) {
      map[f] = end_vertex(eg.graph, dd.faces.faces[f].darts.front());
    }
    for (const Edge& e : dd.graph.edges()) {
      const Edge& o = eg.graph.edge(e.id);
      CHECK(map[e.u] == o.u);
      CHECK(map[e.v] == o.v);
    }
  }
}

TEST_CASE("non-planar rotation systems are rejected") {
  Multigraph k4 = Multigraph::from_multiplicities(
      4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  PlaneEmbedding good =
      embedding_from_coordinates(k4, {{0, 0}, {4, 0}, {2, 3}, {2, 1}});
  CHECK_NOTHROW(validate_embedding(k4, good));
  auto rot = good.rotations();
  std::swap(rot[0][0], rot[0][1]);
  CHECK_THROWS_AS(validate_embedding(k4, PlaneEmbedding(rot)), InvalidInput);
}

TEST_CASE("embedded lifting keeps the rotation system planar") {
  Rng rng(5);
  int lifted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    EmbeddedGraph eg = random_plane_multigraph(rng, 4 + trial % 4, 6);
    for (int v = 0; v < eg.graph.num_vertices(); ++v) {
      const auto& rot = eg.embedding.rotation(v);
      if (rot.size() < 3) continue;
      EdgeId a = edge_of_end(rot[0]), b = edge_of_end(rot[1]);
      if (eg.graph.edge(a).other(v) == eg.graph.edge(b).other(v)) continue;
      Lifted l = lift_edges(eg.graph, v, a, b, &eg.embedding);
      CHECK_NOTHROW(validate_embedding(l.graph, *l.embedding));
      ++lifted;
      break;
    }
  }
  CHECK(lifted > 50);
}

TEST_CASE("embedded contraction keeps the rotation system planar") {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    EmbeddedGraph eg = random_plane_multigraph(rng, 5, 5);
    Contraction c = contract_subset(eg.graph, {0, 1}, &eg.embedding);
    CHECK_NOTHROW(validate_embedding(c.graph, *c.embedding));
  }
}

TEST_CASE("subdivision keeps a valid embedding") {
  Rng rng(2);
  EmbeddedGraph eg = random_plane_multigraph(rng, 4, 4);
  EmbeddedGraph s = subdivide(eg, 0, 5);
  CHECK(s.graph.num_vertices() == eg.graph.num_vertices() + 4);
  CHECK_NOTHROW(validate_embedding(s.graph, s.embedding));
}

TEST_CASE("DOT export collapses parallel edges") {
  std::string dot = to_dot(multi_k2(3));
  CHECK(dot.find("0 -- 1 [label=\"3\"]") != std::string::npos);
}
