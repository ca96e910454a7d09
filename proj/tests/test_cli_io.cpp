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

#include "orient9/errors.hpp"
#include "orient9/generators.hpp"
#include "orient9/io.hpp"

using namespace orient9;

namespace {

bool same_edges(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (int i = 0; i < a.num_edges(); ++i) {
    const Edge& x = a.edges()[i];
    const Edge& y = b.edges()[i];
    if (x.u != y.u || x.v != y.v || y.id != i) return false;
  }
  return true;
}

int error_column(const std::string& text, int* line) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    *line = e.line();
    return e.column();
  }
  *line = -1;
  return -1;
}

}  // namespace

TEST_CASE("graph text round trips on random multigraphs") {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    Multigraph g = random_multigraph(rng, 1 + static_cast<int>(rng() % 7), 6, 0.6);
    std::string text = serialize_graph(g);
    GraphFile back = parse_graph(text);
    CHECK(same_edges(g, back.graph));
    CHECK_FALSE(back.embedding.has_value());
    CHECK(serialize_graph(back.graph) == text);
  }
}

TEST_CASE("embedded graphs round trip with their rotations") {
  Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    EmbeddedGraph eg = random_plane_multigraph(rng, 3 + static_cast<int>(rng() % 5),
                                               static_cast<int>(rng() % 5));
    std::string text = serialize_graph(eg.graph) + serialize_embedding(eg.embedding);
    GraphFile back = parse_graph(text);
    REQUIRE(back.embedding.has_value());
    CHECK(same_edges(eg.graph, back.graph));
    CHECK(back.embedding->rotations() == eg.embedding.rotations());
    PlaneEmbedding alone = parse_embedding(serialize_embedding(eg.embedding), back.graph);
    CHECK(alone.rotations() == eg.embedding.rotations());
  }
}

TEST_CASE("signed graphs round trip") {
  Rng rng(13);
  for (int t = 0; t < 1000; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::tuple<int, int, int, int>> spec;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) spec.emplace_back(u, v, rng() % 4, rng() % 4);
      }
    }
    SignedGraph gs = SignedGraph::from_multiplicities(n, spec);
    std::string text = serialize_signed_graph(gs);
    SignedGraph back = parse_signed_graph(text);
    CHECK(back.graph.num_vertices() == n);
    CHECK(back.graph.num_edges() == gs.graph.num_edges());
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        int pa = 0, na = 0, pb = 0, nb = 0;
        for (int i = 0; i < gs.graph.num_edges(); ++i) {
          const Edge& e = gs.graph.edges()[i];
          if (e.u == u && e.v == v) (gs.sign[i] > 0 ? pa : na)++;
        }
        for (int i = 0; i < back.graph.num_edges(); ++i) {
          const Edge& e = back.graph.edges()[i];
          if (e.u == u && e.v == v) (back.sign[i] > 0 ? pb : nb)++;
        }
        CHECK(pa == pb);
        CHECK(na == nb);
      }
    }
    CHECK(serialize_signed_graph(back) == text);
  }
}

TEST_CASE("edge multiplicity builds a fat K2") {
  GraphFile f = parse_graph("graph 2\nedge 0 1 8\n");
  CHECK(f.graph.num_vertices() == 2);
  CHECK(f.graph.multiplicity(0, 1) == 8);
  GraphFile c = parse_graph("# comment\ngraph 3  # three\nedge 0 1 1\nedge 1 2 2\n");
  CHECK(c.graph.num_edges() == 3);
}

TEST_CASE("parse errors carry line and column") {
  int line = 0;
  CHECK(error_column("graph 2\nedge 0 0 3\n", &line) > 0);
  CHECK(line == 2);
  CHECK(error_column("graph 2\nedge 0 x 3\n", &line) > 0);
  CHECK(line == 2);
  CHECK(error_column("graph 2\nedge 0 5 1\n", &line) > 0);
  CHECK(line == 2);
  CHECK(error_column("graph 2\nvertex 0\n", &line) > 0);
  CHECK(line == 2);
  CHECK(error_column("graph 2\nedge 0 1 2\nrot 0 0 2\nrot 1 1\n", &line) > 0);
  CHECK(line >= 3);
  CHECK(error_column("graph 2\nedge 0 1 1\nrot 0 0\nrot 1 1\nedge 0 1 1\n", &line) > 0);
  CHECK(line == 5);
  CHECK_THROWS_AS(parse_graph("edge 0 1 1\n"), ParseError);
}

TEST_CASE("boundary files") {
  CHECK(parse_boundary("0 4\n2 -4\n", 3) == std::vector<int>{4, 0, -4});
  CHECK(parse_boundary("", 2) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(parse_boundary("3 1\n", 3), ParseError);
}
