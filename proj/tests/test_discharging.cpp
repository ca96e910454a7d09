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
#include <cmath>
#include <limits>

#include "orient9/discharging.hpp"
#include "orient9/errors.hpp"
#include "orient9/generators.hpp"

using namespace orient9;

namespace {

using Coords = std::vector<std::pair<double, double>>;

EmbeddedGraph drawn(int n, const std::vector<std::array<int, 3>>& pairs, const Coords& xy) {
  Multigraph g(n);
  for (const auto& [a, b, m] : pairs) {
    for (int i = 0; i < m; ++i) g.add_edge(a, b);
  }
  PlaneEmbedding emb = embedding_from_coordinates(g, xy);
  validate_embedding(g, emb);
  return {g, emb};
}

int face_with(const FaceStructure& fs, std::vector<VertexId> verts, int degree) {
  std::sort(verts.begin(), verts.end());
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    auto v = fs.faces[f].vertices;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (fs.faces[f].degree() == degree && v == verts) return f;
  }
  return -1;
}

// Multi-K_4 with x = 0 at the centre and y, z, w around it.
EmbeddedGraph multi_k4(int xy, int xz, int xw, int yz, int zw, int wy) {
  return drawn(4, {{0, 1, xy}, {0, 2, xz}, {0, 3, xw}, {1, 2, yz}, {2, 3, zw}, {3, 1, wy}},
               {{0, 0}, {0, 1}, {-0.87, -0.5}, {0.87, -0.5}});
}

}  // namespace

TEST_CASE("charge arithmetic") {
  CHECK(charge_string(kThreshold) == "46/21");
  CHECK(charge_string(512) == "256/105");
  CHECK(charge_string(420) == "2");
  CHECK(charge_string(-5) == "-1/42");
  CHECK_THROWS_AS(checked_mul(std::numeric_limits<Charge>::max(), 2), Error);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<Charge>::max(), 1), Error);
}

TEST_CASE("weak adjacency") {
  // Triangle: the two faces share every edge.
  EmbeddedGraph tri = drawn(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(weakly_adjacent(tri.graph, tri.embedding, 0, 1));

  // Triangle xyv with a stack of 4 on xy: the triangle faces meet across the stack.
  EmbeddedGraph t = drawn(3, {{0, 1, 4}, {0, 2, 1}, {2, 1, 1}}, {{0, 0}, {2, 0}, {1, 1}});
  FaceStructure fs = faces(t.graph, t.embedding);
  std::vector<int> threes;
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    if (fs.faces[f].degree() == 3) threes.push_back(f);
  }
  REQUIRE(threes.size() == 2);
  CHECK(weakly_adjacent(fs, threes[0], threes[1]));
  auto w = weakly_adjacent_faces(fs, threes[0]);
  CHECK(w.size() == 4);  // three 2-faces and the other triangle

  // Two triangles hanging off opposite ends of a path share no chain of 2-faces.
  EmbeddedGraph q = drawn(5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 1}, {3, 4, 1}, {4, 2, 1}},
                          {{-2, 0}, {-1, 1}, {0, 0}, {1, 1}, {2, 0}});
  FaceStructure qs = faces(q.graph, q.embedding);
  int left = face_with(qs, {0, 1, 2}, 3), right = face_with(qs, {2, 3, 4}, 3);
  REQUIRE(left >= 0);
  REQUIRE(right >= 0);
  CHECK_FALSE(weakly_adjacent(qs, left, right));
}

TEST_CASE("face classification") {
  EmbeddedGraph k4 = multi_k4(4, 4, 5, 4, 6, 6);
  FaceStructure fs = faces(k4.graph, k4.embedding);
  auto classes = classify_faces(k4.graph, fs);
  int f = face_with(fs, {0, 1, 2}, 3);
  REQUIRE(f >= 0);
  CHECK(classes[f].kind == FaceKind::kT);
  auto p = classes[f].params;
  std::sort(p.begin(), p.end());
  CHECK(p == std::vector<int>{4, 4, 4});
  int twos = 0;
  for (const auto& c : classes) twos += c.kind == FaceKind::kTwo;
  CHECK(twos == 3 + 3 + 4 + 3 + 5 + 5);
}

TEST_CASE("Q6666 surrounded by 5-faces ends at 256/105") {
  Coords xy = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}, {-3, -3}, {3, -3},
               {3, 3},   {-3, 3}, {0, -3}, {3, 0}, {0, 3},  {-3, 0}};
  EmbeddedGraph g = drawn(12,
                          {{0, 1, 6}, {1, 2, 6}, {2, 3, 6}, {3, 0, 6}, {0, 4, 1}, {1, 5, 1},
                           {2, 6, 1}, {3, 7, 1}, {4, 8, 1}, {8, 5, 1}, {5, 9, 1}, {9, 6, 1},
                           {6, 10, 1}, {10, 7, 1}, {7, 11, 1}, {11, 4, 1}},
                          xy);
  ChargeLedger ledger = apply_rules(g.graph, g.embedding);
  int inner = face_with(ledger.faces, {0, 1, 2, 3}, 4);
  REQUIRE(inner >= 0);
  CHECK(ledger.classes[inner].kind == FaceKind::kQ);
  CHECK(ledger.final_charge[inner] == 512);
  CHECK(charge_string(ledger.final_charge[inner]) == "256/105");
  CHECK(ledger.total_final() == ledger.total_initial());
}

TEST_CASE("inner 5-face with sum 30 ends exactly at 46/21") {
  Coords xy;
  std::vector<std::array<int, 3>> pairs;
  for (int i = 0; i < 5; ++i) {
    double a = 2 * 3.14159265358979 * i / 5;
    xy.push_back({std::cos(a), std::sin(a)});
    pairs.push_back({i, (i + 1) % 5, 6});
  }
  for (int i = 0; i < 5; ++i) {
    double b = 2 * 3.14159265358979 * (i + 0.5) / 5;
    xy.push_back({3 * std::cos(b), 3 * std::sin(b)});
    pairs.push_back({5 + i, i, 1});
    pairs.push_back({5 + i, (i + 1) % 5, 1});
  }
  EmbeddedGraph g = drawn(10, pairs, xy);
  ChargeLedger ledger = apply_rules(g.graph, g.embedding);
  int inner = face_with(ledger.faces, {0, 1, 2, 3, 4}, 5);
  REQUIRE(inner >= 0);
  CHECK(ledger.classes[inner].kind == FaceKind::kV);
  CHECK(ledger.classes[inner].sum() == 30);
  CHECK(ledger.final_charge[inner] == kThreshold);
}

TEST_CASE("two-faces end with at least 2 + 4/21") {
  EmbeddedGraph k4 = multi_k4(4, 4, 5, 4, 6, 6);
  ChargeLedger ledger = apply_rules(k4.graph, k4.embedding);
  for (int f = 0; f < static_cast<int>(ledger.classes.size()); ++f) {
    if (ledger.classes[f].kind == FaceKind::kTwo) CHECK(ledger.final_charge[f] == 460);
  }
}

TEST_CASE("conservation and order independence on random embeddings") {
  Rng rng(21);
  const std::vector<std::string> orders = {"ABC", "ACB", "BAC", "BCA", "CAB", "CBA"};
  for (int i = 0; i < 100; ++i) {
    EmbeddedGraph eg = random_plane_multigraph(rng, 3 + i % 6, 2 + i % 9);
    ChargeLedger base = apply_rules(eg.graph, eg.embedding);
    CHECK(base.total_initial() == 2 * eg.graph.num_edges() * kChargeDenominator);
    CHECK(base.total_final() == base.total_initial());
    Charge moved = 0;
    for (const Transfer& t : base.transfers) moved += t.amount;
    CHECK(moved >= 0);
    for (const auto& o : orders) {
      CHECK(apply_rules(eg.graph, eg.embedding, o).final_charge == base.final_charge);
    }
    DensityCheck d = euler_density_check(eg.graph, eg.embedding);
    CHECK(d.handshake);
    CHECK(d.consistent);
  }
  EmbeddedGraph eg = random_plane_multigraph(rng, 4, 3);
  CHECK_THROWS_AS(apply_rules(eg.graph, eg.embedding, "AAB"), InvalidInput);
}

TEST_CASE("density inequality") {
  EmbeddedGraph two = drawn(2, {{0, 1, 2}}, {{0, 0}, {1, 0}});
  DensityCheck d = euler_density_check(two.graph, two.embedding);
  CHECK(d.weight_hypothesis);
  CHECK(d.inequality);
  CHECK(d.consistent);

  // 2e = 23v - 42 with v = 4 and e = 25: the inequality is tight.
  EmbeddedGraph k4 = multi_k4(4, 4, 4, 4, 4, 5);
  d = euler_density_check(k4.graph, k4.embedding);
  CHECK(d.twice_edges == 50);
  CHECK(d.weight_hypothesis);
  CHECK(d.inequality);
  CHECK(21 * d.twice_edges == 46 * 23 - 8);

  EmbeddedGraph tri = drawn(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}, {{0, 0}, {1, 0}, {0, 1}});
  d = euler_density_check(tri.graph, tri.embedding);
  CHECK_FALSE(d.weight_hypothesis);
  CHECK_FALSE(d.inequality);
  CHECK(d.consistent);
}

TEST_CASE("case table") {
  CaseTableReport r = case_table_verify();
  for (const auto& item : r.items) {
    CAPTURE(item.name);
    CHECK(item.holds);
  }
  CHECK(r.all_hold());
  auto find = [&](const std::string& name) {
    return std::find_if(r.items.begin(), r.items.end(),
                        [&](const CaseIdentity& c) { return c.name == name; });
  };
  REQUIRE(find("4-face sum=22") != r.items.end());
  CHECK(find("4-face sum=22")->lhs == kThreshold);
  CHECK(find("4-face sum=24 Q6666")->lhs == 512);
  CHECK(find("3-face T166")->lhs == 466);
  CHECK(find("3-face T444")->lhs == kThreshold);
  CHECK(find("5-face")->lhs == kThreshold);
}

TEST_CASE("verdict reports nearby configurations") {
  EmbeddedGraph t = drawn(3, {{0, 1, 7}, {0, 2, 3}, {2, 1, 3}}, {{0, 0}, {2, 0}, {1, 1}});
  ChargeLedger ledger = apply_rules(t.graph, t.embedding);
  auto bad = verdict(t.graph, ledger);
  REQUIRE_FALSE(bad.empty());
  bool t117 = false;
  for (const auto& d : bad) {
    CHECK(d.charge < kThreshold);
    for (const auto& m : d.nearby) t117 |= m.pattern == "T117";
  }
  CHECK(t117);

  EmbeddedGraph tri = drawn(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(verdict(tri.graph, apply_rules(tri.graph, tri.embedding)).empty());
}

TEST_CASE("T444 exclusion") {
  // Violation: the three 3-faces around the central T_{4,4,4} share the stack xw.
  EmbeddedGraph low = multi_k4(4, 4, 5, 4, 3, 3);
  FaceStructure fs = faces(low.graph, low.embedding);
  int f = face_with(fs, {0, 1, 2}, 3);
  REQUIRE(f >= 0);
  T444Report r = t444_exclusion_check(low.graph, low.embedding, f);
  CHECK_FALSE(r.holds);
  CHECK(r.interior == 0);
  CHECK(r.interior_degree == 13);
  CHECK(r.diagnostic.find("< 14") != std::string::npos);

  EmbeddedGraph high = multi_k4(4, 4, 8, 4, 3, 3);
  fs = faces(high.graph, high.embedding);
  f = face_with(fs, {0, 1, 2}, 3);
  r = t444_exclusion_check(high.graph, high.embedding, f);
  CHECK_FALSE(r.holds);
  CHECK(std::find(r.forbidden_present.begin(), r.forbidden_present.end(), "To117") !=
        r.forbidden_present.end());

  // Compliant: a triangle hangs off each side of the T_{4,4,4}.
  EmbeddedGraph ok = drawn(6, {{0, 1, 4}, {1, 2, 4}, {2, 0, 4}, {3, 0, 1}, {3, 1, 1},
                               {4, 1, 1}, {4, 2, 1}, {5, 2, 1}, {5, 0, 1}},
                           {{0, 1}, {-0.87, -0.5}, {0.87, -0.5}, {-1.7, 1}, {0, -2},
                            {1.7, 1}});
  fs = faces(ok.graph, ok.embedding);
  f = face_with(fs, {0, 1, 2}, 3);
  REQUIRE(f >= 0);
  CHECK(t444_exclusion_check(ok.graph, ok.embedding, f).holds);

  int other = face_with(fs, {0, 1, 3}, 3);
  CHECK_THROWS_AS(t444_exclusion_check(ok.graph, ok.embedding, other), InvalidInput);
}
