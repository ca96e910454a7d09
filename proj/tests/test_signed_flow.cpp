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

#include "orient9/generators.hpp"
#include "orient9/signed_flow.hpp"

using namespace orient9;

TEST_CASE("signature boundary") {
  SignedGraph neg = SignedGraph::from_multiplicities(3, {{0, 1, 0, 3}, {1, 2, 0, 2}});
  for (int b : boundary_from_signature(neg, 8)) CHECK(b == 0);
  SignedGraph one = SignedGraph::from_multiplicities(3, {{0, 1, 1, 2}, {1, 2, 0, 2}});
  CHECK(boundary_from_signature(one, 8) == std::vector<int>{16, 16, 0});
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Multigraph g = random_multigraph(rng, 2 + i % 5, 4, 0.6);
    SignedGraph gs{g, {}};
    for (int j = 0; j < g.num_edges(); ++j) gs.sign.push_back(rng() % 2 ? 1 : -1);
    int k = 2 + i % 7;
    auto beta = boundary_from_signature(gs, k);
    long sum = 0;
    for (int b : beta) {
      CHECK((b == 0 || b == 2 * k));
      sum += b;
    }
    CHECK(sum % (4 * k) == 0);
    CHECK(is_parity_compliant(double_graph(g).graph, beta, 4 * k));
  }
}

TEST_CASE("all-positive signature reduces to the unsigned range") {
  SignedGraph gs = SignedGraph::from_multiplicities(2, {{0, 1, 3, 0}});
  SignedCircularFlow f{Orientation{{0, 0, 1}}, {4, 3, 7}, 10, 3};
  CHECK(verify_signed_flow(gs, f).valid);
  f.value[2] = 2;
  SignedFlowCheck c = verify_signed_flow(gs, f);
  CHECK_FALSE(c.valid);
  CHECK(c.violations.size() == 3);
}

TEST_CASE("pipeline on 9K_2 with k = 8") {
  SignedGraph gs = SignedGraph::from_multiplicities(2, {{0, 1, 9, 0}});
  CHECK(boundary_from_signature(gs, 8) == std::vector<int>{16, 16});
  SignedPipeline r = run_signed_pipeline(gs, 8);
  REQUIRE(r.orientation_found);
  CHECK(r.flow.p == 32);
  CHECK(r.flow.q == 14);
  CHECK(r.check.valid);
  CHECK_FALSE(r.tight_cut.has_value());
  for (int v : r.flow.value) CHECK((v == 14 || v == 16 || v == 18));
}

TEST_CASE("negative edges land in {-2, 0, 2}") {
  SignedGraph gs = SignedGraph::from_multiplicities(
      3, {{0, 1, 6, 3}, {1, 2, 5, 4}, {0, 2, 4, 2}});
  SignedPipeline r = run_signed_pipeline(gs, 8);
  REQUIRE(r.orientation_found);
  CHECK(r.check.valid);
  CHECK_FALSE(r.tight_cut.has_value());
  for (int i = 0; i < gs.graph.num_edges(); ++i) {
    if (gs.sign[i] < 0) {
      CHECK(std::abs(r.flow.value[i]) <= 2);
    } else {
      CHECK((r.flow.value[i] >= 14 && r.flow.value[i] <= 18));
    }
    CHECK((r.flow.value[i] - (gs.sign[i] > 0 ? 16 : 0)) % 2 == 0);
  }
}

TEST_CASE("hand-built tight cut") {
  SignedGraph gs = SignedGraph::from_multiplicities(2, {{0, 1, 4, 0}});
  SignedCircularFlow f{Orientation{{0, 0, 0, 0}}, {1, 1, 1, 1}, 4, 1};
  auto cut = find_tight_cut(gs, f);
  REQUIRE(cut.has_value());
  CHECK(*cut == std::vector<int>{0});
}

TEST_CASE("mixed directions across every cut leave no tight cut") {
  SignedGraph gs = SignedGraph::from_multiplicities(2, {{0, 1, 2, 0}});
  SignedCircularFlow f{Orientation{{0, 1}}, {1, 1}, 4, 1};
  CHECK_FALSE(find_tight_cut(gs, f).has_value());
}

TEST_CASE("a uniformly directed doubled graph is rejected") {
  SignedGraph gs = SignedGraph::from_multiplicities(2, {{0, 1, 0, 2}});
  DoubledGraph d = double_graph(gs.graph);
  Orientation all{std::vector<char>(4, 0)};
  CHECK_THROWS(build_signed_flow(gs, 8, d, all));
}

TEST_CASE("pipeline on small random signed graphs") {
  Rng rng(99);
  int done = 0;
  for (int i = 0; i < 400 && done < 20; ++i) {
    int n = 2 + i % 2;
    Multigraph g = random_multigraph(rng, n, 7, 1.0);
    SignedGraph gs{g, {}};
    for (int j = 0; j < g.num_edges(); ++j) gs.sign.push_back(rng() % 3 ? 1 : -1);
    SignedPipeline r = run_signed_pipeline(gs, 8);
    if (!r.orientation_found) continue;
    ++done;
    CHECK(r.check.valid);
    CHECK_FALSE(r.tight_cut.has_value());
  }
  CHECK(done == 20);
}
