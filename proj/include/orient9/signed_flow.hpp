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


#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orient9/caps.hpp"
#include "orient9/multigraph.hpp"
#include "orient9/orientation.hpp"

namespace orient9 {

/** Sign +1 or -1 per edge, aligned with the edge order of graph. */
struct SignedGraph {
  Multigraph graph;
  std::vector<int> sign;

  static SignedGraph from_multiplicities(
      int n, const std::vector<std::tuple<int, int, int, int>>& uv_pos_neg);
  int positive_degree(VertexId v) const;
};

struct SignedCircularFlow {
  Orientation orientation;
  std::vector<int> value;
  int p = 0;
  int q = 0;
};

struct SignedFlowCheck {
  bool valid = true;
  std::vector<std::string> violations;
};

/** All three clauses of the signed definition; p must be even. */
SignedFlowCheck verify_signed_flow(const SignedGraph& gs,
                                   const SignedCircularFlow& f);

/**
 * Shore X of a tight cut: for every crossing edge uv with u in X the value in
 * the direction of the orientation is q or p-q (positive, u->v or v->u) and
 * p/2+q or p/2-q (negative), all modulo p.
 */
std::optional<std::vector<VertexId>> find_tight_cut(
    const SignedGraph& gs, const SignedCircularFlow& f,
    const Caps& caps = default_caps());

/** 2G; copies[i] holds the two edge ids standing for edge i of G. */
struct DoubledGraph {
  Multigraph graph;
  std::vector<std::pair<EdgeId, EdgeId>> copies;
};

DoubledGraph double_graph(const Multigraph& g);

/** beta(v) = 2k * p+(v) reduced to {0, 2k}. */
std::vector<int> boundary_from_signature(const SignedGraph& gs, int k);

/**
 * f = f1 + f2 on G with auxiliary orientation lower id -> higher id, where
 * f1 counts agreeing copies in d and f2 is 2k on positive edges.
 */
SignedCircularFlow build_signed_flow(const SignedGraph& gs, int k,
                                     const DoubledGraph& doubled,
                                     const Orientation& d);

struct SignedPipeline {
  bool orientation_found = false;
  Orientation doubled_orientation;
  SignedCircularFlow flow;
  SignedFlowCheck check;
  std::optional<std::vector<VertexId>> tight_cut;
};

/** Finds the strongly connected orientation of 2G, builds and checks f. */
SignedPipeline run_signed_pipeline(const SignedGraph& gs, int k,
                                   const Caps& caps = default_caps());

}  // namespace orient9
