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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orient9/caps.hpp"
#include "orient9/embedding.hpp"
#include "orient9/generators.hpp"
#include "orient9/multigraph.hpp"
#include "orient9/orientation.hpp"

namespace orient9 {

/** Vertex map into C_{2k+1} with targets 0..2k. */
struct HomMap {
  int k = 0;
  std::vector<int> image;
};

bool is_homomorphism(const Multigraph& g, const HomMap& phi);

enum class HomStatus { kFound, kNone, kBudget };
std::string to_string(HomStatus s);

struct HomResult {
  HomStatus status = HomStatus::kNone;
  std::optional<HomMap> map;
  std::uint64_t nodes = 0;
};

/** Backtracking with maintained arc consistency; budget is caps.hom_nodes. */
HomResult find_homomorphism(const Multigraph& g, int k,
                            const Caps& caps = default_caps());

/** C_{4k-1} plus an apex joined to every cycle vertex by a path of length 2k-1. */
EmbeddedGraph gadget(int k);

/** Integer values aligned with the edge order of the graph. */
struct CircularFlow {
  Orientation orientation;
  std::vector<int> value;
  int p = 0;
  int q = 0;
};

struct FlowCheck {
  bool valid = true;
  std::vector<std::string> violations;
};

/** q <= |f(e)| <= p - q on every edge and zero boundary mod p. */
FlowCheck check_circular_flow(const Multigraph& g, const CircularFlow& f);

/**
 * Dual edge e* runs from the face of end 2e to the face of end 2e+1 and
 * carries k * (phi(e.v) - phi(e.u)) reduced to +-k.
 */
CircularFlow hom_to_dual_flow(const Multigraph& g, const DualGraph& dual,
                              const HomMap& phi);

/** Integrates f / k along a spanning tree of the primal graph. */
HomMap dual_flow_to_hom(const Multigraph& g, const DualGraph& dual,
                        const CircularFlow& f, int k);

/** Value k on every edge in the direction of d. */
CircularFlow orientation_to_flow(const Multigraph& g, const Orientation& d,
                                 int k);

/** Keeps edges carrying k and reverses edges carrying k+1. */
Orientation flow_to_orientation(const Multigraph& g, const CircularFlow& f,
                                int k);

}  // namespace orient9
