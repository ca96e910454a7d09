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

// Brute-force reference implementations. They share no search code with the
// library and are only meant for small inputs.

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "orient9/multigraph.hpp"

namespace orient9::oracle {

/// Residue vectors of all 2^e orientations.
std::set<std::vector<int>> achievable(const Multigraph& g, int modulus);

/// Residue vectors of all strongly connected orientations.
std::set<std::vector<int>> achievable_strong(const Multigraph& g, int modulus);

/// Minimum weight over every labelling in [0, n)^n with at least two blocks.
long min_weight(const Multigraph& g, int per_part = 23, int additive = 42);

/// Minimum odd cut by direct recount of all subsets; -1 when none.
int min_odd_cut(const Multigraph& g);

/// Minimum cut by direct recount of all subsets.
int min_cut(const Multigraph& g);

/// Exhaustive colouring count for homomorphisms to C_{2k+1}; stops at one.
bool has_cycle_hom(const Multigraph& g, int k);

/// Number of pc boundaries modulo 2k by direct enumeration.
std::uint64_t count_pc(const Multigraph& g, int two_k);

/// Image edge sets of every injective map of a k-vertex pattern, given as
/// (a, b, threshold) triples; each set lists (min, max, summed threshold).
std::set<std::vector<std::array<int, 3>>> config_matches(
    const Multigraph& g, int k, const std::vector<std::array<int, 3>>& pairs);

}  // namespace orient9::oracle
