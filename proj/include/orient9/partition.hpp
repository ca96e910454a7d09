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

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orient9/caps.hpp"
#include "orient9/multigraph.hpp"

namespace orient9 {

/// Constants of the weight function w(P) = sum d(P_i) - per_part * t + additive.
struct WeightConstants {
  int per_part = 23;
  int additive = 42;
};

/// A partition stored as block labels in restricted-growth form.
class Partition {
 public:
  Partition() = default;
  /// Labels are renumbered by first occurrence.
  explicit Partition(const std::vector<int>& labels);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static Partition trivial(int n);

  int size() const { return static_cast<int>(block_of_.size()); }
  int num_blocks() const { return num_blocks_; }
  int block_of(int v) const { return block_of_[v]; }
  const std::vector<int>& labels() const { return block_of_; }
  std::vector<std::vector<int>> blocks() const;
  bool is_trivial() const { return num_blocks_ == size(); }
  /// Block sizes in non-increasing order.
  std::vector<int> sorted_sizes() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> block_of_;
  int num_blocks_ = 0;
};

std::string to_string(const Partition& p);

/// Calls f on each partition of {0..n-1} with at most max_blocks blocks, in
/// lexicographic order of the label strings. f returns false to stop.
void for_each_partition(int n, int max_blocks,
                        const std::function<bool(const std::vector<int>&)>& f);

long weight_of_partition(const Multigraph& g, const Partition& p,
                         const WeightConstants& c = {});

struct MinWeight {
  long value = 0;
  Partition argmin;
};

/// Minimum of w over all partitions except the single-block one.
MinWeight min_weight(const Multigraph& g, const WeightConstants& c = {},
                     const Caps& caps = default_caps());

enum class Family { kN, kWStar, kNeither };
std::string to_string(Family f);

/// Membership of g itself in N or W*.
Family classify_family(const Multigraph& g);

struct GoodnessReport {
  bool good = false;
  std::string reason;
  std::optional<Partition> witness;
  long min_weight = 0;
};

GoodnessReport is_N_good(const Multigraph& g, const WeightConstants& c = {},
                         const Caps& caps = default_caps());
GoodnessReport is_S_good(const Multigraph& g, const WeightConstants& c = {},
                         const Caps& caps = default_caps());

/// Whether some partition P has G/P in N (nontrivial_only skips the trivial one).
std::optional<Partition> quotient_in_N(const Multigraph& g,
                                       bool nontrivial_only = false,
                                       const Caps& caps = default_caps());

struct RefinementCheck {
  long lhs = 0;  // w_H(Q)
  long rhs = 0;  // w_G(Q u P - P_1) - w_G(P) + additive - per_part
  bool holds = false;
};

/// H = G[P_block]; q labels the vertices of that block in increasing order.
RefinementCheck refinement_identity(const Multigraph& g, const Partition& p,
                                    int block, const Partition& q,
                                    const WeightConstants& c = {});

struct BoundClause {
  std::string name;
  bool premise = false;
  bool excludes_wstar = false;
  bool conclusion_holds = false;
};

struct BoundCheck {
  long weight = 0;
  Family quotient = Family::kNeither;
  std::array<BoundClause, 5> clauses;
  bool consistent = true;
};

/// Evaluates the five weight bounds for G/P against the actual quotient.
BoundCheck partition_bound_check(const Multigraph& g, const Partition& p,
                                 const WeightConstants& c = {});

}  // namespace orient9
