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
#include "orient9/multigraph.hpp"

namespace orient9 {

/// Direction per edge, aligned with g.edges(); reversed[i] means v -> u.
struct Orientation {
  std::vector<char> reversed;

  VertexId tail(const Edge& e, int index) const {
    return reversed[index] ? e.v : e.u;
  }
  VertexId head(const Edge& e, int index) const {
    return reversed[index] ? e.u : e.v;
  }
};

/// Outdegree minus indegree, as plain integers.
std::vector<int> net_outdegree(const Multigraph& g, const Orientation& d);

/// Reduces every entry into 0..modulus-1.
std::vector<int> reduce(const std::vector<int>& beta, int modulus);

/// True when beta sums to 0 modulo the modulus.
bool is_boundary(const std::vector<int>& beta, int modulus);

bool is_beta_orientation(const Multigraph& g, const Orientation& d,
                         const std::vector<int>& beta, int modulus);

bool is_strongly_connected(const Multigraph& g, const Orientation& d);

/// Boundaries attained by orientations, as a bitset over residue vectors of
/// the first n-1 vertices (the last is fixed by the zero-sum condition).
class AchievableSet {
 public:
  AchievableSet(int modulus, int n, std::vector<std::uint64_t> bits);

  int modulus() const { return modulus_; }
  int num_vertices() const { return n_; }
  std::uint64_t num_states() const { return states_; }
  bool contains(const std::vector<int>& beta) const;
  std::uint64_t count() const;
  bool full() const { return count() == states_; }
  /// First absent boundary in lexicographic residue order.
  std::optional<std::vector<int>> first_missing() const;
  bool contains_state(std::uint64_t s) const {
    return bits_[s >> 6] >> (s & 63) & 1;
  }
  std::vector<int> decode(std::uint64_t s) const;
  std::uint64_t encode(const std::vector<int>& beta) const;

 private:
  int modulus_;
  int n_;
  std::uint64_t states_;
  std::vector<std::uint64_t> bits_;
};

AchievableSet achievable_boundaries(const Multigraph& g, int modulus,
                                    const Caps& caps = default_caps());

std::optional<Orientation> find_zk_orientation(
    const Multigraph& g, int modulus, const std::vector<int>& beta,
    const Caps& caps = default_caps());

/// Orientation with outdegree minus indegree divisible by modulus everywhere.
std::optional<Orientation> modular_orientation(const Multigraph& g, int modulus,
                                               const Caps& caps = default_caps());

struct MembershipResult {
  bool member = false;
  std::optional<std::vector<int>> missing;  // boundary with no orientation
  std::string note;
};

/// Odd k: every Z_k-boundary is attained. Even k: every parity-compliant
/// Z_2k-boundary is attained (the two agree for odd k).
MembershipResult is_strongly_zk_connected(const Multigraph& g, int k,
                                          const Caps& caps = default_caps());

/// Every parity-compliant Z_2k-boundary is attained.
MembershipResult is_sz_pc(const Multigraph& g, int k,
                          const Caps& caps = default_caps());

/// Parity-compliant boundaries modulo two_k, values in (-two_k/2, two_k/2].
std::vector<std::vector<int>> pc_boundaries(const Multigraph& g, int two_k,
                                            const Caps& caps = default_caps());

bool is_parity_compliant(const Multigraph& g, const std::vector<int>& beta,
                         int two_k);

std::optional<Orientation> find_sc_orientation(
    const Multigraph& g, int two_k, const std::vector<int>& beta,
    const Caps& caps = default_caps());

/// G in SC_k: a strongly connected (2k, beta)-orientation for every pc beta.
MembershipResult is_in_SC(const Multigraph& g, int k,
                          const Caps& caps = default_caps());

struct WeakResult {
  bool member = false;
  int x = -1, y = -1;  // first pair with H + xy outside SC_k
  std::optional<std::vector<int>> missing;
};

WeakResult is_weakly_contractible(const Multigraph& h, int k,
                                  const Caps& caps = default_caps());

enum class HamiltonMode { kSC, kW };

struct HamiltonCertificate {
  bool certified = false;
  // kSC: one cycle. kW: one path per ordered pair x < y.
  std::vector<std::vector<VertexId>> walks;
  std::vector<std::vector<EdgeId>> removed;
  std::string note;
};

/// Sufficient conditions only; a negative answer means "inconclusive".
HamiltonCertificate hamiltonian_sufficiency(const Multigraph& g, int k,
                                            HamiltonMode mode,
                                            const Caps& caps = default_caps());

/**
 * Lifts an orientation of G/S (aligned with contract_subset(g, s).graph) to
 * one of G, solving G[S] for the induced boundary.
 */
std::optional<Orientation> extend_by_contraction(
    const Multigraph& g, const std::vector<VertexId>& s,
    const Orientation& contracted, const std::vector<int>& beta, int modulus,
    const Caps& caps = default_caps());

/// Copies directions by edge id from a graph sharing those ids.
Orientation transfer_by_id(const Multigraph& from, const Orientation& d,
                           const Multigraph& to);

}  // namespace orient9
