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
#include <optional>
#include <string>
#include <vector>

#include "orient9/caps.hpp"
#include "orient9/catalog.hpp"
#include "orient9/embedding.hpp"
#include "orient9/multigraph.hpp"
#include "orient9/orientation.hpp"
#include "orient9/partition.hpp"

namespace orient9 {

/** Type (first+, second+, *) forces weight at least threshold. */
struct GapThreshold {
  int first;
  int second;
  int threshold;
};

const std::array<GapThreshold, 6>& gap_thresholds();

struct GapResult {
  bool applicable = false;  // weight below the binding threshold
  int threshold = 0;        // 0 when no type matches
  long weight = 0;
  int block = -1;           // P_1, the largest block
  std::vector<VertexId> witness_vertices;
  std::optional<Multigraph> witness;  // G[P_1] when it is N-good
  long inner_weight = 0;              // w_H of the trivial partition via the identity
  std::string note;
};

GapResult gap_lemma_extract(const Multigraph& g, const Partition& p,
                            const Caps& caps = default_caps());

struct SplitResult {
  bool found = false;
  bool falsification = false;
  int index = -1;  // i: the split pair is (e_i, e_{i+1}), 0-based
  EdgeId e1 = -1;
  EdgeId e2 = -1;
  int lambda = 0;  // odd-edge-connectivity before and after
  Multigraph graph;
  std::optional<PlaneEmbedding> embedding;
};

/**
 * Tries consecutive pairs of edges at v (rotation order when emb is given,
 * incident order otherwise) and returns the first split that keeps the
 * odd-edge-connectivity.
 */
SplitResult zhang_split(const Multigraph& g, VertexId v,
                        const PlaneEmbedding* emb = nullptr,
                        const Caps& caps = default_caps());

/** Edge order used by zhang_split at v. */
std::vector<EdgeId> cyclic_edges(const Multigraph& g, VertexId v,
                                 const PlaneEmbedding* emb);

struct LiftRecord {
  VertexId v = -1;
  VertexId x = -1;
  VertexId y = -1;
  EdgeId e1 = -1;
  EdgeId e2 = -1;
};

enum class WitnessStatus { kCertificate, kExhausted };

struct ReductionCertificate {
  WitnessStatus status = WitnessStatus::kExhausted;
  int clause = 0;
  std::vector<LiftRecord> lifts;
  Multigraph lifted;                    // G' or G''
  std::vector<VertexId> subgraph_vertices;
  Multigraph subgraph;                  // H; local vertex i is subgraph_vertices[i]
  VertexId vertex = -1;                 // v for the single-vertex lifting
  std::string source;                   // catalog pattern or search kind
  std::string note;
  std::uint64_t checks = 0;
};

struct WitnessOptions {
  std::vector<int> clauses = {4, 1, 2, 3};
  bool use_catalog = true;
};

ReductionCertificate reduction_witness(const Multigraph& g,
                                       const PlaneEmbedding* emb = nullptr,
                                       const WitnessOptions& options = {},
                                       const Caps& caps = default_caps());

/** Re-checks every claim of a certificate against g. */
bool verify_reduction_certificate(const Multigraph& g,
                                  const ReductionCertificate& cert,
                                  const PlaneEmbedding* emb = nullptr,
                                  std::string* why = nullptr,
                                  const Caps& caps = default_caps());

/**
 * Every edge of h (local vertex i standing for vertices[i]) is an edge of g
 * with the same id and ends.
 */
bool is_subgraph_by_ids(const Multigraph& h, const std::vector<VertexId>& vertices,
                        const Multigraph& g);

struct SolverConstants {
  int modulus = 9;
  int lambda = 23;
  static SolverConstants scaled() { return {5, 11}; }
};

struct SolveReport {
  bool ok = false;
  std::optional<Orientation> orientation;
  std::string failed_step;
  std::vector<std::string> trace;
};

/**
 * Recursive modular orientation: split even vertices of small degree, solve
 * highly connected graphs directly, otherwise contract a minimal small shore.
 */
SolveReport solve_modular_9(const Multigraph& g,
                            const PlaneEmbedding* emb = nullptr,
                            const SolverConstants& constants = {},
                            const Caps& caps = default_caps());

}  // namespace orient9
