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

#include <limits>
#include <optional>
#include <vector>

#include "orient9/caps.hpp"
#include "orient9/embedding.hpp"
#include "orient9/multigraph.hpp"

namespace orient9 {

struct Contraction {
  Multigraph graph;
  std::vector<VertexId> old_to_new;
  std::optional<PlaneEmbedding> embedding;
};

/**
 * Identifies the vertices of s into one vertex and drops the edges inside s.
 * The merged vertex takes the position of min(s); other vertices keep their
 * relative order. With an embedding, g[s] must be connected.
 */
Contraction contract_subset(const Multigraph& g, const std::vector<VertexId>& s,
                            const PlaneEmbedding* emb = nullptr);

/** One vertex per block of block_of (labels 0..t-1); edges inside blocks go. */
Contraction contract_partition(const Multigraph& g,
                               const std::vector<int>& block_of);

Multigraph induced_subgraph(const Multigraph& g, const std::vector<VertexId>& s,
                            std::vector<VertexId>* old_to_new = nullptr);

Multigraph delete_vertex(const Multigraph& g, VertexId v,
                         std::vector<VertexId>* old_to_new = nullptr);

struct Lifted {
  Multigraph graph;
  EdgeId new_edge = -1;  // -1 when the two far ends coincide
  std::optional<PlaneEmbedding> embedding;
};

/**
 * Replaces edges e1 = xv and e2 = vy by one new edge xy. With an embedding
 * the ends of e1, e2 at v must be consecutive in the rotation at v.
 */
Lifted lift_edges(const Multigraph& g, VertexId v, EdgeId e1, EdgeId e2,
                  const PlaneEmbedding* emb = nullptr);

/** Lifting on the lowest-id xv and vy edges; x, y, v distinct. */
Lifted lift_pair(const Multigraph& g, VertexId v, VertexId x, VertexId y,
                 const PlaneEmbedding* emb = nullptr);

/**
 * Splitting off e1, e2 at v. If both lead to the same vertex the resulting
 * loop is discarded.
 */
Lifted split_off(const Multigraph& g, VertexId v, EdgeId e1, EdgeId e2,
                 const PlaneEmbedding* emb = nullptr);

struct CutResult {
  int value = 0;
  std::vector<VertexId> side;  // one shore X
};

/** d(X) for the vertex set side. */
int cut_size(const Multigraph& g, const std::vector<VertexId>& side);

CutResult edge_connectivity(const Multigraph& g);

inline constexpr int kNoOddCut = std::numeric_limits<int>::max();

/** Minimum odd cut; value kNoOddCut when every cut is even. */
CutResult odd_edge_connectivity(const Multigraph& g,
                                const Caps& caps = default_caps());

/**
 * Smallest shore X (by |X|, then lexicographically) with d(X) < bound, if any.
 */
std::optional<CutResult> smallest_cut_below(const Multigraph& g, int bound,
                                            const Caps& caps = default_caps());

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct OddGirth {
  int length = kInfiniteGirth;
  std::vector<VertexId> cycle;
};

OddGirth odd_girth(const Multigraph& g);

}  // namespace orient9
