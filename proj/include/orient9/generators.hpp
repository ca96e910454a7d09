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

#include <random>
#include <utility>
#include <vector>

#include "orient9/embedding.hpp"
#include "orient9/multigraph.hpp"
#include "orient9/partition.hpp"

namespace orient9 {

using Rng = std::mt19937_64;

/// alpha parallel edges between two vertices.
Multigraph multi_k2(int alpha);

/// Triangle with multiplicities a (01), b (12), c (02).
Multigraph multi_triangle(int a, int b, int c);

/// Cycle 0-1-...-(n-1)-0 with the given multiplicities per consecutive pair.
Multigraph multi_cycle(const std::vector<int>& mult);

/// Each unordered pair gets a multiplicity in [0, max_mult] (probability
/// density of being non-zero); retried until connected.
Multigraph random_multigraph(Rng& rng, int n, int max_mult, double density);

struct EmbeddedGraph {
  Multigraph graph;
  PlaneEmbedding embedding;
};

/// Cycle C_n with its two faces.
EmbeddedGraph embedded_cycle(int n);

/// Adds an edge across face positions p and q of the face list of g.
EmbeddedGraph add_chord(const EmbeddedGraph& eg, int face, int p, int q);

/// Replaces edge id by a path of length `parts`.
EmbeddedGraph subdivide(const EmbeddedGraph& eg, EdgeId id, int parts);

/// Random 2-connected plane multigraph: a cycle with random face chords.
EmbeddedGraph random_plane_multigraph(Rng& rng, int cycle_length, int chords);

/** random_plane_multigraph with every edge split into 1..max_parts edges. */
EmbeddedGraph random_subdivided_plane_graph(Rng& rng, int cycle_length,
                                            int chords, int max_parts);

/// Uniform labels in [0, max_blocks), normalised.
Partition random_partition(Rng& rng, int n, int max_blocks);

}  // namespace orient9
