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

#include <unordered_map>
#include <utility>
#include <vector>

#include "orient9/multigraph.hpp"

namespace orient9 {

// End ids: the end of edge e at e.u is 2e, the end at e.v is 2e + 1.
using EndId = int;

inline EndId end_at_u(EdgeId e) { return 2 * e; }
inline EndId end_at_v(EdgeId e) { return 2 * e + 1; }
inline EdgeId edge_of_end(EndId d) { return d >> 1; }
inline EndId twin(EndId d) { return d ^ 1; }

/**
 * Rotation system: for every vertex the cyclic order of its edge ends.
 * A dart is named by the end it leaves from.
 */
class PlaneEmbedding {
 public:
  PlaneEmbedding() = default;
  explicit PlaneEmbedding(std::vector<std::vector<EndId>> rotation);

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  const std::vector<EndId>& rotation(VertexId v) const { return rotation_[v]; }
  std::vector<std::vector<EndId>>& rotations() { return rotation_; }
  const std::vector<std::vector<EndId>>& rotations() const { return rotation_; }

 private:
  std::vector<std::vector<EndId>> rotation_;
};

struct Face {
  std::vector<EndId> darts;  // boundary walk
  std::vector<VertexId> vertices;  // origin of each dart
  int degree() const { return static_cast<int>(darts.size()); }
};

struct FaceStructure {
  std::vector<Face> faces;
  std::unordered_map<EndId, int> face_of_dart;
};

struct DualGraph {
  Multigraph graph;  // vertex i is face i; edge ids follow the primal
  PlaneEmbedding embedding;
  FaceStructure faces;
};

VertexId end_vertex(const Multigraph& g, EndId d);

/** Throws InvalidInput unless emb is a genus-0 rotation system of g. */
void validate_embedding(const Multigraph& g, const PlaneEmbedding& emb);

FaceStructure faces(const Multigraph& g, const PlaneEmbedding& emb);

/** Geometric dual; requires g connected and bridgeless. */
DualGraph dual(const Multigraph& g, const PlaneEmbedding& emb);

/**
 * Rotation system induced by a straight-line drawing. Parallel edges are
 * bundled and ordered consistently at both ends.
 */
PlaneEmbedding embedding_from_coordinates(
    const Multigraph& g, const std::vector<std::pair<double, double>>& xy);

}  // namespace orient9
