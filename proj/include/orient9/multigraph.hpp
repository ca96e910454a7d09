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

#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace orient9 {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/**
 * Finite loopless multigraph on vertices 0..n-1.
 *
 * Edges carry ids that are unique and preserved by every derived graph
 * (contraction keeps the ids of surviving edges, lifting adds a fresh id).
 * Edge order is the insertion order.
 */
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);

  /** Builds a graph from (u, v, multiplicity) triples; ids follow input order. */
  static Multigraph from_multiplicities(
      int n, const std::vector<std::tuple<int, int, int>>& pairs);

  EdgeId add_edge(VertexId u, VertexId v);
  EdgeId add_edge_with_id(EdgeId id, VertexId u, VertexId v);
  VertexId add_vertex();

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const;
  bool has_edge(EdgeId id) const { return index_.count(id) != 0; }
  int index_of(EdgeId id) const;
  EdgeId next_edge_id() const { return next_id_; }

  int multiplicity(VertexId a, VertexId b) const;
  int degree(VertexId v) const { return degree_[v]; }
  int min_degree() const;
  int max_multiplicity() const;
  /** Edge ids incident with v, in edge order. */
  std::vector<EdgeId> incident(VertexId v) const;
  /** Distinct neighbours of v in increasing order. */
  std::vector<VertexId> neighbours(VertexId v) const;
  /** Edge ids joining a and b, in edge order. */
  std::vector<EdgeId> edges_between(VertexId a, VertexId b) const;
  bool connected() const;

  /** Multiset signature independent of edge ids. */
  std::vector<int> multiplicity_matrix() const;

  bool same_multigraph(const Multigraph& other) const;

 private:
  void check_vertex(VertexId v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, int> index_;
  std::vector<int> mult_;
  std::vector<int> degree_;
  EdgeId next_id_ = 0;
};

std::string to_dot(const Multigraph& g);

}  // namespace orient9
