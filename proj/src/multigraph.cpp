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

#include "orient9/multigraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "orient9/errors.hpp"

namespace orient9 {

Multigraph::Multigraph(int n) : n_(n), mult_(n * n, 0), degree_(n, 0) {
  require(n >= 0, "vertex count must be non-negative");
}

Multigraph Multigraph::from_multiplicities(
    int n, const std::vector<std::tuple<int, int, int>>& pairs) {
  Multigraph g(n);
  for (const auto& [u, v, m] : pairs) {
    require(m >= 0, "multiplicity must be non-negative");
    for (int i = 0; i < m; ++i) g.add_edge(u, v);
  }
  return g;
}

void Multigraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  }
}

VertexId Multigraph::add_vertex() {
  std::vector<int> grown((n_ + 1) * (n_ + 1), 0);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) grown[a * (n_ + 1) + b] = mult_[a * n_ + b];
  }
  mult_ = std::move(grown);
  degree_.push_back(0);
  return n_++;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  return add_edge_with_id(next_id_, u, v);
}

EdgeId Multigraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
  if (id < 0 || index_.count(id)) {
    throw InvalidInput("duplicate edge id " + std::to_string(id));
  }
  index_[id] = static_cast<int>(edges_.size());
  edges_.push_back({id, u, v});
  ++mult_[u * n_ + v];
  ++mult_[v * n_ + u];
  ++degree_[u];
  ++degree_[v];
  next_id_ = std::max(next_id_, id + 1);
  return id;
}

const Edge& Multigraph::edge(EdgeId id) const { return edges_[index_of(id)]; }

int Multigraph::index_of(EdgeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw InvalidInput("unknown edge id " + std::to_string(id));
  }
  return it->second;
}

int Multigraph::multiplicity(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  return mult_[a * n_ + b];
}

int Multigraph::min_degree() const {
  return n_ == 0 ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

int Multigraph::max_multiplicity() const {
  return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
}

std::vector<EdgeId> Multigraph::incident(VertexId v) const {
  check_vertex(v);
  std::vector<EdgeId> out;
  for (const Edge& e : edges_) {
    if (e.u == v || e.v == v) out.push_back(e.id);
  }
  return out;
}

std::vector<VertexId> Multigraph::neighbours(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (int w = 0; w < n_; ++w) {
    if (mult_[v * n_ + w] > 0) out.push_back(w);
  }
  return out;
}

std::vector<EdgeId> Multigraph::edges_between(VertexId a, VertexId b) const {
  std::vector<EdgeId> out;
  for (const Edge& e : edges_) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) out.push_back(e.id);
  }
  return out;
}

bool Multigraph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < n_; ++b) {
      if (!seen[b] && mult_[a * n_ + b] > 0) {
        seen[b] = 1;
        ++count;
        stack.push_back(b);
      }
    }
  }
  return count == n_;
}

std::vector<int> Multigraph::multiplicity_matrix() const { return mult_; }

bool Multigraph::same_multigraph(const Multigraph& other) const {
  return n_ == other.n_ && mult_ == other.mult_;
}

std::string to_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (int a = 0; a < g.num_vertices(); ++a) {
    for (int b = a + 1; b < g.num_vertices(); ++b) {
      int m = g.multiplicity(a, b);
      if (m == 0) continue;
      out << "  " << a << " -- " << b;
      if (m > 1) out << " [label=\"" << m << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace orient9
