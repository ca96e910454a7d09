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

#include "orient9/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "orient9/errors.hpp"

namespace orient9 {

namespace {

struct RotationIndex {
  std::unordered_map<EndId, std::pair<VertexId, int>> where;

  explicit RotationIndex(const PlaneEmbedding& emb) {
    for (int v = 0; v < emb.num_vertices(); ++v) {
      const auto& rot = emb.rotation(v);
      for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
        where[rot[i]] = {v, i};
      }
    }
  }

  EndId next(const PlaneEmbedding& emb, EndId d) const {
    auto [v, i] = where.at(d);
    const auto& rot = emb.rotation(v);
    return rot[(i + 1) % rot.size()];
  }
};

std::vector<int> component_labels(const Multigraph& g) {
  std::vector<int> label(g.num_vertices(), -1);
  int next = 0;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : g.neighbours(a)) {
        if (label[b] < 0) {
          label[b] = next;
          stack.push_back(b);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

PlaneEmbedding::PlaneEmbedding(std::vector<std::vector<EndId>> rotation)
    : rotation_(std::move(rotation)) {}

VertexId end_vertex(const Multigraph& g, EndId d) {
  const Edge& e = g.edge(edge_of_end(d));
  return (d & 1) ? e.v : e.u;
}

void validate_embedding(const Multigraph& g, const PlaneEmbedding& emb) {
  require(emb.num_vertices() == g.num_vertices(),
          "embedding has " + std::to_string(emb.num_vertices()) +
              " rotations for " + std::to_string(g.num_vertices()) +
              " vertices");
  std::unordered_map<EndId, int> seen;
  for (int v = 0; v < emb.num_vertices(); ++v) {
    for (EndId d : emb.rotation(v)) {
      require(d >= 0 && g.has_edge(edge_of_end(d)),
              "rotation at " + std::to_string(v) + " names unknown end " +
                  std::to_string(d));
      require(end_vertex(g, d) == v, "end " + std::to_string(d) +
                                         " is not incident with vertex " +
                                         std::to_string(v));
      require(++seen[d] == 1, "end " + std::to_string(d) + " repeated");
    }
  }
  require(static_cast<int>(seen.size()) == 2 * g.num_edges(),
          "rotation system misses edge ends");
  FaceStructure fs = faces(g, emb);
  std::vector<int> comp = component_labels(g);
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<long> vcount(ncomp, 0), ecount(ncomp, 0), fcount(ncomp, 0);
  for (int v = 0; v < g.num_vertices(); ++v) ++vcount[comp[v]];
  for (const Edge& e : g.edges()) ++ecount[comp[e.u]];
  for (const Face& f : fs.faces) ++fcount[comp[f.vertices.front()]];
  for (int c = 0; c < ncomp; ++c) {
    if (ecount[c] == 0) continue;
    long chi = vcount[c] - ecount[c] + fcount[c];
    require(chi == 2, "rotation system is not planar (Euler characteristic " +
                          std::to_string(chi) + ")");
  }
}

FaceStructure faces(const Multigraph& g, const PlaneEmbedding& emb) {
  RotationIndex idx(emb);
  FaceStructure fs;
  for (const Edge& e : g.edges()) {
    for (EndId start : {end_at_u(e.id), end_at_v(e.id)}) {
      if (fs.face_of_dart.count(start)) continue;
      Face f;
      int id = static_cast<int>(fs.faces.size());
      EndId d = start;
      do {
        fs.face_of_dart[d] = id;
        f.darts.push_back(d);
        f.vertices.push_back(end_vertex(g, d));
        d = idx.next(emb, twin(d));
      } while (d != start);
      fs.faces.push_back(std::move(f));
    }
  }
  return fs;
}

DualGraph dual(const Multigraph& g, const PlaneEmbedding& emb) {
  require(g.connected(), "dual requires a connected graph");
  validate_embedding(g, emb);
  DualGraph out;
  out.faces = faces(g, emb);
  int nf = static_cast<int>(out.faces.faces.size());
  out.graph = Multigraph(nf);
  for (const Edge& e : g.edges()) {
    int a = out.faces.face_of_dart.at(end_at_u(e.id));
    int b = out.faces.face_of_dart.at(end_at_v(e.id));
    if (a == b) {
      throw InvalidInput("edge " + std::to_string(e.id) +
                         " is a bridge; its dual would be a loop");
    }
    out.graph.add_edge_with_id(e.id, a, b);
  }
  std::vector<std::vector<EndId>> rot(nf);
  for (int f = 0; f < nf; ++f) rot[f] = out.faces.faces[f].darts;
  out.embedding = PlaneEmbedding(std::move(rot));
  return out;
}

PlaneEmbedding embedding_from_coordinates(
    const Multigraph& g, const std::vector<std::pair<double, double>>& xy) {
  require(static_cast<int>(xy.size()) == g.num_vertices(),
          "one coordinate pair per vertex required");
  std::unordered_map<EdgeId, int> bundle_rank;
  {
    std::vector<std::vector<int>> seen(g.num_vertices(),
                                       std::vector<int>(g.num_vertices(), 0));
    for (const Edge& e : g.edges()) {
      int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
      bundle_rank[e.id] = seen[a][b]++;
    }
  }
  std::vector<std::vector<EndId>> rot(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<std::tuple<double, int, EndId>> keyed;
    for (EdgeId id : g.incident(v)) {
      const Edge& e = g.edge(id);
      EndId d = e.u == v ? end_at_u(id) : end_at_v(id);
      VertexId w = e.other(v);
      double ang = std::atan2(xy[w].second - xy[v].second,
                              xy[w].first - xy[v].first);
      int r = bundle_rank[id];
      keyed.emplace_back(ang, v < w ? r : -r, d);
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& k : keyed) rot[v].push_back(std::get<2>(k));
  }
  PlaneEmbedding emb(std::move(rot));
  validate_embedding(g, emb);
  return emb;
}

}  // namespace orient9
