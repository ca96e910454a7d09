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

#include "orient9/generators.hpp"

#include <algorithm>

#include "orient9/errors.hpp"

namespace orient9 {

Multigraph multi_k2(int alpha) {
  return Multigraph::from_multiplicities(2, {{0, 1, alpha}});
}

Multigraph multi_triangle(int a, int b, int c) {
  return Multigraph::from_multiplicities(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}});
}

Multigraph multi_cycle(const std::vector<int>& mult) {
  int n = static_cast<int>(mult.size());
  std::vector<std::tuple<int, int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n, mult[i]);
  return Multigraph::from_multiplicities(n, pairs);
}

Multigraph random_multigraph(Rng& rng, int n, int max_mult, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> pick(1, std::max(1, max_mult));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::tuple<int, int, int>> pairs;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (coin(rng) < density) pairs.emplace_back(a, b, pick(rng));
      }
    }
    Multigraph g = Multigraph::from_multiplicities(n, pairs);
    if (g.connected()) return g;
  }
  throw Error("could not sample a connected multigraph");
}

EmbeddedGraph embedded_cycle(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  EmbeddedGraph eg{Multigraph(n), {}};
  std::vector<std::vector<EndId>> rot(n);
  for (int i = 0; i < n; ++i) eg.graph.add_edge(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    rot[i] = {end_at_u(i), end_at_v((i + n - 1) % n)};
  }
  eg.embedding = PlaneEmbedding(std::move(rot));
  return eg;
}

EmbeddedGraph add_chord(const EmbeddedGraph& eg, int face, int p, int q) {
  FaceStructure fs = faces(eg.graph, eg.embedding);
  require(face >= 0 && face < static_cast<int>(fs.faces.size()), "bad face");
  const Face& f = fs.faces[face];
  VertexId u = f.vertices[p], w = f.vertices[q];
  require(u != w, "chord would be a loop");
  EndId du = f.darts[p], dw = f.darts[q];
  EmbeddedGraph out = eg;
  EdgeId id = out.graph.add_edge(u, w);
  auto& ru = out.embedding.rotations()[u];
  ru.insert(std::find(ru.begin(), ru.end(), du), end_at_u(id));
  auto& rw = out.embedding.rotations()[w];
  rw.insert(std::find(rw.begin(), rw.end(), dw), end_at_v(id));
  return out;
}

EmbeddedGraph subdivide(const EmbeddedGraph& eg, EdgeId id, int parts) {
  require(parts >= 1, "subdivision needs at least one part");
  if (parts == 1) return eg;
  const Edge& old = eg.graph.edge(id);
  EmbeddedGraph out{Multigraph(eg.graph.num_vertices()), eg.embedding};
  for (const Edge& e : eg.graph.edges()) {
    if (e.id != id) out.graph.add_edge_with_id(e.id, e.u, e.v);
  }
  auto& rot = out.embedding.rotations();
  VertexId prev = old.u;
  EndId prev_end = end_at_u(id);
  EdgeId next_id = eg.graph.next_edge_id();
  for (int i = 0; i < parts; ++i) {
    VertexId nxt = i + 1 == parts ? old.v : out.graph.add_vertex();
    if (i + 1 < parts) rot.emplace_back();
    EdgeId eid = i == 0 ? id : next_id++;
    out.graph.add_edge_with_id(eid, prev, nxt);
    if (i > 0) rot[prev].push_back(end_at_u(eid));
    if (i + 1 < parts) {
      rot[nxt].push_back(end_at_v(eid));
    } else {
      auto& rv = rot[old.v];
      *std::find(rv.begin(), rv.end(), end_at_v(id)) = end_at_v(eid);
    }
    prev = nxt;
    prev_end = end_at_u(eid);
  }
  (void)prev_end;
  return out;
}

EmbeddedGraph random_plane_multigraph(Rng& rng, int cycle_length, int chords) {
  EmbeddedGraph eg = embedded_cycle(cycle_length);
  for (int c = 0; c < chords; ++c) {
    FaceStructure fs = faces(eg.graph, eg.embedding);
    std::uniform_int_distribution<int> fpick(
        0, static_cast<int>(fs.faces.size()) - 1);
    for (int attempt = 0; attempt < 50; ++attempt) {
      int f = fpick(rng);
      int deg = fs.faces[f].degree();
      std::uniform_int_distribution<int> pos(0, deg - 1);
      int p = pos(rng), q = pos(rng);
      if (fs.faces[f].vertices[p] == fs.faces[f].vertices[q]) continue;
      eg = add_chord(eg, f, p, q);
      break;
    }
  }
  return eg;
}

EmbeddedGraph random_subdivided_plane_graph(Rng& rng, int cycle_length,
                                            int chords, int max_parts) {
  EmbeddedGraph eg = random_plane_multigraph(rng, cycle_length, chords);
  std::uniform_int_distribution<int> parts(1, max_parts);
  std::vector<EdgeId> ids;
  for (const Edge& e : eg.graph.edges()) ids.push_back(e.id);
  for (EdgeId id : ids) eg = subdivide(eg, id, parts(rng));
  return eg;
}

Partition random_partition(Rng& rng, int n, int max_blocks) {
  std::uniform_int_distribution<int> d(0, max_blocks - 1);
  std::vector<int> lab(n);
  for (int& l : lab) l = d(rng);
  return Partition(lab);
}

}  // namespace orient9
