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

#include "orient9/graph_ops.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edge_connectivity.hpp>
#include <deque>
#include <iterator>
#include <set>

#include "orient9/errors.hpp"

namespace orient9 {

namespace {

std::vector<char> membership(const Multigraph& g,
                             const std::vector<VertexId>& s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : s) {
    require(v >= 0 && v < g.num_vertices(),
            "vertex " + std::to_string(v) + " out of range");
    require(!in[v], "vertex " + std::to_string(v) + " repeated");
    in[v] = 1;
  }
  return in;
}

bool induced_connected(const Multigraph& g, const std::vector<char>& in) {
  int start = -1, total = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) {
      ++total;
      if (start < 0) start = v;
    }
  }
  if (total <= 1) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : g.neighbours(a)) {
      if (in[b] && !seen[b]) {
        seen[b] = 1;
        ++count;
        stack.push_back(b);
      }
    }
  }
  return count == total;
}

void rotate_to_front(std::vector<EndId>& rot, EndId d) {
  auto it = std::find(rot.begin(), rot.end(), d);
  if (it == rot.end()) throw InvalidInput("end missing from rotation");
  std::rotate(rot.begin(), it, rot.end());
}

void erase_end(std::vector<EndId>& rot, EndId d) {
  auto it = std::find(rot.begin(), rot.end(), d);
  if (it == rot.end()) throw InvalidInput("end missing from rotation");
  rot.erase(it);
}

EndId end_at(const Edge& e, VertexId v) {
  return e.u == v ? end_at_u(e.id) : end_at_v(e.id);
}

bool consecutive(const std::vector<EndId>& rot, EndId a, EndId b) {
  int n = static_cast<int>(rot.size());
  for (int i = 0; i < n; ++i) {
    if (rot[i] == a) {
      return rot[(i + 1) % n] == b || rot[(i + n - 1) % n] == b;
    }
  }
  return false;
}

// Copies g without the listed edges; ids are kept.
Multigraph without_edges(const Multigraph& g, EdgeId a, EdgeId b) {
  Multigraph out(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (e.id != a && e.id != b) out.add_edge_with_id(e.id, e.u, e.v);
  }
  return out;
}

Lifted replace_pair(const Multigraph& g, VertexId v, EdgeId e1, EdgeId e2,
                    const PlaneEmbedding* emb, bool allow_same_end) {
  require(e1 != e2, "lifting needs two distinct edges");
  const Edge& a = g.edge(e1);
  const Edge& b = g.edge(e2);
  require(a.u == v || a.v == v, "edge " + std::to_string(e1) +
                                    " is not incident with " +
                                    std::to_string(v));
  require(b.u == v || b.v == v, "edge " + std::to_string(e2) +
                                    " is not incident with " +
                                    std::to_string(v));
  VertexId x = a.other(v), y = b.other(v);
  require(allow_same_end || x != y,
          "lifting needs x, v, y pairwise distinct");
  Lifted out;
  out.graph = without_edges(g, e1, e2);
  EdgeId fresh = g.next_edge_id();
  if (x != y) {
    out.new_edge = out.graph.add_edge_with_id(fresh, x, y);
  }
  if (emb) {
    std::vector<std::vector<EndId>> rot = emb->rotations();
    EndId av = end_at(a, v), bv = end_at(b, v);
    require(consecutive(rot[v], av, bv),
            "lifted edges are not consecutive in the rotation at " +
                std::to_string(v));
    erase_end(rot[v], av);
    erase_end(rot[v], bv);
    EndId ax = end_at(a, x), by = end_at(b, y);
    if (x != y) {
      *std::find(rot[x].begin(), rot[x].end(), ax) = end_at_u(fresh);
      *std::find(rot[y].begin(), rot[y].end(), by) = end_at_v(fresh);
    } else {
      erase_end(rot[x], ax);
      erase_end(rot[x], by);
    }
    out.embedding = PlaneEmbedding(std::move(rot));
  }
  return out;
}

}  // namespace

Contraction contract_subset(const Multigraph& g, const std::vector<VertexId>& s,
                            const PlaneEmbedding* emb) {
  require(!s.empty(), "cannot contract an empty vertex set");
  std::vector<char> in = membership(g, s);
  VertexId lead = *std::min_element(s.begin(), s.end());
  Contraction out;
  out.old_to_new.assign(g.num_vertices(), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!in[v]) {
      out.old_to_new[v] = next++;
    } else if (v == lead) {
      out.old_to_new[v] = next++;
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) out.old_to_new[v] = out.old_to_new[lead];
  }
  out.graph = Multigraph(next);
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) continue;
    out.graph.add_edge_with_id(e.id, out.old_to_new[e.u], out.old_to_new[e.v]);
  }
  if (emb) {
    require(induced_connected(g, in),
            "embedded contraction needs a connected vertex set");
    std::vector<std::vector<EndId>> rot = emb->rotations();
    std::vector<char> merged(g.num_vertices(), 0);
    merged[lead] = 1;
    std::vector<EndId> blob = rot[lead];
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Edge& e : g.edges()) {
        if (!in[e.u] || !in[e.v] || merged[e.u] == merged[e.v]) continue;
        VertexId a = merged[e.u] ? e.u : e.v;
        VertexId b = e.other(a);
        rotate_to_front(blob, end_at(e, a));
        std::vector<EndId> rb = rot[b];
        rotate_to_front(rb, end_at(e, b));
        blob.erase(blob.begin());
        blob.insert(blob.end(), rb.begin() + 1, rb.end());
        merged[b] = 1;
        grew = true;
      }
    }
    std::vector<EndId> cleaned;
    for (EndId d : blob) {
      const Edge& e = g.edge(edge_of_end(d));
      if (!(in[e.u] && in[e.v])) cleaned.push_back(d);
    }
    std::vector<std::vector<EndId>> nrot(next);
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (!in[v]) nrot[out.old_to_new[v]] = rot[v];
    }
    nrot[out.old_to_new[lead]] = std::move(cleaned);
    out.embedding = PlaneEmbedding(std::move(nrot));
  }
  return out;
}

Contraction contract_partition(const Multigraph& g,
                               const std::vector<int>& block_of) {
  require(static_cast<int>(block_of.size()) == g.num_vertices(),
          "partition must label every vertex");
  int t = 0;
  for (int b : block_of) {
    require(b >= 0, "block labels must be non-negative");
    t = std::max(t, b + 1);
  }
  std::vector<char> used(t, 0);
  for (int b : block_of) used[b] = 1;
  for (int b = 0; b < t; ++b) require(used[b], "empty block in partition");
  Contraction out;
  out.old_to_new = block_of;
  out.graph = Multigraph(t);
  for (const Edge& e : g.edges()) {
    if (block_of[e.u] == block_of[e.v]) continue;
    out.graph.add_edge_with_id(e.id, block_of[e.u], block_of[e.v]);
  }
  return out;
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<VertexId>& s,
                            std::vector<VertexId>* old_to_new) {
  std::vector<char> in = membership(g, s);
  std::vector<VertexId> map(g.num_vertices(), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) map[v] = next++;
  }
  Multigraph out(next);
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) out.add_edge_with_id(e.id, map[e.u], map[e.v]);
  }
  if (old_to_new) *old_to_new = std::move(map);
  return out;
}

Multigraph delete_vertex(const Multigraph& g, VertexId v,
                         std::vector<VertexId>* old_to_new) {
  std::vector<VertexId> keep;
  for (int w = 0; w < g.num_vertices(); ++w) {
    if (w != v) keep.push_back(w);
  }
  return induced_subgraph(g, keep, old_to_new);
}

Lifted lift_edges(const Multigraph& g, VertexId v, EdgeId e1, EdgeId e2,
                  const PlaneEmbedding* emb) {
  return replace_pair(g, v, e1, e2, emb, false);
}

Lifted lift_pair(const Multigraph& g, VertexId v, VertexId x, VertexId y,
                 const PlaneEmbedding* emb) {
  require(x != y && x != v && y != v, "lifting needs x, v, y distinct");
  auto xv = g.edges_between(x, v);
  auto vy = g.edges_between(v, y);
  require(!xv.empty() && !vy.empty(), "no edge pair x-v-y to lift");
  return lift_edges(g, v, xv.front(), vy.front(), emb);
}

Lifted split_off(const Multigraph& g, VertexId v, EdgeId e1, EdgeId e2,
                 const PlaneEmbedding* emb) {
  return replace_pair(g, v, e1, e2, emb, true);
}

int cut_size(const Multigraph& g, const std::vector<VertexId>& side) {
  std::vector<char> in = membership(g, side);
  int d = 0;
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) ++d;
  }
  return d;
}

CutResult edge_connectivity(const Multigraph& g) {
  CutResult out;
  if (g.num_vertices() <= 1) {
    out.value = std::numeric_limits<int>::max();
    return out;
  }
  using BGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(g.num_vertices());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<boost::graph_traits<BGraph>::edge_descriptor> cut;
  out.value = static_cast<int>(
      boost::edge_connectivity(bg, std::back_inserter(cut)));
  std::multiset<std::pair<int, int>> removed;
  for (const auto& ed : cut) {
    int a = static_cast<int>(boost::source(ed, bg));
    int b = static_cast<int>(boost::target(ed, bg));
    removed.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<std::vector<int>> residual(g.num_vertices(),
                                         std::vector<int>(g.num_vertices(), 0));
  for (int a = 0; a < g.num_vertices(); ++a) {
    for (int b = 0; b < g.num_vertices(); ++b) {
      residual[a][b] = g.multiplicity(a, b);
    }
  }
  for (const auto& [a, b] : removed) {
    --residual[a][b];
    --residual[b][a];
  }
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < g.num_vertices(); ++b) {
      if (!seen[b] && residual[a][b] > 0) {
        seen[b] = 1;
        stack.push_back(b);
      }
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (seen[v]) out.side.push_back(v);
  }
  if (static_cast<int>(out.side.size()) == g.num_vertices()) out.side = {0};
  out.value = cut_size(g, out.side);
  return out;
}

CutResult odd_edge_connectivity(const Multigraph& g, const Caps& caps) {
  int n = g.num_vertices();
  if (n > caps.cut_scan_vertices) {
    throw CapExceeded("odd cut scan limited to " +
                      std::to_string(caps.cut_scan_vertices) + " vertices");
  }
  CutResult best;
  best.value = kNoOddCut;
  if (n <= 1) return best;
  std::vector<int> mult = g.multiplicity_matrix();
  std::vector<int> into(n, 0);  // multiplicity from w into X
  std::uint32_t mask = 0, best_mask = 0;
  int d = 0;
  std::uint64_t total = 1ULL << (n - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    int u = __builtin_ctzll(i);
    if (mask >> u & 1U) {
      d -= g.degree(u) - 2 * into[u];
      mask &= ~(1U << u);
      for (int w = 0; w < n; ++w) into[w] -= mult[u * n + w];
    } else {
      d += g.degree(u) - 2 * into[u];
      mask |= 1U << u;
      for (int w = 0; w < n; ++w) into[w] += mult[u * n + w];
    }
    if ((d & 1) && d < best.value) {
      best.value = d;
      best_mask = mask;
    }
  }
  if (best.value != kNoOddCut) {
    for (int v = 0; v < n; ++v) {
      if (best_mask >> v & 1U) best.side.push_back(v);
    }
  }
  return best;
}

std::optional<CutResult> smallest_cut_below(const Multigraph& g, int bound,
                                            const Caps& caps) {
  int n = g.num_vertices();
  if (n > caps.cut_scan_vertices) {
    throw CapExceeded("cut scan limited to " +
                      std::to_string(caps.cut_scan_vertices) + " vertices");
  }
  std::vector<int> mult = g.multiplicity_matrix();
  for (int k = 1; k <= n / 2; ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<char> in(n, 0);
      for (int v : pick) in[v] = 1;
      int d = 0;
      for (int a : pick) {
        for (int b = 0; b < n; ++b) {
          if (!in[b]) d += mult[a * n + b];
        }
      }
      if (d < bound) return CutResult{d, pick};
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

OddGirth odd_girth(const Multigraph& g) {
  int n = g.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbours(v);
  OddGirth best;
  int br = -1, ba = -1, bb = -1;
  std::vector<int> best_parent;
  for (int r = 0; r < n; ++r) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue{r};
    dist[r] = 0;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b : adj[a]) {
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          parent[b] = a;
          queue.push_back(b);
        } else if (dist[b] == dist[a] && a < b) {
          int len = 2 * dist[a] + 1;
          if (len < best.length) {
            best.length = len;
            br = r;
            ba = a;
            bb = b;
            best_parent = parent;
          }
        }
      }
    }
  }
  if (br < 0) return best;
  std::vector<int> pa{ba}, pb{bb};
  while (pa.back() != br) pa.push_back(best_parent[pa.back()]);
  while (pb.back() != br) pb.push_back(best_parent[pb.back()]);
  while (pa.size() > 1 && pb.size() > 1 &&
         pa[pa.size() - 2] == pb[pb.size() - 2]) {
    pa.pop_back();
    pb.pop_back();
  }
  best.cycle = pa;
  for (int i = static_cast<int>(pb.size()) - 2; i >= 0; --i) {
    best.cycle.push_back(pb[i]);
  }
  best.length = static_cast<int>(best.cycle.size());
  return best;
}

}  // namespace orient9
