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


#include "orient9/hom_flow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numbers>

#include "orient9/errors.hpp"

namespace orient9 {

namespace {

int mod(long x, int m) { return static_cast<int>(((x % m) + m) % m); }

/** Balanced representative in (-m/2, m/2]. */
int balanced(long x, int m) {
  int r = mod(x, m);
  return 2 * r > m ? r - m : r;
}

class CycleCsp {
 public:
  CycleCsp(const Multigraph& g, int k, std::uint64_t budget)
      : n_(g.num_vertices()), p_(2 * k + 1), budget_(budget), adj_(n_) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbours(v);
    full_ = (p_ == 64) ? ~0ULL : (1ULL << p_) - 1;
  }

  HomResult solve() {
    HomResult r;
    std::vector<std::uint64_t> dom(n_, full_);
    std::vector<int> comp(n_, -1);
    for (int s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> members{s};
      comp[s] = s;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (int w : adj_[members[i]]) {
          if (comp[w] < 0) {
            comp[w] = s;
            members.push_back(w);
          }
        }
      }
      int root = *std::max_element(
          members.begin(), members.end(), [&](int a, int b) {
            return adj_[a].size() < adj_[b].size() ||
                   (adj_[a].size() == adj_[b].size() && a > b);
          });
      dom[root] = 1;
      if (!propagate(dom, {root})) {
        r.status = HomStatus::kNone;
        return r;
      }
    }
    int res = search(dom);
    r.nodes = nodes_;
    if (res == 1) {
      r.status = HomStatus::kFound;
      HomMap m;
      m.k = (p_ - 1) / 2;
      for (std::uint64_t d : solution_) m.image.push_back(__builtin_ctzll(d));
      r.map = m;
    } else {
      r.status = res == 0 ? HomStatus::kNone : HomStatus::kBudget;
    }
    return r;
  }

 private:
  std::uint64_t support(std::uint64_t d) const {
    std::uint64_t up = ((d << 1) | (d >> (p_ - 1))) & full_;
    std::uint64_t down = ((d >> 1) | ((d & 1) << (p_ - 1))) & full_;
    return up | down;
  }

  bool propagate(std::vector<std::uint64_t>& dom, std::deque<int> queue) const {
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      std::uint64_t s = support(dom[u]);
      for (int w : adj_[u]) {
        std::uint64_t nd = dom[w] & s;
        if (nd == dom[w]) continue;
        if (nd == 0) return false;
        dom[w] = nd;
        queue.push_back(w);
      }
    }
    return true;
  }

  // 1 found, 0 exhausted, -1 budget.
  int search(const std::vector<std::uint64_t>& dom) {
    if (++nodes_ > budget_) return -1;
    int pick = -1, best_deg = -1, best_size = 65;
    for (int v = 0; v < n_; ++v) {
      int size = __builtin_popcountll(dom[v]);
      if (size <= 1) continue;
      int deg = static_cast<int>(adj_[v].size());
      if (deg > best_deg || (deg == best_deg && size < best_size)) {
        pick = v;
        best_deg = deg;
        best_size = size;
      }
    }
    if (pick < 0) {
      solution_ = dom;
      return 1;
    }
    std::uint64_t rest = dom[pick];
    while (rest) {
      std::uint64_t bit = rest & -rest;
      rest ^= bit;
      std::vector<std::uint64_t> next = dom;
      next[pick] = bit;
      if (!propagate(next, {pick})) continue;
      int res = search(next);
      if (res != 0) return res;
    }
    return 0;
  }

  int n_;
  int p_;
  std::uint64_t budget_;
  std::uint64_t full_ = 0;
  std::vector<std::vector<int>> adj_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> solution_;
};

}  // namespace

bool is_homomorphism(const Multigraph& g, const HomMap& phi) {
  int p = 2 * phi.k + 1;
  if (phi.k < 1 || static_cast<int>(phi.image.size()) != g.num_vertices()) {
    return false;
  }
  for (int x : phi.image) {
    if (x < 0 || x >= p) return false;
  }
  for (const Edge& e : g.edges()) {
    int d = mod(phi.image[e.u] - phi.image[e.v], p);
    if (d != 1 && d != p - 1) return false;
  }
  return true;
}

std::string to_string(HomStatus s) {
  switch (s) {
    case HomStatus::kFound:
      return "found";
    case HomStatus::kNone:
      return "none";
    case HomStatus::kBudget:
      return "budget";
  }
  return "unknown";
}

HomResult find_homomorphism(const Multigraph& g, int k, const Caps& caps) {
  require(k >= 1 && 2 * k + 1 <= 63, "k must lie in 1..31");
  HomResult r = CycleCsp(g, k, caps.hom_nodes).solve();
  if (r.map && !is_homomorphism(g, *r.map)) {
    throw Error("solver produced an invalid map");
  }
  return r;
}

EmbeddedGraph gadget(int k) {
  require(k >= 1, "k must be positive");
  int len = 4 * k - 1, inner = 2 * k - 2;
  int apex = len;
  Multigraph g(len + 1 + len * inner);
  std::vector<std::pair<double, double>> xy(g.num_vertices());
  for (int i = 0; i < len; ++i) {
    double a = 2 * std::numbers::pi * i / len;
    xy[i] = {std::cos(a), std::sin(a)};
    g.add_edge(i, (i + 1) % len);
  }
  xy[apex] = {0.0, 0.0};
  int next = len + 1;
  for (int i = 0; i < len; ++i) {
    int prev = apex;
    for (int j = 1; j <= inner; ++j) {
      double r = static_cast<double>(j) / (inner + 1);
      xy[next] = {r * xy[i].first, r * xy[i].second};
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, i);
  }
  PlaneEmbedding emb = embedding_from_coordinates(g, xy);
  validate_embedding(g, emb);
  return {g, emb};
}

FlowCheck check_circular_flow(const Multigraph& g, const CircularFlow& f) {
  FlowCheck out;
  auto fail = [&](std::string msg) {
    out.valid = false;
    out.violations.push_back(std::move(msg));
  };
  if (f.p <= 0 || f.q < 0 || static_cast<int>(f.value.size()) != g.num_edges() ||
      static_cast<int>(f.orientation.reversed.size()) != g.num_edges()) {
    fail("flow does not match the graph");
    return out;
  }
  std::vector<long> net(g.num_vertices(), 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    int a = std::abs(f.value[i]);
    if (a < f.q || a > f.p - f.q) {
      fail("edge " + std::to_string(e.id) + " value " +
           std::to_string(f.value[i]) + " out of range");
    }
    net[f.orientation.tail(e, i)] += f.value[i];
    net[f.orientation.head(e, i)] -= f.value[i];
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (mod(net[v], f.p) != 0) {
      fail("vertex " + std::to_string(v) + " boundary " +
           std::to_string(net[v]) + " not 0 mod " + std::to_string(f.p));
    }
  }
  return out;
}

CircularFlow hom_to_dual_flow(const Multigraph& g, const DualGraph& dual,
                              const HomMap& phi) {
  require(is_homomorphism(g, phi), "map is not a homomorphism");
  int k = phi.k, p = 2 * k + 1;
  CircularFlow f;
  f.p = p;
  f.q = k;
  const Multigraph& d = dual.graph;
  f.orientation.reversed.assign(d.num_edges(), 0);
  f.value.assign(d.num_edges(), 0);
  for (int i = 0; i < d.num_edges(); ++i) {
    const Edge& e = g.edge(d.edges()[i].id);
    f.value[i] = balanced(static_cast<long>(k) *
                              (phi.image[e.v] - phi.image[e.u]), p);
  }
  if (!check_circular_flow(d, f).valid) {
    throw Error("dual flow failed verification");
  }
  return f;
}

HomMap dual_flow_to_hom(const Multigraph& g, const DualGraph& dual,
                        const CircularFlow& f, int k) {
  int p = 2 * k + 1;
  require(f.p == p && f.q == k, "flow parameters must be (2k+1, k)");
  FlowCheck fc = check_circular_flow(dual.graph, f);
  require(fc.valid, "not a circular flow: " +
                        (fc.violations.empty() ? "" : fc.violations.front()));
  int inverse_k = p - 2;  // k * (-2) = -(2k+1) + 1
  std::vector<int> step(g.next_edge_id(), 0);
  for (int i = 0; i < dual.graph.num_edges(); ++i) {
    const Edge& de = dual.graph.edges()[i];
    long v = f.orientation.reversed[i] ? -f.value[i] : f.value[i];
    // Dual edges are stored from the face of end 2e to the face of end 2e+1.
    if (de.u != dual.faces.face_of_dart.at(end_at_u(de.id))) v = -v;
    step[de.id] = mod(v * inverse_k, p);
  }
  HomMap phi;
  phi.k = k;
  phi.image.assign(g.num_vertices(), -1);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (phi.image[s] >= 0) continue;
    phi.image[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (EdgeId id : g.incident(x)) {
        const Edge& e = g.edge(id);
        int y = e.other(x);
        int want = x == e.u ? mod(phi.image[x] + step[id], p)
                            : mod(phi.image[x] - step[id], p);
        if (phi.image[y] < 0) {
          phi.image[y] = want;
          queue.push_back(y);
        } else if (phi.image[y] != want) {
          throw InvalidInput("flow does not integrate around edge " +
                             std::to_string(id));
        }
      }
    }
  }
  if (!is_homomorphism(g, phi)) throw Error("integrated map is not a homomorphism");
  return phi;
}

CircularFlow orientation_to_flow(const Multigraph& g, const Orientation& d,
                                 int k) {
  require(static_cast<int>(d.reversed.size()) == g.num_edges(),
          "orientation does not match the graph");
  CircularFlow f;
  f.orientation = d;
  f.value.assign(g.num_edges(), k);
  f.p = 2 * k + 1;
  f.q = k;
  return f;
}

Orientation flow_to_orientation(const Multigraph& g, const CircularFlow& f,
                                int k) {
  int p = 2 * k + 1;
  require(static_cast<int>(f.value.size()) == g.num_edges() &&
              static_cast<int>(f.orientation.reversed.size()) == g.num_edges(),
          "flow does not match the graph");
  Orientation out;
  out.reversed.assign(g.num_edges(), 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    int v = balanced(f.value[i], p);
    bool rev = f.orientation.reversed[i];
    if (v < 0) {
      v = -v;
      rev = !rev;
    }
    if (v != k && v != k + 1) {
      throw InvalidInput("edge " + std::to_string(g.edges()[i].id) +
                         " value outside {k, k+1} after normalisation");
    }
    out.reversed[i] = (v == k) ? rev : !rev;
  }
  return out;
}

}  // namespace orient9
