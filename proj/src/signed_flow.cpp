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


#include "orient9/signed_flow.hpp"

#include <tuple>

#include "orient9/errors.hpp"

namespace orient9 {

namespace {

int mod(long x, int m) { return static_cast<int>(((x % m) + m) % m); }

}  // namespace

SignedGraph SignedGraph::from_multiplicities(
    int n, const std::vector<std::tuple<int, int, int, int>>& uv_pos_neg) {
  SignedGraph gs{Multigraph(n), {}};
  for (auto [u, v, pos, neg] : uv_pos_neg) {
    require(pos >= 0 && neg >= 0, "multiplicities must be non-negative");
    for (int i = 0; i < pos; ++i) {
      gs.graph.add_edge(u, v);
      gs.sign.push_back(1);
    }
    for (int i = 0; i < neg; ++i) {
      gs.graph.add_edge(u, v);
      gs.sign.push_back(-1);
    }
  }
  return gs;
}

int SignedGraph::positive_degree(VertexId v) const {
  int c = 0;
  for (int i = 0; i < graph.num_edges(); ++i) {
    const Edge& e = graph.edges()[i];
    if (sign[i] > 0 && (e.u == v || e.v == v)) ++c;
  }
  return c;
}

SignedFlowCheck verify_signed_flow(const SignedGraph& gs,
                                   const SignedCircularFlow& f) {
  SignedFlowCheck out;
  auto fail = [&](std::string msg) {
    out.valid = false;
    out.violations.push_back(std::move(msg));
  };
  const Multigraph& g = gs.graph;
  if (f.p <= 0 || f.p % 2 || f.q <= 0 ||
      static_cast<int>(f.value.size()) != g.num_edges() ||
      static_cast<int>(f.orientation.reversed.size()) != g.num_edges() ||
      static_cast<int>(gs.sign.size()) != g.num_edges()) {
    fail("flow does not match the signed graph");
    return out;
  }
  std::vector<long> net(g.num_vertices(), 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    int a = std::abs(f.value[i]);
    bool ok = gs.sign[i] > 0
                  ? (a >= f.q && a <= f.p - f.q)
                  : (a <= f.p / 2 - f.q || (a >= f.p / 2 + f.q && a <= f.p - 1));
    if (!ok) {
      fail("edge " + std::to_string(e.id) + (gs.sign[i] > 0 ? " (+)" : " (-)") +
           " value " + std::to_string(f.value[i]) + " out of range");
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

std::optional<std::vector<VertexId>> find_tight_cut(const SignedGraph& gs,
                                                    const SignedCircularFlow& f,
                                                    const Caps& caps) {
  const Multigraph& g = gs.graph;
  int n = g.num_vertices();
  if (n > caps.cut_scan_vertices || n >= 63) {
    throw CapExceeded("tight-cut scan over " + std::to_string(n) +
                      " vertices exceeds the cap of " +
                      std::to_string(caps.cut_scan_vertices));
  }
  int p = f.p, q = f.q;
  for (std::uint64_t m = 1; m + 1 < (1ULL << n); ++m) {
    bool tight = true;
    for (int i = 0; i < g.num_edges() && tight; ++i) {
      const Edge& e = g.edges()[i];
      bool a = m >> e.u & 1, b = m >> e.v & 1;
      if (a == b) continue;
      VertexId inside = a ? e.u : e.v;
      bool leaving = f.orientation.tail(e, i) == inside;
      int want = gs.sign[i] > 0 ? (leaving ? q : p - q)
                                : (leaving ? p / 2 + q : p / 2 - q);
      tight = mod(f.value[i] - want, p) == 0;
    }
    if (tight) {
      std::vector<VertexId> side;
      for (int v = 0; v < n; ++v) {
        if (m >> v & 1) side.push_back(v);
      }
      return side;
    }
  }
  return std::nullopt;
}

DoubledGraph double_graph(const Multigraph& g) {
  DoubledGraph out{Multigraph(g.num_vertices()), {}};
  for (const Edge& e : g.edges()) {
    EdgeId a = out.graph.add_edge(e.u, e.v);
    EdgeId b = out.graph.add_edge(e.u, e.v);
    out.copies.emplace_back(a, b);
  }
  return out;
}

std::vector<int> boundary_from_signature(const SignedGraph& gs, int k) {
  require(k >= 1, "k must be positive");
  std::vector<int> beta(gs.graph.num_vertices());
  for (int v = 0; v < gs.graph.num_vertices(); ++v) {
    beta[v] = mod(2L * k * gs.positive_degree(v), 4 * k);
  }
  return beta;
}

SignedCircularFlow build_signed_flow(const SignedGraph& gs, int k,
                                     const DoubledGraph& doubled,
                                     const Orientation& d) {
  const Multigraph& g = gs.graph;
  const Multigraph& g2 = doubled.graph;
  require(static_cast<int>(d.reversed.size()) == g2.num_edges(),
          "orientation does not match the doubled graph");
  require(is_strongly_connected(g2, d),
          "orientation of the doubled graph is not strongly connected");
  require(is_beta_orientation(g2, d, boundary_from_signature(gs, k), 4 * k),
          "orientation of the doubled graph misses the signature boundary");
  SignedCircularFlow f;
  f.p = 4 * k;
  f.q = 2 * k - 2;
  f.orientation.reversed.assign(g.num_edges(), 0);
  f.value.assign(g.num_edges(), 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    VertexId aux_tail = std::min(e.u, e.v);
    f.orientation.reversed[i] = aux_tail != e.u;
    int f1 = 0;
    for (EdgeId c : {doubled.copies[i].first, doubled.copies[i].second}) {
      int j = g2.index_of(c);
      f1 += d.tail(g2.edges()[j], j) == aux_tail ? 1 : -1;
    }
    int f2 = gs.sign[i] > 0 ? 2 * k : 0;
    f.value[i] = f1 + f2;
  }
  return f;
}

SignedPipeline run_signed_pipeline(const SignedGraph& gs, int k,
                                   const Caps& caps) {
  SignedPipeline out;
  DoubledGraph doubled = double_graph(gs.graph);
  auto d = find_sc_orientation(doubled.graph, 4 * k,
                               boundary_from_signature(gs, k), caps);
  if (!d) return out;
  out.orientation_found = true;
  out.doubled_orientation = *d;
  out.flow = build_signed_flow(gs, k, doubled, *d);
  out.check = verify_signed_flow(gs, out.flow);
  out.tight_cut = find_tight_cut(gs, out.flow, caps);
  return out;
}

}  // namespace orient9
