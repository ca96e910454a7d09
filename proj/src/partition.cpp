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

#include "orient9/partition.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "orient9/errors.hpp"
#include "orient9/graph_ops.hpp"
#include "orient9/multigraph.hpp"

namespace orient9 {

namespace {

void check_partition_cap(int n, const Caps& caps) {
  if (n > caps.partition_vertices) {
    throw CapExceeded("partition enumeration limited to " +
                      std::to_string(caps.partition_vertices) + " vertices");
  }
}

// Multiplicities between blocks; returns t*t matrix.
std::vector<int> quotient_matrix(const Multigraph& g,
                                 const std::vector<int>& labels, int t) {
  std::vector<int> q(t * t, 0);
  for (const Edge& e : g.edges()) {
    int a = labels[e.u], b = labels[e.v];
    if (a == b) continue;
    ++q[a * t + b];
    ++q[b * t + a];
  }
  return q;
}

Family classify_matrix(int t, const std::vector<int>& q) {
  if (t == 2) {
    int alpha = q[1];
    if (alpha >= 1 && alpha <= 7) return Family::kN;
    if (alpha == 8) return Family::kWStar;
    return Family::kNeither;
  }
  if (t == 3) {
    int a = q[0 * 3 + 1], b = q[1 * 3 + 2], c = q[0 * 3 + 2];
    if (a < 1 || b < 1 || c < 1) return Family::kNeither;
    int s = a + b + c;
    int delta = std::min({a + c, a + b, b + c});
    if (s <= 15) return Family::kN;
    if (s == 16 && delta >= 9) return Family::kWStar;
  }
  return Family::kNeither;
}

int count_blocks(const std::vector<int>& labels) {
  return labels.empty() ? 0
                        : *std::max_element(labels.begin(), labels.end()) + 1;
}

// Visits partitions with two or three blocks; f(labels, family of quotient).
void for_each_small_quotient(
    const Multigraph& g,
    const std::function<bool(const std::vector<int>&, Family)>& f) {
  for_each_partition(g.num_vertices(), 3, [&](const std::vector<int>& labels) {
    int t = count_blocks(labels);
    if (t < 2) return true;
    return f(labels, classify_matrix(t, quotient_matrix(g, labels, t)));
  });
}

bool is_trivial_labels(const std::vector<int>& labels) {
  return count_blocks(labels) == static_cast<int>(labels.size());
}

}  // namespace

Partition::Partition(const std::vector<int>& labels) {
  std::vector<int> remap;
  block_of_.reserve(labels.size());
  for (int l : labels) {
    require(l >= 0, "partition labels must be non-negative");
    if (l >= static_cast<int>(remap.size())) remap.resize(l + 1, -1);
    if (remap[l] < 0) remap[l] = num_blocks_++;
    block_of_.push_back(remap[l]);
  }
}

Partition Partition::from_blocks(int n,
                                 const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(n, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    require(!blocks[b].empty(), "empty block");
    for (int v : blocks[b]) {
      require(v >= 0 && v < n, "block vertex out of range");
      require(labels[v] < 0, "vertex in two blocks");
      labels[v] = b;
    }
  }
  for (int l : labels) require(l >= 0, "blocks do not cover every vertex");
  return Partition(labels);
}

Partition Partition::trivial(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  return Partition(labels);
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks_);
  for (int v = 0; v < size(); ++v) out[block_of_[v]].push_back(v);
  return out;
}

std::vector<int> Partition::sorted_sizes() const {
  std::vector<int> sizes(num_blocks_, 0);
  for (int b : block_of_) ++sizes[b];
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::string to_string(const Partition& p) {
  std::ostringstream out;
  out << "{";
  auto blocks = p.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out << " | ";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out << ",";
      out << blocks[b][i];
    }
  }
  out << "}";
  return out.str();
}

void for_each_partition(int n, int max_blocks,
                        const std::function<bool(const std::vector<int>&)>& f) {
  if (n == 0) {
    f({});
    return;
  }
  std::vector<int> labels(n, 0);
  bool stop = false;
  std::function<void(int, int)> rec = [&](int i, int t) {
    if (stop) return;
    if (i == n) {
      if (!f(labels)) stop = true;
      return;
    }
    int top = std::min(t + 1, max_blocks);
    for (int b = 0; b < top && !stop; ++b) {
      labels[i] = b;
      rec(i + 1, std::max(t, b + 1));
    }
  };
  labels[0] = 0;
  rec(1, 1);
}

long weight_of_partition(const Multigraph& g, const Partition& p,
                         const WeightConstants& c) {
  require(p.size() == g.num_vertices(), "partition size mismatch");
  long cross = 0;
  for (const Edge& e : g.edges()) {
    if (p.block_of(e.u) != p.block_of(e.v)) ++cross;
  }
  return 2 * cross - static_cast<long>(c.per_part) * p.num_blocks() +
         c.additive;
}

MinWeight min_weight(const Multigraph& g, const WeightConstants& c,
                     const Caps& caps) {
  int n = g.num_vertices();
  require(n >= 2, "min_weight needs at least two vertices");
  check_partition_cap(n, caps);
  std::vector<int> mult = g.multiplicity_matrix();
  std::vector<int> labels(n, 0), best_labels;
  std::vector<int> to_assigned(n, 0);        // a_u
  std::vector<int> to_block(n * n, 0);       // a_{u,b}
  long best = std::numeric_limits<long>::max();
  long cross = 0;
  auto assign = [&](int i, int b, int sign) {
    for (int u = 0; u < n; ++u) {
      to_assigned[u] += sign * mult[u * n + i];
      to_block[u * n + b] += sign * mult[u * n + i];
    }
  };
  std::function<void(int, int)> rec = [&](int i, int t) {
    if (i == n) {
      if (t < 2) return;
      long w = 2 * cross - static_cast<long>(c.per_part) * t + c.additive;
      if (w < best) {
        best = w;
        best_labels = labels;
      }
      return;
    }
    long bound = 2 * cross - static_cast<long>(c.per_part) * t + c.additive;
    for (int u = i; u < n; ++u) {
      int top = 0;
      for (int b = 0; b < t; ++b) top = std::max(top, to_block[u * n + b]);
      long join = 2L * (to_assigned[u] - top);
      long open = 2L * to_assigned[u] - c.per_part;
      bound += std::min(join, open);
    }
    if (bound >= best) return;
    for (int b = 0; b <= t && b < n; ++b) {
      labels[i] = b;
      long added = to_assigned[i] - to_block[i * n + b];
      cross += added;
      assign(i, b, +1);
      rec(i + 1, std::max(t, b + 1));
      assign(i, b, -1);
      cross -= added;
    }
  };
  labels[0] = 0;
  assign(0, 0, +1);
  rec(1, 1);
  return {best, Partition(best_labels)};
}

std::string to_string(Family f) {
  switch (f) {
    case Family::kN:
      return "N";
    case Family::kWStar:
      return "W*";
    default:
      return "neither";
  }
}

Family classify_family(const Multigraph& g) {
  int n = g.num_vertices();
  if (n != 2 && n != 3) return Family::kNeither;
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  return classify_matrix(n, quotient_matrix(g, labels, n));
}

std::optional<Partition> quotient_in_N(const Multigraph& g,
                                       bool nontrivial_only, const Caps& caps) {
  check_partition_cap(g.num_vertices(), caps);
  std::optional<Partition> hit;
  for_each_small_quotient(g, [&](const std::vector<int>& labels, Family f) {
    if (nontrivial_only && is_trivial_labels(labels)) return true;
    if (f == Family::kN) {
      hit = Partition(labels);
      return false;
    }
    return true;
  });
  return hit;
}

GoodnessReport is_N_good(const Multigraph& g, const WeightConstants& c,
                         const Caps& caps) {
  require(g.num_vertices() >= 2, "goodness needs at least two vertices");
  require(g.connected(), "goodness needs a connected graph");
  GoodnessReport r;
  MinWeight mw = min_weight(g, c, caps);
  r.min_weight = mw.value;
  if (mw.value < 0) {
    r.reason = "negative weight";
    r.witness = mw.argmin;
    return r;
  }
  if (classify_family(g) == Family::kN) {
    r.reason = "graph lies in N";
    r.witness = Partition::trivial(g.num_vertices());
    return r;
  }
  bool ok = true;
  for_each_small_quotient(g, [&](const std::vector<int>& labels, Family f) {
    if (is_trivial_labels(labels) || f == Family::kNeither) return true;
    ok = false;
    r.reason = "nontrivial quotient lies in " + to_string(f);
    r.witness = Partition(labels);
    return false;
  });
  r.good = ok;
  return r;
}

GoodnessReport is_S_good(const Multigraph& g, const WeightConstants& c,
                         const Caps& caps) {
  require(g.num_vertices() >= 2, "goodness needs at least two vertices");
  require(g.connected(), "goodness needs a connected graph");
  GoodnessReport r;
  MinWeight mw = min_weight(g, c, caps);
  r.min_weight = mw.value;
  if (mw.value < 0) {
    r.reason = "negative weight";
    r.witness = mw.argmin;
    return r;
  }
  bool ok = true;
  for_each_small_quotient(g, [&](const std::vector<int>& labels, Family f) {
    if (f == Family::kNeither) return true;
    ok = false;
    r.reason = "quotient lies in " + to_string(f);
    r.witness = Partition(labels);
    return false;
  });
  r.good = ok;
  return r;
}

RefinementCheck refinement_identity(const Multigraph& g, const Partition& p,
                                    int block, const Partition& q,
                                    const WeightConstants& c) {
  require(p.size() == g.num_vertices(), "partition size mismatch");
  require(block >= 0 && block < p.num_blocks(), "block index out of range");
  std::vector<int> members = p.blocks()[block];
  require(q.size() == static_cast<int>(members.size()),
          "refinement must partition the chosen block");
  Multigraph h = induced_subgraph(g, members);
  std::vector<int> labels(g.num_vertices());
  int offset = q.num_blocks();
  for (int v = 0; v < g.num_vertices(); ++v) {
    int b = p.block_of(v);
    labels[v] = b < block ? offset + b : offset + b - 1;
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    labels[members[i]] = q.block_of(static_cast<int>(i));
  }
  RefinementCheck r;
  r.lhs = weight_of_partition(h, q, c);
  r.rhs = weight_of_partition(g, Partition(labels), c) -
          weight_of_partition(g, p, c) + c.additive - c.per_part;
  r.holds = r.lhs == r.rhs;
  return r;
}

BoundCheck partition_bound_check(const Multigraph& g, const Partition& p,
                                 const WeightConstants& c) {
  BoundCheck r;
  r.weight = weight_of_partition(g, p, c);
  Contraction q = contract_partition(g, p.labels());
  r.quotient = classify_family(q.graph);
  int t = p.num_blocks();
  bool nine = g.num_vertices() >= 2 && g.connected() &&
              edge_connectivity(g).value >= 9;
  long w = r.weight;
  r.clauses = {{{"w>=11 => not N", w >= 11, false, false},
                {"w>=13 => not N or W*", w >= 13, true, false},
                {"w>=4, t>=3 => not N", w >= 4 && t >= 3, false, false},
                {"w>=6, t>=3 => not N or W*", w >= 6 && t >= 3, true, false},
                {"w>=6, 9-edge-connected => not N or W*", w >= 6 && nine,
                 true, false}}};
  for (BoundClause& cl : r.clauses) {
    cl.conclusion_holds =
        r.quotient == Family::kNeither ||
        (!cl.excludes_wstar && r.quotient == Family::kWStar);
    if (cl.premise && !cl.conclusion_holds) r.consistent = false;
  }
  return r;
}

}  // namespace orient9
