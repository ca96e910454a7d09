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

#include "orient9/orientation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "orient9/errors.hpp"
#include "orient9/graph_ops.hpp"

namespace orient9 {

namespace {

using Bits = std::vector<std::uint64_t>;

struct Group {
  int a, b;  // a < b; j edges run a -> b
  std::vector<EdgeId> ids;
  int m() const { return static_cast<int>(ids.size()); }
};

std::vector<Group> pair_groups(const Multigraph& g) {
  std::map<std::pair<int, int>, std::vector<EdgeId>> by_pair;
  for (const Edge& e : g.edges()) {
    by_pair[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.id);
  }
  std::vector<Group> out;
  for (auto& [key, ids] : by_pair) out.push_back({key.first, key.second, ids});
  return out;
}

int mod(long x, int k) { return static_cast<int>(((x % k) + k) % k); }

std::uint64_t state_count(int modulus, int n, std::uint64_t cap) {
  std::uint64_t s = 1;
  for (int i = 0; i + 1 < n; ++i) {
    if (s > cap / static_cast<std::uint64_t>(modulus)) {
      throw CapExceeded("boundary state space exceeds " + std::to_string(cap));
    }
    s *= modulus;
  }
  if (s > cap) {
    throw CapExceeded("boundary state space exceeds " + std::to_string(cap));
  }
  return s;
}

// Residue vectors of vertices 0..n-2, vertex 0 most significant.
struct Space {
  int k;
  int n;
  std::uint64_t size;
  std::vector<std::uint64_t> pw;

  Space(int modulus, int vertices, std::uint64_t cap)
      : k(modulus), n(vertices), size(state_count(modulus, vertices, cap)) {
    pw.assign(std::max(n, 1), 0);
    std::uint64_t p = 1;
    for (int v = n - 2; v >= 0; --v) {
      pw[v] = p;
      p *= k;
    }
  }

  std::uint64_t shift(std::uint64_t s, int a, int b, int t) const {
    if (a < n - 1) {
      int da = static_cast<int>(s / pw[a] % k);
      int na = mod(da + t, k);
      s = s + static_cast<std::uint64_t>(na) * pw[a] -
          static_cast<std::uint64_t>(da) * pw[a];
    }
    if (b < n - 1) {
      int db = static_cast<int>(s / pw[b] % k);
      int nb = mod(db - t, k);
      s = s + static_cast<std::uint64_t>(nb) * pw[b] -
          static_cast<std::uint64_t>(db) * pw[b];
    }
    return s;
  }

  Bits empty() const { return Bits((size + 63) / 64, 0); }
};

bool test(const Bits& b, std::uint64_t s) { return b[s >> 6] >> (s & 63) & 1; }
void set(Bits& b, std::uint64_t s) { b[s >> 6] |= 1ULL << (s & 63); }

std::vector<int> shifts_for(const Group& gr, int jlo, int jhi, int k) {
  std::vector<char> seen(k, 0);
  std::vector<int> ts;
  for (int j = jlo; j <= jhi; ++j) {
    int t = mod(2 * j - gr.m(), k);
    if (!seen[t]) {
      seen[t] = 1;
      ts.push_back(t);
    }
  }
  return ts;
}

Bits step(const Space& sp, const Bits& cur, const Group& gr,
          const std::vector<int>& ts) {
  Bits next = sp.empty();
  for (std::size_t w = 0; w < cur.size(); ++w) {
    std::uint64_t word = cur[w];
    while (word) {
      int bit = __builtin_ctzll(word);
      word &= word - 1;
      std::uint64_t s = w * 64 + bit;
      for (int t : ts) set(next, sp.shift(s, gr.a, gr.b, t));
    }
  }
  return next;
}

struct JRange {
  int lo, hi;
};

// Walks layers backwards choosing the smallest admissible j per group.
std::vector<int> reconstruct(const Space& sp, const std::vector<Group>& groups,
                             const std::vector<Bits>& layers,
                             const std::vector<JRange>& ranges,
                             std::uint64_t target) {
  std::vector<int> js(groups.size(), 0);
  std::uint64_t s = target;
  for (int i = static_cast<int>(groups.size()) - 1; i >= 0; --i) {
    const Group& gr = groups[i];
    bool found = false;
    for (int j = ranges[i].lo; j <= ranges[i].hi; ++j) {
      std::uint64_t prev = sp.shift(s, gr.a, gr.b, -(2 * j - gr.m()));
      if (test(layers[i], prev)) {
        js[i] = j;
        s = prev;
        found = true;
        break;
      }
    }
    if (!found) throw Error("internal: boundary reconstruction failed");
  }
  return js;
}

Orientation orientation_from_counts(const Multigraph& g,
                                    const std::vector<Group>& groups,
                                    const std::vector<int>& js) {
  Orientation d;
  d.reversed.assign(g.num_edges(), 0);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const Group& gr = groups[i];
    for (int r = 0; r < gr.m(); ++r) {
      int idx = g.index_of(gr.ids[r]);
      VertexId tail = r < js[i] ? gr.a : gr.b;
      d.reversed[idx] = g.edges()[idx].u != tail;
    }
  }
  return d;
}

std::vector<int> full_beta(const Space& sp, std::uint64_t s) {
  std::vector<int> beta(sp.n, 0);
  long sum = 0;
  for (int v = 0; v + 1 < sp.n; ++v) {
    beta[v] = static_cast<int>(s / sp.pw[v] % sp.k);
    sum += beta[v];
  }
  if (sp.n > 0) beta[sp.n - 1] = mod(-sum, sp.k);
  return beta;
}

std::uint64_t encode_beta(const Space& sp, const std::vector<int>& beta) {
  std::uint64_t s = 0;
  for (int v = 0; v + 1 < sp.n; ++v) s += mod(beta[v], sp.k) * sp.pw[v];
  return s;
}

struct Layers {
  Space sp;
  std::vector<Group> groups;
  std::vector<Bits> layers;
};

Layers run_dp(const Multigraph& g, int modulus, const Caps& caps) {
  require(modulus >= 1, "modulus must be positive");
  Layers out{Space(modulus, g.num_vertices(), caps.sz_states), pair_groups(g),
             {}};
  Bits cur = out.sp.empty();
  set(cur, 0);
  out.layers.push_back(cur);
  for (const Group& gr : out.groups) {
    cur = step(out.sp, cur, gr, shifts_for(gr, 0, gr.m(), modulus));
    out.layers.push_back(cur);
  }
  return out;
}

// Enumerates arc patterns per vertex pair (only a->b, only b->a, both)
// whose digraph is strongly connected, carrying reachable boundary sets.
class ScSearch {
 public:
  ScSearch(const Multigraph& g, int two_k, const Caps& caps)
      : g_(g),
        sp_(two_k, g.num_vertices(), caps.sz_states),
        groups_(pair_groups(g)) {
    long double combos = 1;
    for (const Group& gr : groups_) combos *= gr.m() + 1;
    if (!caps.slow_mode && combos > caps.sc_combinations) {
      throw CapExceeded("pair combinations exceed " +
                        std::to_string(caps.sc_combinations) +
                        " (enable slow mode to proceed)");
    }
    int n = g.num_vertices();
    last_.assign(n, -1);
    for (int i = 0; i < static_cast<int>(groups_.size()); ++i) {
      last_[groups_[i].a] = i;
      last_[groups_[i].b] = i;
    }
    out_.assign(n, 0);
    in_.assign(n, 0);
    adj_.assign(n, 0);
  }

  // Calls leaf(bits, layers, ranges) on each strongly connected pattern;
  // stops when it returns true.
  bool run(const std::function<bool(const Bits&, const std::vector<Bits>&,
                                    const std::vector<JRange>&)>& leaf) {
    int n = g_.num_vertices();
    if (n >= 2) {
      for (int v = 0; v < n; ++v) {
        if (last_[v] < 0) return false;
      }
    }
    Bits start = sp_.empty();
    set(start, 0);
    layers_.assign(1, start);
    ranges_.clear();
    return rec(0, leaf);
  }

  const Space& space() const { return sp_; }
  const std::vector<Group>& groups() const { return groups_; }
  const Multigraph& graph() const { return g_; }

 private:
  bool strongly_connected() const {
    int n = g_.num_vertices();
    if (n <= 1) return true;
    auto reach = [&](bool forward) {
      std::uint64_t seen = 1, frontier = 1;
      while (frontier) {
        int v = __builtin_ctzll(frontier);
        frontier &= frontier - 1;
        for (int w = 0; w < n; ++w) {
          bool arc = forward ? (adj_[v] >> w & 1) : (adj_[w] >> v & 1);
          if (arc && !(seen >> w & 1)) {
            seen |= 1ULL << w;
            frontier |= 1ULL << w;
          }
        }
      }
      return seen == (n == 64 ? ~0ULL : (1ULL << n) - 1);
    };
    return reach(true) && reach(false);
  }

  bool rec(int i,
           const std::function<bool(const Bits&, const std::vector<Bits>&,
                                    const std::vector<JRange>&)>& leaf) {
    if (i == static_cast<int>(groups_.size())) {
      if (!strongly_connected()) return false;
      return leaf(layers_.back(), layers_, ranges_);
    }
    const Group& gr = groups_[i];
    int m = gr.m();
    std::vector<JRange> options;
    if (m >= 2) options.push_back({1, m - 1});
    options.push_back({m, m});
    options.push_back({0, 0});
    for (const JRange& r : options) {
      bool fwd = r.hi >= 1, back = r.lo <= m - 1;
      out_[gr.a] += fwd;
      in_[gr.b] += fwd;
      out_[gr.b] += back;
      in_[gr.a] += back;
      bool ok = true;
      for (int v : {gr.a, gr.b}) {
        if (last_[v] == i && (out_[v] == 0 || in_[v] == 0)) ok = false;
      }
      if (ok) {
        std::uint64_t saved_a = adj_[gr.a], saved_b = adj_[gr.b];
        if (fwd) adj_[gr.a] |= 1ULL << gr.b;
        if (back) adj_[gr.b] |= 1ULL << gr.a;
        layers_.push_back(step(sp_, layers_.back(), gr,
                               shifts_for(gr, r.lo, r.hi, sp_.k)));
        ranges_.push_back(r);
        bool done = rec(i + 1, leaf);
        layers_.pop_back();
        ranges_.pop_back();
        adj_[gr.a] = saved_a;
        adj_[gr.b] = saved_b;
        if (done) {
          out_[gr.a] -= fwd;
          in_[gr.b] -= fwd;
          out_[gr.b] -= back;
          in_[gr.a] -= back;
          return true;
        }
      }
      out_[gr.a] -= fwd;
      in_[gr.b] -= fwd;
      out_[gr.b] -= back;
      in_[gr.a] -= back;
    }
    return false;
  }

  const Multigraph& g_;
  Space sp_;
  std::vector<Group> groups_;
  std::vector<int> last_, out_, in_;
  std::vector<std::uint64_t> adj_;
  std::vector<Bits> layers_;
  std::vector<JRange> ranges_;
};

bool state_is_pc(const Space& sp, const Multigraph& g, std::uint64_t s) {
  for (int v = 0; v + 1 < sp.n; ++v) {
    int r = static_cast<int>(s / sp.pw[v] % sp.k);
    if ((r - g.degree(v)) % 2 != 0) return false;
  }
  return true;
}

std::vector<int> representative(const std::vector<int>& residues, int two_k) {
  std::vector<int> out(residues.size());
  int k = two_k / 2;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    int r = mod(residues[i], two_k);
    out[i] = r > k ? r - two_k : r;
  }
  return out;
}

}  // namespace

std::vector<int> net_outdegree(const Multigraph& g, const Orientation& d) {
  require(static_cast<int>(d.reversed.size()) == g.num_edges(),
          "orientation does not match the edge count");
  std::vector<int> net(g.num_vertices(), 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    ++net[d.tail(e, i)];
    --net[d.head(e, i)];
  }
  return net;
}

std::vector<int> reduce(const std::vector<int>& beta, int modulus) {
  std::vector<int> out(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) out[i] = mod(beta[i], modulus);
  return out;
}

bool is_boundary(const std::vector<int>& beta, int modulus) {
  long sum = 0;
  for (int b : beta) sum += b;
  return mod(sum, modulus) == 0;
}

bool is_beta_orientation(const Multigraph& g, const Orientation& d,
                         const std::vector<int>& beta, int modulus) {
  if (static_cast<int>(beta.size()) != g.num_vertices()) return false;
  return reduce(net_outdegree(g, d), modulus) == reduce(beta, modulus);
}

bool is_strongly_connected(const Multigraph& g, const Orientation& d) {
  int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    fwd[d.tail(e, i)].push_back(d.head(e, i));
    bwd[d.head(e, i)].push_back(d.tail(e, i));
  }
  auto all_reached = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : adj[a]) {
        if (!seen[b]) {
          seen[b] = 1;
          ++count;
          stack.push_back(b);
        }
      }
    }
    return count == n;
  };
  return all_reached(fwd) && all_reached(bwd);
}

AchievableSet::AchievableSet(int modulus, int n, std::vector<std::uint64_t> bits)
    : modulus_(modulus), n_(n), bits_(std::move(bits)) {
  states_ = 1;
  for (int i = 0; i + 1 < n; ++i) states_ *= modulus;
}

std::vector<int> AchievableSet::decode(std::uint64_t s) const {
  std::vector<int> beta(n_, 0);
  std::uint64_t p = states_;
  long sum = 0;
  for (int v = 0; v + 1 < n_; ++v) {
    p /= modulus_;
    beta[v] = static_cast<int>(s / p % modulus_);
    sum += beta[v];
  }
  if (n_ > 0) beta[n_ - 1] = mod(-sum, modulus_);
  return beta;
}

std::uint64_t AchievableSet::encode(const std::vector<int>& beta) const {
  std::uint64_t s = 0;
  for (int v = 0; v + 1 < n_; ++v) s = s * modulus_ + mod(beta[v], modulus_);
  return s;
}

bool AchievableSet::contains(const std::vector<int>& beta) const {
  require(static_cast<int>(beta.size()) == n_, "boundary length mismatch");
  if (!is_boundary(beta, modulus_)) return false;
  return contains_state(encode(beta));
}

std::uint64_t AchievableSet::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
  return c;
}

std::optional<std::vector<int>> AchievableSet::first_missing() const {
  for (std::uint64_t s = 0; s < states_; ++s) {
    if (!contains_state(s)) return decode(s);
  }
  return std::nullopt;
}

AchievableSet achievable_boundaries(const Multigraph& g, int modulus,
                                    const Caps& caps) {
  Layers dp = run_dp(g, modulus, caps);
  return AchievableSet(modulus, g.num_vertices(), dp.layers.back());
}

std::optional<Orientation> find_zk_orientation(const Multigraph& g, int modulus,
                                               const std::vector<int>& beta,
                                               const Caps& caps) {
  require(static_cast<int>(beta.size()) == g.num_vertices(),
          "boundary length mismatch");
  require(is_boundary(beta, modulus),
          "values do not sum to 0 modulo " + std::to_string(modulus));
  Layers dp = run_dp(g, modulus, caps);
  std::uint64_t target = encode_beta(dp.sp, beta);
  if (!test(dp.layers.back(), target)) return std::nullopt;
  std::vector<JRange> ranges;
  for (const Group& gr : dp.groups) ranges.push_back({0, gr.m()});
  auto js = reconstruct(dp.sp, dp.groups, dp.layers, ranges, target);
  return orientation_from_counts(g, dp.groups, js);
}

std::optional<Orientation> modular_orientation(const Multigraph& g, int modulus,
                                               const Caps& caps) {
  return find_zk_orientation(g, modulus,
                             std::vector<int>(g.num_vertices(), 0), caps);
}

MembershipResult is_sz_pc(const Multigraph& g, int k, const Caps& caps) {
  require(k >= 1, "k must be positive");
  Layers dp = run_dp(g, 2 * k, caps);
  MembershipResult r;
  r.member = true;
  for (std::uint64_t s = 0; s < dp.sp.size; ++s) {
    if (state_is_pc(dp.sp, g, s) && !test(dp.layers.back(), s)) {
      r.member = false;
      r.missing = representative(full_beta(dp.sp, s), 2 * k);
      break;
    }
  }
  return r;
}

MembershipResult is_strongly_zk_connected(const Multigraph& g, int k,
                                          const Caps& caps) {
  require(k >= 1, "k must be positive");
  if (k % 2 == 0) {
    MembershipResult r = is_sz_pc(g, k, caps);
    r.note = "even k: parity-compliant Z_2k boundaries";
    return r;
  }
  AchievableSet a = achievable_boundaries(g, k, caps);
  MembershipResult r;
  r.missing = a.first_missing();
  r.member = !r.missing.has_value();
  return r;
}

bool is_parity_compliant(const Multigraph& g, const std::vector<int>& beta,
                         int two_k) {
  if (two_k < 2 || two_k % 2) return false;
  if (static_cast<int>(beta.size()) != g.num_vertices()) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (mod(beta[v] - g.degree(v), 2) != 0) return false;
  }
  return is_boundary(beta, two_k);
}

std::vector<std::vector<int>> pc_boundaries(const Multigraph& g, int two_k,
                                            const Caps& caps) {
  require(two_k >= 2 && two_k % 2 == 0, "modulus must be even");
  Space sp(two_k, g.num_vertices(), caps.sz_states);
  std::vector<std::vector<int>> out;
  for (std::uint64_t s = 0; s < sp.size; ++s) {
    if (state_is_pc(sp, g, s)) out.push_back(representative(full_beta(sp, s), two_k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Orientation> find_sc_orientation(const Multigraph& g, int two_k,
                                               const std::vector<int>& beta,
                                               const Caps& caps) {
  require(is_parity_compliant(g, beta, two_k),
          "boundary is not parity-compliant modulo " + std::to_string(two_k));
  ScSearch search(g, two_k, caps);
  std::uint64_t target = encode_beta(search.space(), beta);
  std::optional<Orientation> found;
  search.run([&](const Bits& bits, const std::vector<Bits>& layers,
                 const std::vector<JRange>& ranges) {
    if (!test(bits, target)) return false;
    auto js = reconstruct(search.space(), search.groups(), layers, ranges,
                          target);
    found = orientation_from_counts(g, search.groups(), js);
    return true;
  });
  return found;
}

MembershipResult is_in_SC(const Multigraph& g, int k, const Caps& caps) {
  require(k >= 1, "k must be positive");
  ScSearch search(g, 2 * k, caps);
  const Space& sp = search.space();
  Bits covered = sp.empty();
  search.run([&](const Bits& bits, const std::vector<Bits>&,
                 const std::vector<JRange>&) {
    for (std::size_t w = 0; w < bits.size(); ++w) covered[w] |= bits[w];
    return false;
  });
  MembershipResult r;
  r.member = true;
  for (std::uint64_t s = 0; s < sp.size; ++s) {
    if (state_is_pc(sp, g, s) && !test(covered, s)) {
      r.member = false;
      r.missing = representative(full_beta(sp, s), 2 * k);
      break;
    }
  }
  return r;
}

WeakResult is_weakly_contractible(const Multigraph& h, int k,
                                  const Caps& caps) {
  WeakResult r;
  r.member = true;
  for (int x = 0; x < h.num_vertices() && r.member; ++x) {
    for (int y = x + 1; y < h.num_vertices(); ++y) {
      Multigraph plus = h;
      plus.add_edge(x, y);
      MembershipResult m = is_in_SC(plus, k, caps);
      if (!m.member) {
        r.member = false;
        r.x = x;
        r.y = y;
        r.missing = m.missing;
        break;
      }
    }
  }
  return r;
}

namespace {

// Removes one edge per consecutive pair of walk (lowest unused id first).
std::optional<std::pair<Multigraph, std::vector<EdgeId>>> remove_walk(
    const Multigraph& g, const std::vector<VertexId>& walk, bool closed) {
  std::vector<EdgeId> removed;
  std::vector<char> gone(g.next_edge_id(), 0);
  int steps = static_cast<int>(walk.size()) - (closed ? 0 : 1);
  for (int i = 0; i < steps; ++i) {
    VertexId a = walk[i], b = walk[(i + 1) % walk.size()];
    EdgeId pick = -1;
    for (EdgeId id : g.edges_between(a, b)) {
      if (!gone[id]) {
        pick = id;
        break;
      }
    }
    if (pick < 0) return std::nullopt;
    gone[pick] = 1;
    removed.push_back(pick);
  }
  Multigraph rest(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (!gone[e.id]) rest.add_edge_with_id(e.id, e.u, e.v);
  }
  return std::make_pair(rest, removed);
}

void hamiltonian_walks(const Multigraph& g, VertexId from, VertexId to,
                       bool cycle,
                       const std::function<bool(const std::vector<int>&)>& f) {
  int n = g.num_vertices();
  std::vector<int> path{from};
  std::vector<char> used(n, 0);
  used[from] = 1;
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    if (static_cast<int>(path.size()) == n) {
      if (cycle) {
        if (n >= 3 && path[1] > path.back()) return;
        if (g.multiplicity(path.back(), from) == 0) return;
      } else if (path.back() != to) {
        return;
      }
      if (!f(path)) stop = true;
      return;
    }
    for (int w : g.neighbours(path.back())) {
      if (used[w]) continue;
      if (!cycle && w == to && static_cast<int>(path.size()) != n - 1) continue;
      used[w] = 1;
      path.push_back(w);
      rec();
      path.pop_back();
      used[w] = 0;
      if (stop) return;
    }
  };
  rec();
}

}  // namespace

HamiltonCertificate hamiltonian_sufficiency(const Multigraph& g, int k,
                                            HamiltonMode mode,
                                            const Caps& caps) {
  HamiltonCertificate cert;
  int n = g.num_vertices();
  require(n >= 2, "Hamiltonian test needs at least two vertices");
  auto try_walk = [&](const std::vector<int>& walk, bool closed) {
    auto rest = remove_walk(g, walk, closed);
    if (!rest) return false;
    if (!is_sz_pc(rest->first, k, caps).member) return false;
    cert.walks.push_back(walk);
    cert.removed.push_back(rest->second);
    return true;
  };
  if (mode == HamiltonMode::kSC) {
    bool ok = false;
    hamiltonian_walks(g, 0, -1, true, [&](const std::vector<int>& walk) {
      ok = try_walk(walk, true);
      return !ok;
    });
    cert.certified = ok;
    if (!ok) cert.note = "no Hamiltonian cycle with SZ remainder";
    return cert;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      bool ok = false;
      hamiltonian_walks(g, x, y, false, [&](const std::vector<int>& walk) {
        ok = try_walk(walk, false);
        return !ok;
      });
      if (!ok) {
        cert.note = "no suitable Hamiltonian path between " +
                    std::to_string(x) + " and " + std::to_string(y);
        return cert;
      }
    }
  }
  cert.certified = true;
  return cert;
}

Orientation transfer_by_id(const Multigraph& from, const Orientation& d,
                           const Multigraph& to) {
  Orientation out;
  out.reversed.assign(to.num_edges(), 0);
  for (int i = 0; i < to.num_edges(); ++i) {
    out.reversed[i] = d.reversed[from.index_of(to.edges()[i].id)];
  }
  return out;
}

std::optional<Orientation> extend_by_contraction(
    const Multigraph& g, const std::vector<VertexId>& s,
    const Orientation& contracted, const std::vector<int>& beta, int modulus,
    const Caps& caps) {
  require(static_cast<int>(beta.size()) == g.num_vertices(),
          "boundary length mismatch");
  require(is_boundary(beta, modulus), "values do not sum to 0");
  Contraction c = contract_subset(g, s);
  require(static_cast<int>(contracted.reversed.size()) == c.graph.num_edges(),
          "orientation does not match the contracted graph");
  std::vector<int> qbeta(c.graph.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) qbeta[c.old_to_new[v]] += beta[v];
  require(is_beta_orientation(c.graph, contracted, qbeta, modulus),
          "orientation of the contracted graph misses its boundary");
  std::vector<VertexId> local;
  Multigraph h = induced_subgraph(g, s, &local);
  std::vector<int> gamma(h.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (local[v] >= 0) gamma[local[v]] = beta[v];
  }
  for (int i = 0; i < c.graph.num_edges(); ++i) {
    const Edge& ce = c.graph.edges()[i];
    const Edge& e = g.edge(ce.id);
    VertexId tail = contracted.reversed[i] ? e.v : e.u;
    VertexId head = e.other(tail);
    if (local[tail] >= 0) gamma[local[tail]] -= 1;
    if (local[head] >= 0) gamma[local[head]] += 1;
  }
  auto inner = find_zk_orientation(h, modulus, gamma, caps);
  if (!inner) return std::nullopt;
  Orientation out;
  out.reversed.assign(g.num_edges(), 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    EdgeId id = g.edges()[i].id;
    if (h.has_edge(id)) {
      out.reversed[i] = inner->reversed[h.index_of(id)];
    } else {
      out.reversed[i] = contracted.reversed[c.graph.index_of(id)];
    }
  }
  return out;
}

}  // namespace orient9
