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

#include "orient9/oracles.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace orient9::oracle {

namespace {

int md(long x, int k) { return static_cast<int>(((x % k) + k) % k); }

template <typename F>
void each_orientation(const Multigraph& g, F f) {
  int e = g.num_edges();
  std::vector<int> net(g.num_vertices());
  for (std::uint64_t mask = 0; mask < (1ULL << e); ++mask) {
    std::fill(net.begin(), net.end(), 0);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < e; ++i) {
      const Edge& ed = g.edges()[i];
      int t = (mask >> i & 1) ? ed.v : ed.u;
      int h = (mask >> i & 1) ? ed.u : ed.v;
      ++net[t];
      --net[h];
      arcs.emplace_back(t, h);
    }
    f(net, arcs);
  }
}

bool strong(int n, const std::vector<std::pair<int, int>>& arcs) {
  for (int s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto [a, b] : arcs) {
        if (seen[a] && !seen[b]) {
          seen[b] = 1;
          grew = true;
        }
      }
    }
    for (char c : seen) {
      if (!c) return false;
    }
  }
  return true;
}

}  // namespace

std::set<std::vector<int>> achievable(const Multigraph& g, int modulus) {
  std::set<std::vector<int>> out;
  each_orientation(g, [&](const std::vector<int>& net, const auto&) {
    std::vector<int> r(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) r[i] = md(net[i], modulus);
    out.insert(r);
  });
  return out;
}

std::set<std::vector<int>> achievable_strong(const Multigraph& g, int modulus) {
  std::set<std::vector<int>> out;
  each_orientation(g, [&](const std::vector<int>& net, const auto& arcs) {
    if (!strong(g.num_vertices(), arcs)) return;
    std::vector<int> r(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) r[i] = md(net[i], modulus);
    out.insert(r);
  });
  return out;
}

long min_weight(const Multigraph& g, int per_part, int additive) {
  int n = g.num_vertices();
  long best = std::numeric_limits<long>::max();
  std::vector<int> lab(n, 0);
  while (true) {
    std::vector<char> used(n, 0);
    int t = 0;
    for (int l : lab) {
      if (!used[l]) {
        used[l] = 1;
        ++t;
      }
    }
    if (t >= 2) {
      long cross = 0;
      for (const Edge& e : g.edges()) cross += lab[e.u] != lab[e.v];
      best = std::min(best, 2 * cross - static_cast<long>(per_part) * t + additive);
    }
    int i = 0;
    while (i < n && ++lab[i] == n) lab[i++] = 0;
    if (i == n) break;
  }
  return best;
}

int min_odd_cut(const Multigraph& g) {
  int n = g.num_vertices(), best = -1;
  for (std::uint32_t m = 1; m + 1 < (1U << n); ++m) {
    int d = 0;
    for (const Edge& e : g.edges()) d += ((m >> e.u) & 1) != ((m >> e.v) & 1);
    if (d % 2 == 1 && (best < 0 || d < best)) best = d;
  }
  return best;
}

int min_cut(const Multigraph& g) {
  int n = g.num_vertices(), best = std::numeric_limits<int>::max();
  for (std::uint32_t m = 1; m + 1 < (1U << n); ++m) {
    int d = 0;
    for (const Edge& e : g.edges()) d += ((m >> e.u) & 1) != ((m >> e.v) & 1);
    best = std::min(best, d);
  }
  return best;
}

bool has_cycle_hom(const Multigraph& g, int k) {
  int n = g.num_vertices(), p = 2 * k + 1;
  std::vector<int> col(n, 0);
  while (true) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      int d = md(col[e.u] - col[e.v], p);
      if (d != 1 && d != p - 1) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    int i = 0;
    while (i < n && ++col[i] == p) col[i++] = 0;
    if (i == n) return false;
  }
}

std::uint64_t count_pc(const Multigraph& g, int two_k) {
  int n = g.num_vertices();
  std::vector<int> b(n, 0);
  std::uint64_t count = 0;
  while (true) {
    long sum = 0;
    bool ok = true;
    for (int v = 0; v < n; ++v) {
      sum += b[v];
      if ((b[v] - g.degree(v)) % 2 != 0) ok = false;
    }
    if (ok && md(sum, two_k) == 0) ++count;
    int i = 0;
    while (i < n && ++b[i] == two_k) b[i++] = 0;
    if (i == n) return count;
  }
}

std::set<std::vector<std::array<int, 3>>> config_matches(
    const Multigraph& g, int k, const std::vector<std::array<int, 3>>& pairs) {
  int n = g.num_vertices();
  std::set<std::vector<std::array<int, 3>>> out;
  std::vector<int> f(k, 0);
  long total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(c % n);
      c /= n;
    }
    std::set<int> image(f.begin(), f.end());
    if (static_cast<int>(image.size()) != k) continue;
    std::map<std::pair<int, int>, int> need;
    for (const auto& [a, b, t] : pairs) {
      need[{std::min(f[a], f[b]), std::max(f[a], f[b])}] += t;
    }
    bool ok = true;
    std::vector<std::array<int, 3>> key;
    for (const auto& [ab, t] : need) {
      int have = 0;
      for (const Edge& e : g.edges()) {
        if ((e.u == ab.first && e.v == ab.second) ||
            (e.v == ab.first && e.u == ab.second)) {
          ++have;
        }
      }
      if (have < t) {
        ok = false;
        break;
      }
      key.push_back({ab.first, ab.second, t});
    }
    if (ok) out.insert(key);
  }
  return out;
}

}  // namespace orient9::oracle
