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


#include "orient9/discharging.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "orient9/errors.hpp"

namespace orient9 {

Charge checked_add(Charge a, Charge b) {
  Charge r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("charge overflow");
  return r;
}

Charge checked_mul(Charge a, Charge b) {
  Charge r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("charge overflow");
  return r;
}

std::string charge_string(Charge c) {
  Charge g = std::gcd(c < 0 ? -c : c, kChargeDenominator);
  if (g == 0) g = kChargeDenominator;
  Charge num = c / g, den = kChargeDenominator / g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

int FaceClass::sum() const { return std::accumulate(params.begin(), params.end(), 0); }

std::string to_string(FaceKind k) {
  switch (k) {
    case FaceKind::kTwo: return "2-face";
    case FaceKind::kT: return "T";
    case FaceKind::kQ: return "Q";
    case FaceKind::kV: return "V";
    case FaceKind::kPlain: return "plain";
  }
  return "plain";
}

Charge ChargeLedger::total_initial() const {
  Charge t = 0;
  for (Charge c : initial) t = checked_add(t, c);
  return t;
}

Charge ChargeLedger::total_final() const {
  Charge t = 0;
  for (Charge c : final_charge) t = checked_add(t, c);
  return t;
}

std::vector<FaceClass> classify_faces(const Multigraph& g, const FaceStructure& fs) {
  int n = g.num_vertices();
  std::vector<int> mu = g.multiplicity_matrix();
  std::vector<FaceClass> out;
  for (const Face& f : fs.faces) {
    FaceClass c;
    c.degree = f.degree();
    if (c.degree == 2) {
      c.kind = FaceKind::kTwo;
    } else if (c.degree >= 3 && c.degree <= 5) {
      std::set<VertexId> distinct(f.vertices.begin(), f.vertices.end());
      if (static_cast<int>(distinct.size()) == c.degree) {
        for (int i = 0; i < c.degree; ++i) {
          VertexId a = f.vertices[i], b = f.vertices[(i + 1) % c.degree];
          c.params.push_back(mu[a * n + b]);
        }
        c.kind = c.degree == 3 ? FaceKind::kT : c.degree == 4 ? FaceKind::kQ : FaceKind::kV;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

int face_across(const FaceStructure& fs, EndId d) { return fs.face_of_dart.at(twin(d)); }

std::vector<int> chain_from(const FaceStructure& fs, int f, std::vector<int> start) {
  std::vector<char> seen(fs.faces.size(), 0);
  seen[f] = 1;
  std::vector<int> out;
  std::deque<int> queue;
  for (int h : start) {
    if (seen[h]) continue;
    seen[h] = 1;
    out.push_back(h);
    if (fs.faces[h].degree() == 2) queue.push_back(h);
  }
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (EndId d : fs.faces[q].darts) {
      int h = face_across(fs, d);
      if (seen[h]) continue;
      seen[h] = 1;
      out.push_back(h);
      if (fs.faces[h].degree() == 2) queue.push_back(h);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> weakly_adjacent_faces(const FaceStructure& fs, int f) {
  require(f >= 0 && f < static_cast<int>(fs.faces.size()), "face index out of range");
  std::vector<int> start;
  for (EndId d : fs.faces[f].darts) start.push_back(face_across(fs, d));
  return chain_from(fs, f, start);
}

std::vector<int> faces_across(const FaceStructure& fs, int f, EndId d) {
  return chain_from(fs, f, {face_across(fs, d)});
}

bool weakly_adjacent(const FaceStructure& fs, int f, int f2) {
  auto w = weakly_adjacent_faces(fs, f);
  return std::binary_search(w.begin(), w.end(), f2);
}

bool weakly_adjacent(const Multigraph& g, const PlaneEmbedding& emb, int f, int f2) {
  validate_embedding(g, emb);
  return weakly_adjacent(faces(g, emb), f, f2);
}

ChargeLedger apply_rules(const Multigraph& g, const PlaneEmbedding& emb,
                         const std::string& order) {
  validate_embedding(g, emb);
  {
    std::string sorted = order;
    std::sort(sorted.begin(), sorted.end());
    require(sorted == "ABC", "rule order must permute A, B and C");
  }
  ChargeLedger ledger;
  ledger.faces = faces(g, emb);
  ledger.classes = classify_faces(g, ledger.faces);
  const auto& fs = ledger.faces;
  int nf = static_cast<int>(fs.faces.size());
  int n = g.num_vertices();
  std::vector<int> mu = g.multiplicity_matrix();
  for (const Face& f : fs.faces) {
    ledger.initial.push_back(checked_mul(f.degree(), kChargeDenominator));
  }
  std::vector<std::vector<int>> weak(nf);
  for (int f = 0; f < nf; ++f) weak[f] = weakly_adjacent_faces(fs, f);
  auto deg = [&](int f) { return fs.faces[f].degree(); };

  std::vector<Transfer> a, b, c;
  for (int f = 0; f < nf; ++f) {
    const FaceClass& cls = ledger.classes[f];
    if (deg(f) >= 3) {
      for (int h : weak[f]) {
        if (deg(h) == 2) a.push_back({f, h, 'A', 20});
      }
    }
    if (cls.kind == FaceKind::kQ && cls.sum() <= 22) {
      for (int h : weak[f]) {
        if (deg(h) == 3) b.push_back({f, h, 'B', 10});
      }
    }
    if (cls.kind == FaceKind::kT && cls.sum() <= 11) {
      const Face& face = fs.faces[f];
      for (int i = 0; i < face.degree(); ++i) {
        VertexId x = face.vertices[i], y = face.vertices[(i + 1) % face.degree()];
        if (mu[x * n + y] < 4) continue;
        for (int h : faces_across(fs, f, face.darts[i])) {
          if (deg(h) == 3) b.push_back({f, h, 'B', 5});
        }
      }
    }
    if (deg(f) >= 5) {
      for (int h : weak[f]) {
        if (deg(h) == 3 || deg(h) == 4) c.push_back({f, h, 'C', 18});
      }
    }
  }
  ledger.final_charge = ledger.initial;
  for (char rule : order) {
    const auto& batch = rule == 'A' ? a : rule == 'B' ? b : c;
    for (const Transfer& t : batch) {
      ledger.final_charge[t.from] = checked_add(ledger.final_charge[t.from], -t.amount);
      ledger.final_charge[t.to] = checked_add(ledger.final_charge[t.to], t.amount);
      ledger.transfers.push_back(t);
    }
  }
  return ledger;
}

std::vector<DeficientFace> verdict(const Multigraph& g, const ChargeLedger& ledger,
                                   const std::vector<ConfigPattern>& catalog) {
  std::vector<DeficientFace> out;
  std::vector<std::vector<ConfigMatch>> matches;
  bool detected = false;
  for (int f = 0; f < static_cast<int>(ledger.final_charge.size()); ++f) {
    if (ledger.final_charge[f] >= kThreshold) continue;
    if (!detected) {
      for (const ConfigPattern& p : catalog) {
        if (p.forbidden) matches.push_back(detect_config(g, p));
      }
      detected = true;
    }
    DeficientFace d{f, ledger.final_charge[f], {}};
    const auto& verts = ledger.faces.faces[f].vertices;
    for (const auto& list : matches) {
      for (const ConfigMatch& m : list) {
        bool touches = std::any_of(m.assignment.begin(), m.assignment.end(), [&](VertexId v) {
          return std::find(verts.begin(), verts.end(), v) != verts.end();
        });
        if (touches) d.nearby.push_back(m);
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

DensityCheck euler_density_check(const Multigraph& g, const PlaneEmbedding& emb) {
  validate_embedding(g, emb);
  require(g.connected(), "graph must be connected");
  FaceStructure fs = faces(g, emb);
  DensityCheck r;
  for (const Face& f : fs.faces) r.face_degree_sum += f.degree();
  long e = g.num_edges(), v = g.num_vertices();
  long nf = static_cast<long>(fs.faces.size());
  r.twice_edges = 2 * e;
  r.handshake = r.face_degree_sum == r.twice_edges;
  r.weight_hypothesis = 2 * e >= 23 * v - 42;
  r.inequality = 21 * 2 * e <= 46 * nf - 8;
  r.consistent = r.handshake && v - e + nf == 2 && (!r.weight_hypothesis || r.inequality);
  return r;
}

bool CaseTableReport::all_hold() const {
  return std::all_of(items.begin(), items.end(), [](const CaseIdentity& c) { return c.holds; });
}

namespace {

constexpr Charge kUnit = kChargeDenominator;
constexpr Charge kA = 20;   // 2/21
constexpr Charge kBQ = 10;  // 1/21
constexpr Charge kBT = 5;   // 1/42
constexpr Charge kC = 18;   // 9/105

void add_item(CaseTableReport& r, std::string name, std::string expr, Charge lhs,
              const std::string& rel, Charge rhs) {
  bool holds = rel == "=" ? lhs == rhs : rel == ">" ? lhs > rhs : lhs >= rhs;
  r.items.push_back({std::move(name), std::move(expr), lhs, rel, rhs, holds});
}

// Sorted triple avoids T_{1,1,7}, T_{2,2,6} and T_{3,3,5}.
bool triple_allowed(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  static const int bad[3][3] = {{1, 1, 7}, {2, 2, 6}, {3, 3, 5}};
  for (const auto& b : bad) {
    if (t[0] >= b[0] && t[1] >= b[1] && t[2] >= b[2]) return false;
  }
  return true;
}

// Canonical dihedral form of a cyclic 4-tuple.
std::array<int, 4> dihedral_min(const std::array<int, 4>& q) {
  std::array<int, 4> best = q;
  for (int r = 0; r < 4; ++r) {
    for (int s : {1, -1}) {
      std::array<int, 4> c;
      for (int i = 0; i < 4; ++i) c[i] = q[((r + s * i) % 4 + 4) % 4];
      best = std::min(best, c);
    }
  }
  return best;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
  return out;
}

}  // namespace

CaseTableReport case_table_verify() {
  CaseTableReport r;
  add_item(r, "2-face", "2 + 2*(2/21)", 2 * kUnit + 2 * kA, "=", kThreshold);

  add_item(r, "6+-face per-side bound", "max{6*(2/21), 5*(2/21) + 9/105}",
           std::max(6 * kA, 5 * kA + kC), "=", 12 * 10);
  for (int d = 6; d <= 60; ++d) {
    Charge left = d * kUnit - d * std::max(6 * kA, 5 * kA + kC);
    add_item(r, "6+-face d=" + std::to_string(d), "d - (12/21)d", left, ">", kThreshold);
  }

  int max_side = 0;
  for (int m = 1; m <= 8; ++m) {
    if (m < 7) max_side = m;  // a 7-fold side on a 5-face is V_{1,1,1,1,7}
  }
  add_item(r, "5-face sum bound", "a+b+c+d+e <= 5*6", 5 * max_side, "=", 30);
  add_item(r, "5-face", "5 - 25*(2/21) - 5*(9/105)", 5 * kUnit - 25 * kA - 5 * kC, "=",
           kThreshold);

  int max_q = 0;
  std::map<int, std::set<std::array<int, 4>>> q_by_sum;
  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; b <= 7; ++b) {
      for (int c = 1; c <= 7; ++c) {
        for (int d = 1; d <= 7; ++d) {
          if (std::max({a, b, c, d}) >= 7) continue;  // Q_{1,1,1,7}
          int s = a + b + c + d;
          max_q = std::max(max_q, s);
          q_by_sum[s].insert(dihedral_min({a, b, c, d}));
        }
      }
    }
  }
  add_item(r, "4-face sum bound", "a+b+c+d <= 4*6", max_q, "=", 24);
  for (int s = 4; s <= 21; ++s) {
    Charge left = 4 * kUnit - (s - 4) * kA - 4 * kBQ;
    add_item(r, "4-face sum=" + std::to_string(s), "4 - (s-4)*(2/21) - 4*(1/21)", left,
             ">=", kThreshold);
    add_item(r, "4-face sum=" + std::to_string(s) + " closed form", "(88 - 2s)/21", left,
             "=", (88 - 2 * s) * 10);
  }
  {
    std::set<std::string> names;
    for (const auto& q : q_by_sum[22]) {
      names.insert("Q" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]) +
                   std::to_string(q[3]));
    }
    add_item(r, "4-face sum=22 classes {" + join(names) + "}", "Q4666 Q5566 Q5656",
             names == std::set<std::string>{"Q4666", "Q5566", "Q5656"}, "=", 1);
  }
  add_item(r, "4-face sum=22", "4 - 18*(2/21) - max{1,2}*(1/21)",
           4 * kUnit - 18 * kA - 2 * kBQ, "=", kThreshold);
  add_item(r, "4-face sum=23 classes", "Q5666 only", q_by_sum[23].size(), "=", 1);
  add_item(r, "4-face sum=23 Q5666", "4 - 19*(2/21)", 4 * kUnit - 19 * kA, "=", kThreshold);
  add_item(r, "4-face sum=24 Q6666", "4 - 20*(2/21) + 4*(9/105)",
           4 * kUnit - 20 * kA + 4 * kC, "=", 512);
  add_item(r, "4-face sum=24 Q6666 margin", "256/105 > 46/21", 512, ">", kThreshold);

  int max_t = 0;
  std::map<int, std::set<std::array<int, 3>>> t_by_sum;
  bool two_large = true;
  for (int a = 1; a <= 7; ++a) {
    for (int b = a; b <= 7; ++b) {
      for (int c = b; c <= 7; ++c) {
        if (!triple_allowed({a, b, c})) continue;
        int s = a + b + c;
        max_t = std::max(max_t, s);
        t_by_sum[s].insert({a, b, c});
        if (s <= 11 && a >= 4) two_large = false;
      }
    }
  }
  add_item(r, "3-face sum bound", "max{1+6+6, 2+5+5, 4+4+4}", max_t, "=", 13);
  add_item(r, "3-face sum<=11 has at most two sides >= 4", "enumeration", two_large, "=", 1);
  for (int s = 3; s <= 11; ++s) {
    Charge left = 3 * kUnit - (s - 3) * kA - 2 * kBT;
    add_item(r, "3-face sum=" + std::to_string(s), "3 - (s-3)*(2/21) - 2*(1/42)", left,
             ">=", kThreshold);
    add_item(r, "3-face sum=" + std::to_string(s) + " closed form", "(68 - 2s)/21", left,
             "=", (68 - 2 * s) * 10);
  }
  {
    std::set<std::string> names;
    for (int s : {12, 13}) {
      for (const auto& t : t_by_sum[s]) {
        names.insert("T" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]));
      }
    }
    add_item(r, "3-face sum 12..13 classes {" + join(names) + "}", "T156 T166 T255 T444",
             names == std::set<std::string>{"T156", "T166", "T255", "T444"}, "=", 1);
  }
  add_item(r, "3-face T156", "3 - 9*(2/21) + 9/105", 3 * kUnit - 9 * kA + kC, "=", 468);
  add_item(r, "3-face T156 margin", "234/105 > 46/21", 468, ">", kThreshold);
  add_item(r, "3-face T166", "3 - 10*(2/21) + 2*(9/105)", 3 * kUnit - 10 * kA + 2 * kC, "=",
           466);
  add_item(r, "3-face T166 margin", "233/105 > 46/21", 466, ">", kThreshold);
  add_item(r, "3-face T255", "3 - 9*(2/21) + 2*min{1/21, 9/105}",
           3 * kUnit - 9 * kA + 2 * std::min(kBQ, kC), ">", kThreshold);
  add_item(r, "3-face T444", "3 - 9*(2/21) + min{1/21, 9/105, 3*(1/42)}",
           3 * kUnit - 9 * kA + std::min({kBQ, kC, 3 * kBT}), "=", kThreshold);
  return r;
}

T444Report t444_exclusion_check(const Multigraph& g, const PlaneEmbedding& emb, int f) {
  validate_embedding(g, emb);
  FaceStructure fs = faces(g, emb);
  require(f >= 0 && f < static_cast<int>(fs.faces.size()), "face index out of range");
  auto classes = classify_faces(g, fs);
  require(classes[f].kind == FaceKind::kT && classes[f].params == std::vector<int>{4, 4, 4},
          "face is not the inner face of T_{4,4,4}");
  T444Report r;
  for (int h : weakly_adjacent_faces(fs, f)) {
    if (fs.faces[h].degree() == 3) r.three_faces.push_back(h);
  }
  require(r.three_faces.size() == 3, "face is not weakly adjacent to three 3-faces");
  for (int i = 0; i < 3 && r.holds; ++i) {
    for (int j = i + 1; j < 3 && r.holds; ++j) {
      if (weakly_adjacent(fs, r.three_faces[i], r.three_faces[j])) {
        r.holds = false;
        r.pair_a = r.three_faces[i];
        r.pair_b = r.three_faces[j];
      }
    }
  }
  if (r.holds) return r;
  auto verts = [&](int h) {
    const auto& v = fs.faces[h].vertices;
    return std::set<VertexId>(v.begin(), v.end());
  };
  auto vf = verts(f), va = verts(r.pair_a), vb = verts(r.pair_b);
  for (VertexId x : vf) {
    if (va.count(x) && vb.count(x) &&
        (r.interior < 0 || g.degree(x) < r.interior_degree)) {
      r.interior = x;
      r.interior_degree = g.degree(x);
    }
  }
  for (const char* name : {"T335", "To117"}) {
    if (!detect_config(g, name).empty()) r.forbidden_present.push_back(name);
  }
  r.diagnostic = "faces " + std::to_string(r.pair_a) + " and " + std::to_string(r.pair_b) +
                 " are weakly adjacent";
  if (r.interior >= 0) {
    r.diagnostic += "; interior vertex " + std::to_string(r.interior) + " has degree " +
                    std::to_string(r.interior_degree);
    if (r.interior_degree < 14) r.diagnostic += " < 14";
  }
  if (!r.forbidden_present.empty()) {
    r.diagnostic += "; forbidden configuration present:";
    for (const auto& s : r.forbidden_present) r.diagnostic += " " + s;
  }
  return r;
}

}  // namespace orient9
