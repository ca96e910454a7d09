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


#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orient9/catalog.hpp"
#include "orient9/embedding.hpp"
#include "orient9/multigraph.hpp"

namespace orient9 {

/** Charge in units of 1/210. */
using Charge = std::int64_t;
inline constexpr Charge kChargeDenominator = 210;
inline constexpr Charge kThreshold = 460;  // 46/21

Charge checked_add(Charge a, Charge b);
Charge checked_mul(Charge a, Charge b);
/** Reduced fraction text, e.g. "46/21". */
std::string charge_string(Charge c);

enum class FaceKind { kTwo, kT, kQ, kV, kPlain };

struct FaceClass {
  FaceKind kind = FaceKind::kPlain;
  int degree = 0;
  std::vector<int> params;  // multiplicities of consecutive boundary pairs
  int sum() const;
};

std::string to_string(FaceKind k);

struct Transfer {
  int from = -1;
  int to = -1;
  char rule = 'A';
  Charge amount = 0;
};

struct ChargeLedger {
  FaceStructure faces;
  std::vector<FaceClass> classes;
  std::vector<Charge> initial;
  std::vector<Charge> final_charge;
  std::vector<Transfer> transfers;
  Charge total_initial() const;
  Charge total_final() const;
};

/** Classes use multiplicities in g; faces with a repeated vertex stay plain. */
std::vector<FaceClass> classify_faces(const Multigraph& g, const FaceStructure& fs);

/** Faces joined to f by a chain whose inner faces are all 2-faces. */
std::vector<int> weakly_adjacent_faces(const FaceStructure& fs, int f);
bool weakly_adjacent(const FaceStructure& fs, int f, int f2);
bool weakly_adjacent(const Multigraph& g, const PlaneEmbedding& emb, int f, int f2);

/** Faces reached from f by crossing the boundary dart d and then only 2-faces. */
std::vector<int> faces_across(const FaceStructure& fs, int f, EndId d);

/**
 * Applies rules A, B and C. Transfers depend only on the initial
 * classification; `order` permutes the application sequence.
 */
ChargeLedger apply_rules(const Multigraph& g, const PlaneEmbedding& emb,
                         const std::string& order = "ABC");

struct DeficientFace {
  int face = -1;
  Charge charge = 0;
  std::vector<ConfigMatch> nearby;  // forbidden matches touching the face
};

std::vector<DeficientFace> verdict(const Multigraph& g, const ChargeLedger& ledger,
                                   const std::vector<ConfigPattern>& catalog =
                                       default_catalog());

struct DensityCheck {
  long face_degree_sum = 0;
  long twice_edges = 0;
  bool handshake = false;
  bool weight_hypothesis = false;  // 2e >= 23v - 42
  bool inequality = false;         // 2e <= (2 + 4/21) f - 8/21
  bool consistent = false;         // handshake, and the inequality when hypothesised
};

/** Requires g connected. */
DensityCheck euler_density_check(const Multigraph& g, const PlaneEmbedding& emb);

struct CaseIdentity {
  std::string name;
  std::string expression;
  Charge lhs = 0;
  std::string relation;  // "=", ">", ">="
  Charge rhs = 0;
  bool holds = false;
};

struct CaseTableReport {
  std::vector<CaseIdentity> items;
  bool all_hold() const;
};

CaseTableReport case_table_verify();

struct T444Report {
  bool holds = true;
  std::vector<int> three_faces;
  int pair_a = -1, pair_b = -1;  // weakly adjacent pair when violated
  VertexId interior = -1;
  int interior_degree = 0;
  std::vector<std::string> forbidden_present;
  std::string diagnostic;
};

/**
 * f must be a T_{4,4,4} inner face weakly adjacent to three 3-faces;
 * checks that those faces are pairwise not weakly adjacent.
 */
T444Report t444_exclusion_check(const Multigraph& g, const PlaneEmbedding& emb, int f);

}  // namespace orient9
