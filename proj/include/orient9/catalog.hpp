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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orient9/embedding.hpp"
#include "orient9/multigraph.hpp"

namespace orient9 {

struct PatternPair {
  int a = 0;
  int b = 0;
  int threshold = 1;
};

/** Recipe step on pattern vertices: replace xv and vy by xy. */
struct RecipeLift {
  int v = 0;
  int x = 0;
  int y = 0;
};

struct ConfigPattern {
  std::string name;
  std::string display;
  std::string note;
  bool forbidden = true;
  std::vector<std::string> vertices;
  std::vector<PatternPair> pairs;
  std::vector<std::vector<int>> legs;
  std::vector<RecipeLift> recipe;
  std::vector<PatternPair> target;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  /** Smallest multigraph carrying the pattern, vertices in declared order. */
  Multigraph instance() const;
};

struct ConfigMatch {
  std::string pattern;
  std::vector<VertexId> assignment;
  std::vector<EdgeId> edges;
};

/**
 * Catalog text, one block per pattern:
 *   pattern <name> <forbidden|allowed>
 *   display <text>
 *   note <text>
 *   vertices <v> ...
 *   pair <a> <b> <threshold>
 *   leg <a> <w> ... <b>
 *   lift <v> <x> <y>
 *   target <a> <b> <multiplicity>
 *   end
 * Lines starting with '#' are comments.
 */
std::vector<ConfigPattern> parse_catalog(const std::string& text);
std::string serialize_catalog(const std::vector<ConfigPattern>& catalog);

const std::string& default_catalog_text();
const std::vector<ConfigPattern>& default_catalog();
const ConfigPattern& find_pattern(const std::vector<ConfigPattern>& catalog,
                                  const std::string& name);

/** Matches up to pattern automorphism, ordered by image pairs. */
std::vector<ConfigMatch> detect_config(const Multigraph& g,
                                       const ConfigPattern& pattern);
std::vector<ConfigMatch> detect_config(
    const Multigraph& g, const std::string& name_or_all,
    const std::vector<ConfigPattern>& catalog = default_catalog());

/** Key shared by automorphic matches: sorted (image a, image b, threshold). */
std::vector<std::array<int, 3>> match_key(const ConfigPattern& pattern,
                                          const std::vector<VertexId>& assignment);

struct RecipeOutcome {
  Multigraph graph;
  std::optional<PlaneEmbedding> embedding;
  std::vector<VertexId> target_vertices;
  Multigraph target;  // target multiplicities on target_vertices, ids from graph
  bool target_met = false;
};

/**
 * Applies the lift recipe at the matched vertices. With an embedding every
 * lifted pair must be consecutive at its vertex; nullopt when that fails.
 */
std::optional<RecipeOutcome> apply_recipe(const Multigraph& g,
                                          const ConfigPattern& pattern,
                                          const ConfigMatch& match,
                                          const PlaneEmbedding* emb = nullptr);

/** Lift of one xv and one vy edge; with an embedding the ends must be adjacent. */
struct LiftChoice {
  EdgeId e1 = -1;
  EdgeId e2 = -1;
};
std::optional<LiftChoice> choose_lift(const Multigraph& g, VertexId v,
                                      VertexId x, VertexId y,
                                      const PlaneEmbedding* emb);

}  // namespace orient9
