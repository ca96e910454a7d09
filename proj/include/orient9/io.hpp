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

#include <optional>
#include <string>
#include <vector>

#include "orient9/embedding.hpp"
#include "orient9/multigraph.hpp"
#include "orient9/signed_flow.hpp"

namespace orient9 {

/**
 * Graph text:
 *   graph <n>
 *   edge <u> <v> <mult>        ids follow line order, one per copy
 *   rot <v> <end id> ...       optional; end id 2e at e.u, 2e + 1 at e.v
 * Signed graphs use `edge <u> <v> <mult+> <mult->`. '#' starts a comment.
 */
struct GraphFile {
  Multigraph graph;
  std::optional<PlaneEmbedding> embedding;
};

GraphFile parse_graph(const std::string& text);
SignedGraph parse_signed_graph(const std::string& text);
/** Rotation lines only, checked against g. */
PlaneEmbedding parse_embedding(const std::string& text, const Multigraph& g);
/** Lines `<v> <value>`; unlisted vertices get 0. */
std::vector<int> parse_boundary(const std::string& text, int n);

/** Edge ids are renumbered 0..e-1 in edge order. */
std::string serialize_graph(const Multigraph& g);
std::string serialize_signed_graph(const SignedGraph& gs);
/** Expects the edge ids of g to be 0..e-1. */
std::string serialize_embedding(const PlaneEmbedding& emb);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace orient9
