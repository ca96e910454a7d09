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


#include "orient9/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "orient9/errors.hpp"

namespace orient9 {

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

long to_int(const Line& line, std::size_t index) {
  if (index >= line.tokens.size()) {
    int col = line.tokens.back().column + static_cast<int>(line.tokens.back().text.size());
    throw ParseError(line.number, col, "missing integer");
  }
  const Token& t = line.tokens[index];
  long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError(line.number, t.column, "expected an integer, found '" + t.text + "'");
  }
  return value;
}

void expect_count(const Line& line, std::size_t count) {
  if (line.tokens.size() > count) {
    throw ParseError(line.number, line.tokens[count].column, "unexpected token '" +
                                                                 line.tokens[count].text + "'");
  }
  if (line.tokens.size() < count) to_int(line, line.tokens.size());
}

int header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, 1, "missing 'graph <n>' header");
  const Line& first = lines.front();
  if (first.tokens[0].text != "graph") {
    throw ParseError(first.number, first.tokens[0].column, "expected 'graph <n>'");
  }
  expect_count(first, 2);
  long n = to_int(first, 1);
  if (n < 0 || n > 1000000) throw ParseError(first.number, first.tokens[1].column, "bad vertex count");
  return static_cast<int>(n);
}

VertexId vertex_at(const Line& line, std::size_t index, int n) {
  long v = to_int(line, index);
  if (v < 0 || v >= n) {
    throw ParseError(line.number, line.tokens[index].column,
                     "vertex " + std::to_string(v) + " out of range");
  }
  return static_cast<VertexId>(v);
}

int multiplicity_at(const Line& line, std::size_t index) {
  long m = to_int(line, index);
  if (m < 0 || m > 100000) {
    throw ParseError(line.number, line.tokens[index].column, "bad multiplicity");
  }
  return static_cast<int>(m);
}

PlaneEmbedding rotations_from(const std::vector<const Line*>& rot_lines, const Multigraph& g) {
  int n = g.num_vertices();
  std::vector<std::vector<EndId>> rot(n);
  std::vector<char> seen_vertex(n, 0);
  for (const Line* line : rot_lines) {
    VertexId v = vertex_at(*line, 1, n);
    if (seen_vertex[v]) {
      throw ParseError(line->number, line->tokens[1].column, "repeated rotation for vertex");
    }
    seen_vertex[v] = 1;
    for (std::size_t i = 2; i < line->tokens.size(); ++i) {
      long d = to_int(*line, i);
      if (d < 0 || !g.has_edge(edge_of_end(static_cast<EndId>(d))) ||
          end_vertex(g, static_cast<EndId>(d)) != v) {
        throw ParseError(line->number, line->tokens[i].column,
                         "end " + std::to_string(d) + " is not at vertex " + std::to_string(v));
      }
      rot[v].push_back(static_cast<EndId>(d));
    }
  }
  PlaneEmbedding emb(std::move(rot));
  try {
    validate_embedding(g, emb);
  } catch (const InvalidInput& e) {
    const Line* last = rot_lines.empty() ? nullptr : rot_lines.back();
    throw ParseError(last ? last->number : 1, 1, std::string("rotation inconsistency: ") + e.what());
  }
  return emb;
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
  auto lines = tokenize(text);
  int n = header(lines);
  GraphFile out{Multigraph(n), std::nullopt};
  std::vector<const Line*> rot_lines;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kw = line.tokens[0].text;
    if (kw == "edge") {
      if (!rot_lines.empty()) {
        throw ParseError(line.number, line.tokens[0].column, "edge after rotation lines");
      }
      expect_count(line, 4);
      VertexId u = vertex_at(line, 1, n), v = vertex_at(line, 2, n);
      if (u == v) throw ParseError(line.number, line.tokens[2].column, "loop at vertex " + std::to_string(u));
      int m = multiplicity_at(line, 3);
      for (int j = 0; j < m; ++j) out.graph.add_edge(u, v);
    } else if (kw == "rot") {
      rot_lines.push_back(&line);
    } else {
      throw ParseError(line.number, line.tokens[0].column, "unknown keyword '" + kw + "'");
    }
  }
  if (!rot_lines.empty()) out.embedding = rotations_from(rot_lines, out.graph);
  return out;
}

SignedGraph parse_signed_graph(const std::string& text) {
  auto lines = tokenize(text);
  int n = header(lines);
  std::vector<std::tuple<int, int, int, int>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0].text != "edge") {
      throw ParseError(line.number, line.tokens[0].column,
                       "unknown keyword '" + line.tokens[0].text + "'");
    }
    expect_count(line, 5);
    VertexId u = vertex_at(line, 1, n), v = vertex_at(line, 2, n);
    if (u == v) throw ParseError(line.number, line.tokens[2].column, "loop at vertex " + std::to_string(u));
    rows.emplace_back(u, v, multiplicity_at(line, 3), multiplicity_at(line, 4));
  }
  return SignedGraph::from_multiplicities(n, rows);
}

PlaneEmbedding parse_embedding(const std::string& text, const Multigraph& g) {
  auto lines = tokenize(text);
  std::vector<const Line*> rot_lines;
  for (const Line& line : lines) {
    if (line.tokens[0].text != "rot") {
      throw ParseError(line.number, line.tokens[0].column, "expected 'rot'");
    }
    if (line.tokens.size() < 2) to_int(line, 1);
    rot_lines.push_back(&line);
  }
  return rotations_from(rot_lines, g);
}

std::vector<int> parse_boundary(const std::string& text, int n) {
  std::vector<int> beta(n, 0);
  std::vector<char> seen(n, 0);
  for (const Line& line : tokenize(text)) {
    expect_count(line, 2);
    VertexId v = vertex_at(line, 0, n);
    if (seen[v]) throw ParseError(line.number, line.tokens[0].column, "repeated vertex");
    seen[v] = 1;
    beta[v] = static_cast<int>(to_int(line, 1));
  }
  return beta;
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "graph " << g.num_vertices() << "\n";
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j].u == edges[i].u && edges[j].v == edges[i].v) ++j;
    out << "edge " << edges[i].u << " " << edges[i].v << " " << (j - i) << "\n";
    i = j;
  }
  return out.str();
}

std::string serialize_signed_graph(const SignedGraph& gs) {
  std::ostringstream out;
  out << "graph " << gs.graph.num_vertices() << "\n";
  auto edges = gs.graph.edges();
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    int pos = 0, neg = 0;
    while (j < edges.size() && edges[j].u == edges[i].u && edges[j].v == edges[i].v &&
           (gs.sign[j] > 0 ? neg == 0 : true)) {
      (gs.sign[j] > 0 ? pos : neg) += 1;
      ++j;
    }
    out << "edge " << edges[i].u << " " << edges[i].v << " " << pos << " " << neg << "\n";
    i = j;
  }
  return out.str();
}

std::string serialize_embedding(const PlaneEmbedding& emb) {
  std::ostringstream out;
  for (VertexId v = 0; v < emb.num_vertices(); ++v) {
    out << "rot " << v;
    for (EndId d : emb.rotation(v)) out << " " << d;
    out << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace orient9
