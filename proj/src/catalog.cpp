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


#include "orient9/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "orient9/errors.hpp"
#include "orient9/graph_ops.hpp"

namespace orient9 {

namespace {

const char* const kDefaultCatalog = R"(# orient9 configuration catalog
pattern 8K2 forbidden
display 8K_2
vertices x y
pair x y 8
end

pattern T117 forbidden
display T_{1,1,7}
vertices x y v
pair x y 7
leg x v y
lift v x y
target x y 8
end

pattern T226 forbidden
display T_{2,2,6}
vertices x y u
pair x y 6
pair x u 2
pair u y 2
lift u x y
lift u x y
target x y 8
end

pattern T335 forbidden
display T_{3,3,5}
vertices x y v
pair x y 5
pair x v 3
pair v y 3
lift v x y
lift v x y
lift v x y
target x y 8
end

pattern To117 forbidden
display T^o_{1,1,7}
note one of the seven base edges is opened into a path of length 2
vertices x y u v
pair x y 6
leg x u y
leg x v y
lift u x y
lift v x y
target x y 8
end

pattern To226 forbidden
display T^o_{2,2,6}
note one of the six base edges is opened into a path of length 2
vertices x y u v
pair x y 5
pair x u 2
pair u y 2
leg x v y
lift u x y
lift u x y
lift v x y
target x y 8
end

pattern Q1117 forbidden
display Q_{1,1,1,7}
vertices x y u v
pair x y 7
leg x u v y
lift u x v
lift v x y
target x y 8
end

pattern Qo1117 forbidden
display Q^o_{1,1,1,7}
note one of the seven base edges is opened into a path of length 2
vertices x y u v w
pair x y 6
leg x u v y
leg x w y
lift u x v
lift v x y
lift w x y
target x y 8
end

pattern V11117 forbidden
display V_{1,1,1,1,7}
vertices x y u w v
pair x y 7
leg x u w v y
lift u x w
lift w x v
lift v x y
target x y 8
end

pattern Qo6667 forbidden
display Q^o_{6,6,6,7}
note the seventh xy edge is drawn as a path of length 3 through a and b
vertices x y u v a b
pair x y 6
pair x u 6
pair u v 6
pair v y 6
leg x a b y
lift a x b
lift b x y
target x y 7
target x u 6
target u v 6
target v y 6
end

pattern Qoo6667 forbidden
display Q^oo_{6,6,6,7}
note xy keeps five edges and z is joined twice to each of x and y
vertices x y u v z
pair x y 5
pair x u 6
pair u v 6
pair v y 6
pair z x 2
pair z y 2
lift z x y
lift z x y
target x y 7
target x u 6
target u v 6
target v y 6
end

pattern F forbidden
display F
note T_{4,4,4} with attachments a on xz, b doubled on xy, c on yz
vertices x y z a b c
pair x y 4
pair x z 4
pair y z 4
leg x a z
pair b x 2
pair b y 2
leg y c z
lift a x z
lift b x y
lift b x y
lift c y z
target x z 5
target x y 6
target y z 5
end

pattern multiK4 allowed
display multi-K_4
vertices x y z w
pair x y 1
pair x z 1
pair x w 1
pair y z 1
pair y w 1
pair z w 1
end

pattern 6C4+ allowed
display 6C_4^+
vertices x y z w
pair x y 7
pair y z 6
pair z w 6
pair w x 6
end
)";

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::string rest_of_line(const std::string& line, const Token& after) {
  std::size_t start = after.column - 1 + after.text.size();
  while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
  std::size_t end = line.size();
  while (end > start && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
  return line.substr(start, end - start);
}

void check_pattern(const ConfigPattern& p, int line) {
  auto fail = [&](const std::string& msg) {
    throw ParseError(line, 1, "pattern " + p.name + ": " + msg);
  };
  if (p.vertices.size() < 2) fail("needs at least two vertices");
  if (p.pairs.empty()) fail("needs at least one pair");
  for (const auto& pp : p.pairs) {
    if (pp.a == pp.b) fail("pair joins a vertex to itself");
    if (pp.threshold < 1) fail("thresholds must be at least 1");
  }
  for (const auto& pp : p.target) {
    if (pp.a == pp.b || pp.threshold < 1) fail("bad target pair");
  }
  for (const auto& l : p.recipe) {
    if (l.v == l.x || l.v == l.y || l.x == l.y) fail("lift needs three distinct vertices");
  }
}

}  // namespace

Multigraph ConfigPattern::instance() const {
  Multigraph g(num_vertices());
  for (const auto& pp : pairs) {
    for (int i = 0; i < pp.threshold; ++i) g.add_edge(pp.a, pp.b);
  }
  return g;
}

std::vector<ConfigPattern> parse_catalog(const std::string& text) {
  std::vector<ConfigPattern> out;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  std::optional<ConfigPattern> cur;
  int start_line = 0;
  auto vertex = [&](const Token& t) {
    const auto& vs = cur->vertices;
    auto it = std::find(vs.begin(), vs.end(), t.text);
    if (it == vs.end()) throw ParseError(ln, t.column, "unknown vertex '" + t.text + "'");
    return static_cast<int>(it - vs.begin());
  };
  auto number = [&](const Token& t) {
    try {
      std::size_t used = 0;
      int v = std::stoi(t.text, &used);
      if (used != t.text.size()) throw std::invalid_argument(t.text);
      return v;
    } catch (const std::exception&) {
      throw ParseError(ln, t.column, "expected an integer, got '" + t.text + "'");
    }
  };
  while (std::getline(in, line)) {
    ++ln;
    auto tok = tokenize(line);
    if (tok.empty() || tok[0].text[0] == '#') continue;
    const std::string& kw = tok[0].text;
    auto need = [&](std::size_t n) {
      if (tok.size() != n) {
        throw ParseError(ln, tok[0].column,
                         "'" + kw + "' expects " + std::to_string(n - 1) + " arguments");
      }
    };
    if (kw == "pattern") {
      if (cur) throw ParseError(ln, tok[0].column, "missing 'end' before new pattern");
      if (tok.size() != 2 && tok.size() != 3) {
        throw ParseError(ln, tok[0].column, "'pattern' expects a name and a status");
      }
      cur = ConfigPattern{};
      start_line = ln;
      cur->name = tok[1].text;
      cur->display = tok[1].text;
      if (tok.size() == 3) {
        if (tok[2].text == "forbidden") {
          cur->forbidden = true;
        } else if (tok[2].text == "allowed") {
          cur->forbidden = false;
        } else {
          throw ParseError(ln, tok[2].column, "status must be forbidden or allowed");
        }
      }
      continue;
    }
    if (!cur) throw ParseError(ln, tok[0].column, "'" + kw + "' outside a pattern");
    if (kw == "end") {
      need(1);
      check_pattern(*cur, start_line);
      for (const auto& p : out) {
        if (p.name == cur->name) {
          throw ParseError(start_line, 1, "duplicate pattern " + cur->name);
        }
      }
      out.push_back(*cur);
      cur.reset();
    } else if (kw == "display") {
      cur->display = rest_of_line(line, tok[0]);
    } else if (kw == "note") {
      cur->note = rest_of_line(line, tok[0]);
    } else if (kw == "vertices") {
      if (!cur->vertices.empty()) throw ParseError(ln, tok[0].column, "vertices declared twice");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (std::count(cur->vertices.begin(), cur->vertices.end(), tok[i].text)) {
          throw ParseError(ln, tok[i].column, "repeated vertex '" + tok[i].text + "'");
        }
        cur->vertices.push_back(tok[i].text);
      }
    } else if (kw == "pair" || kw == "target") {
      need(4);
      PatternPair pp{vertex(tok[1]), vertex(tok[2]), number(tok[3])};
      (kw == "pair" ? cur->pairs : cur->target).push_back(pp);
    } else if (kw == "leg") {
      if (tok.size() < 3) throw ParseError(ln, tok[0].column, "'leg' needs two ends");
      std::vector<int> path;
      for (std::size_t i = 1; i < tok.size(); ++i) path.push_back(vertex(tok[i]));
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        cur->pairs.push_back({path[i], path[i + 1], 1});
      }
      cur->legs.push_back(path);
    } else if (kw == "lift") {
      need(4);
      cur->recipe.push_back({vertex(tok[1]), vertex(tok[2]), vertex(tok[3])});
    } else {
      throw ParseError(ln, tok[0].column, "unknown keyword '" + kw + "'");
    }
  }
  if (cur) throw ParseError(ln, 1, "pattern " + cur->name + " lacks 'end'");
  return out;
}

std::string serialize_catalog(const std::vector<ConfigPattern>& catalog) {
  std::ostringstream out;
  for (const auto& p : catalog) {
    const auto& v = p.vertices;
    out << "pattern " << p.name << (p.forbidden ? " forbidden" : " allowed") << "\n";
    out << "display " << p.display << "\n";
    if (!p.note.empty()) out << "note " << p.note << "\n";
    out << "vertices";
    for (const auto& s : v) out << " " << s;
    out << "\n";
    std::vector<char> skip(p.pairs.size(), 0);
    for (const auto& leg : p.legs) {
      for (std::size_t i = 0; i + 1 < leg.size(); ++i) {
        for (std::size_t j = 0; j < p.pairs.size(); ++j) {
          const auto& pp = p.pairs[j];
          if (!skip[j] && pp.a == leg[i] && pp.b == leg[i + 1] && pp.threshold == 1) {
            skip[j] = 1;
            break;
          }
        }
      }
    }
    for (std::size_t j = 0; j < p.pairs.size(); ++j) {
      if (skip[j]) continue;
      const auto& pp = p.pairs[j];
      out << "pair " << v[pp.a] << " " << v[pp.b] << " " << pp.threshold << "\n";
    }
    for (const auto& leg : p.legs) {
      out << "leg";
      for (int w : leg) out << " " << v[w];
      out << "\n";
    }
    for (const auto& l : p.recipe) {
      out << "lift " << v[l.v] << " " << v[l.x] << " " << v[l.y] << "\n";
    }
    for (const auto& pp : p.target) {
      out << "target " << v[pp.a] << " " << v[pp.b] << " " << pp.threshold << "\n";
    }
    out << "end\n\n";
  }
  return out.str();
}

const std::string& default_catalog_text() {
  static const std::string text = kDefaultCatalog;
  return text;
}

const std::vector<ConfigPattern>& default_catalog() {
  static const std::vector<ConfigPattern> catalog = parse_catalog(kDefaultCatalog);
  return catalog;
}

const ConfigPattern& find_pattern(const std::vector<ConfigPattern>& catalog,
                                  const std::string& name) {
  for (const auto& p : catalog) {
    if (p.name == name) return p;
  }
  throw InvalidInput("unknown pattern '" + name + "'");
}

std::vector<std::array<int, 3>> match_key(const ConfigPattern& pattern,
                                          const std::vector<VertexId>& assignment) {
  std::map<std::pair<int, int>, int> need;
  for (const auto& pp : pattern.pairs) {
    int a = assignment[pp.a], b = assignment[pp.b];
    need[{std::min(a, b), std::max(a, b)}] += pp.threshold;
  }
  std::vector<std::array<int, 3>> key;
  for (const auto& [ab, t] : need) key.push_back({ab.first, ab.second, t});
  return key;
}

std::vector<ConfigMatch> detect_config(const Multigraph& g,
                                       const ConfigPattern& pattern) {
  int k = pattern.num_vertices(), n = g.num_vertices();
  std::vector<std::vector<int>> need(k, std::vector<int>(k, 0));
  std::vector<int> weighted(k, 0);
  for (const auto& pp : pattern.pairs) {
    need[pp.a][pp.b] += pp.threshold;
    need[pp.b][pp.a] += pp.threshold;
    weighted[pp.a] += pp.threshold;
    weighted[pp.b] += pp.threshold;
  }
  std::vector<int> mu = g.multiplicity_matrix();
  std::vector<VertexId> assign(k, -1);
  std::vector<char> used(n, 0);
  std::map<std::vector<std::array<int, 3>>, ConfigMatch> found;
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      auto key = match_key(pattern, assign);
      if (found.count(key)) return;
      ConfigMatch m{pattern.name, assign, {}};
      for (const auto& [a, b, t] : key) {
        auto ids = g.edges_between(a, b);
        std::sort(ids.begin(), ids.end());
        m.edges.insert(m.edges.end(), ids.begin(), ids.begin() + t);
      }
      found.emplace(key, std::move(m));
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || g.degree(c) < weighted[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = mu[c * n + assign[j]] >= need[i][j];
      }
      if (!ok) continue;
      used[c] = 1;
      assign[i] = c;
      rec(i + 1);
      used[c] = 0;
    }
    assign[i] = -1;
  };
  rec(0);
  std::vector<ConfigMatch> out;
  for (auto& [key, m] : found) out.push_back(std::move(m));
  return out;
}

std::vector<ConfigMatch> detect_config(const Multigraph& g,
                                       const std::string& name_or_all,
                                       const std::vector<ConfigPattern>& catalog) {
  if (name_or_all != "all") return detect_config(g, find_pattern(catalog, name_or_all));
  std::vector<ConfigMatch> out;
  for (const auto& p : catalog) {
    auto m = detect_config(g, p);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

std::optional<LiftChoice> choose_lift(const Multigraph& g, VertexId v,
                                      VertexId x, VertexId y,
                                      const PlaneEmbedding* emb) {
  if (!emb) {
    auto xs = g.edges_between(v, x), ys = g.edges_between(v, y);
    if (xs.empty() || ys.empty()) return std::nullopt;
    return LiftChoice{*std::min_element(xs.begin(), xs.end()),
                      *std::min_element(ys.begin(), ys.end())};
  }
  const auto& rot = emb->rotation(v);
  int d = static_cast<int>(rot.size());
  for (int i = 0; i < d; ++i) {
    EndId a = rot[i], b = rot[(i + 1) % d];
    if (d < 2 || a == b) break;
    VertexId fa = end_vertex(g, twin(a)), fb = end_vertex(g, twin(b));
    if (fa == x && fb == y) return LiftChoice{edge_of_end(a), edge_of_end(b)};
    if (fa == y && fb == x) return LiftChoice{edge_of_end(b), edge_of_end(a)};
  }
  return std::nullopt;
}

std::optional<RecipeOutcome> apply_recipe(const Multigraph& g,
                                          const ConfigPattern& pattern,
                                          const ConfigMatch& match,
                                          const PlaneEmbedding* emb) {
  require(static_cast<int>(match.assignment.size()) == pattern.num_vertices(),
          "match does not fit the pattern");
  RecipeOutcome out{g, emb ? std::optional<PlaneEmbedding>(*emb) : std::nullopt,
                    {}, Multigraph(0), false};
  for (const auto& step : pattern.recipe) {
    VertexId v = match.assignment[step.v], x = match.assignment[step.x],
             y = match.assignment[step.y];
    const PlaneEmbedding* cur = out.embedding ? &*out.embedding : nullptr;
    auto pick = choose_lift(out.graph, v, x, y, cur);
    if (!pick) return std::nullopt;
    Lifted l = lift_edges(out.graph, v, pick->e1, pick->e2, cur);
    out.graph = std::move(l.graph);
    out.embedding = std::move(l.embedding);
  }
  std::vector<int> idx;
  for (const auto& pp : pattern.target) {
    for (int p : {pp.a, pp.b}) {
      if (std::find(idx.begin(), idx.end(), p) == idx.end()) idx.push_back(p);
    }
  }
  std::sort(idx.begin(), idx.end());
  for (int p : idx) out.target_vertices.push_back(match.assignment[p]);
  out.target = Multigraph(g.num_vertices());
  out.target_met = true;
  for (const auto& pp : pattern.target) {
    VertexId a = match.assignment[pp.a], b = match.assignment[pp.b];
    auto ids = out.graph.edges_between(a, b);
    std::sort(ids.begin(), ids.end());
    if (static_cast<int>(ids.size()) < pp.threshold) {
      out.target_met = false;
      continue;
    }
    for (int i = 0; i < pp.threshold; ++i) out.target.add_edge_with_id(ids[i], a, b);
  }
  return out;
}

}  // namespace orient9
