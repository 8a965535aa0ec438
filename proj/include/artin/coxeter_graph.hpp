#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/error.hpp"
#include "artin/word.hpp"

namespace artin {

/// Labeled simple graph; an absent edge means label 2, the diagonal is 1.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  std::size_t add_vertex(std::string name) {
    std::size_t i = names_.add(std::move(name));
    for (auto& row : labels_) row.push_back(2);
    labels_.emplace_back(i + 1, 2);
    labels_[i][i] = 1;
    return i;
  }

  void add_edge(std::size_t a, std::size_t b, int m = 3) {
    if (a >= size() || b >= size()) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("loop at vertex '" + name(a) + "'");
    if (m < 3) throw InvalidArgument("edge label must be at least 3");
    if (labels_[a][b] != 2)
      throw InvalidArgument("multiple edge between '" + name(a) + "' and '" + name(b) + "'");
    labels_[a][b] = labels_[b][a] = m;
  }

  void add_edge(std::string_view a, std::string_view b, int m = 3) {
    add_edge(names_.index(a), names_.index(b), m);
  }

  std::size_t size() const { return names_.size(); }
  const Alphabet& alphabet() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.name(i); }
  std::size_t index(std::string_view name) const { return names_.index(name); }
  std::optional<std::size_t> find(std::string_view name) const { return names_.find(name); }

  int label(std::size_t i, std::size_t j) const { return labels_.at(i).at(j); }
  bool adjacent(std::size_t i, std::size_t j) const { return i != j && label(i, j) >= 3; }

  std::vector<std::size_t> neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
      if (adjacent(i, j)) out.push_back(j);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (adjacent(i, j)) ++e;
    return e;
  }

  std::vector<std::vector<int>> coxeter_matrix() const { return labels_; }

  /// Connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<std::size_t>> components() const {
    std::vector<int> comp(size(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < size(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s}, members;
      comp[s] = static_cast<int>(out.size());
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (std::size_t w : neighbors(v))
          if (comp[w] < 0) {
            comp[w] = comp[s];
            stack.push_back(w);
          }
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

  bool connected() const { return size() > 0 && components().size() == 1; }

  /// Induced subgraph on `subset`, vertices kept in ambient order.
  CoxeterGraph induced(std::vector<std::size_t> subset) const {
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
      throw InvalidArgument("repeated vertex in subset");
    CoxeterGraph g;
    for (std::size_t v : subset) g.add_vertex(name(v));
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = a + 1; b < subset.size(); ++b)
        if (adjacent(subset[a], subset[b])) g.add_edge(a, b, label(subset[a], subset[b]));
    return g;
  }

  std::vector<std::size_t> indices(const std::vector<std::string>& names) const {
    std::vector<std::size_t> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(index(n));
    return out;
  }

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.names_ == b.names_ && a.labels_ == b.labels_;
  }

 private:
  Alphabet names_;
  std::vector<std::vector<int>> labels_;
};

inline CoxeterGraph parse_graph(std::string_view text) {
  CoxeterGraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto where = [&] { return "graph line " + std::to_string(lineno) + ": "; };
    try {
      if (tok[0] == "vertex" && tok.size() == 2) {
        g.add_vertex(tok[1]);
      } else if (tok[0] == "edge" && (tok.size() == 3 || tok.size() == 4)) {
        int m = 3;
        if (tok.size() == 4) {
          std::size_t used = 0;
          m = std::stoi(tok[3], &used);
          if (used != tok[3].size()) throw ParseError("bad label '" + tok[3] + "'");
        }
        g.add_edge(tok[1], tok[2], m);
      } else {
        throw ParseError("unrecognised record '" + tok[0] + "'");
      }
    } catch (const std::logic_error& e) {
      throw ParseError(where() + e.what());
    } catch (const Error& e) {
      throw ParseError(where() + e.what());
    }
  }
  return g;
}

inline std::string format_graph(const CoxeterGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) out += "vertex " + g.name(i) + "\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j)) {
        out += "edge " + g.name(i) + " " + g.name(j);
        if (g.label(i, j) != 3) out += " " + std::to_string(g.label(i, j));
        out += "\n";
      }
  return out;
}

enum class Family { A, B, D, E, F, G };

struct StandardType {
  Family family = Family::A;
  std::size_t rank = 1;

  friend bool operator==(const StandardType&, const StandardType&) = default;
};

inline bool valid(StandardType t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

inline std::string to_string(StandardType t) {
  static constexpr char letters[] = {'A', 'B', 'D', 'E', 'F', 'G'};
  return std::string(1, letters[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

inline StandardType parse_standard_type(std::string_view text) {
  static constexpr std::string_view letters = "ABDEFG";
  if (text.size() < 2) throw ParseError("bad type '" + std::string(text) + "'");
  auto f = letters.find(text[0]);
  if (f == std::string_view::npos) throw ParseError("unknown family in '" + std::string(text) + "'");
  std::size_t rank = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') throw ParseError("bad rank in '" + std::string(text) + "'");
    rank = rank * 10 + static_cast<std::size_t>(c - '0');
  }
  StandardType t{static_cast<Family>(f), rank};
  if (!valid(t)) throw InvalidArgument("unsupported type '" + std::string(text) + "'");
  return t;
}

/// Vertices x1..xl numbered as in the usual Dynkin pictures: A path; B with the
/// 4-edge on x1-x2; D with leaves x1, x2 on x3; E with the branch on x3 (E6),
/// x4 (E7), x5 (E8); F4 with the 4-edge on x2-x3; G2 a 6-edge.
inline CoxeterGraph instantiate(StandardType t) {
  if (!valid(t)) throw InvalidArgument("unsupported type " + to_string(t));
  const std::size_t l = t.rank;
  CoxeterGraph g;
  for (std::size_t i = 1; i <= l; ++i) g.add_vertex("x" + std::to_string(i));
  auto path = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) g.add_edge(i - 1, i);
  };
  switch (t.family) {
    case Family::A:
      path(1, l);
      break;
    case Family::B:
      g.add_edge(0, 1, 4);
      path(2, l);
      break;
    case Family::D:
      g.add_edge(0, 2);
      g.add_edge(1, 2);
      path(3, l);
      break;
    case Family::E:
      path(1, l - 1);
      g.add_edge(l == 6 ? 2 : l == 7 ? 3 : 4, l - 1);
      break;
    case Family::F:
      g.add_edge(0, 1);
      g.add_edge(1, 2, 4);
      g.add_edge(2, 3);
      break;
    case Family::G:
      g.add_edge(0, 1, 6);
      break;
  }
  return g;
}

struct Classification {
  StandardType type;
  /// to_standard[i] is the standard index (0-based, x_{k+1}) of input vertex i.
  std::vector<std::size_t> to_standard;
};

namespace detail {

inline bool extend_isomorphism(const CoxeterGraph& in, const CoxeterGraph& std_g, std::size_t v,
                               std::vector<std::size_t>& map, std::vector<bool>& used) {
  if (v == in.size()) return true;
  for (std::size_t t = 0; t < std_g.size(); ++t) {
    if (used[t]) continue;
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u) ok = in.label(u, v) == std_g.label(map[u], t);
    if (!ok) continue;
    map[v] = t;
    used[t] = true;
    if (extend_isomorphism(in, std_g, v + 1, map, used)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace detail

/// Lexicographically least vertex map onto the matching standard type, if any.
inline std::optional<Classification> classify_finite_type(const CoxeterGraph& g) {
  if (!g.connected()) return std::nullopt;
  const std::size_t l = g.size();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      int m = g.label(i, j);
      if (m != 2 && m != 3 && m != 4 && m != 6) return std::nullopt;
    }
  if (g.edge_count() != l - 1) return std::nullopt;
  std::vector<StandardType> candidates;
  for (Family f : {Family::A, Family::B, Family::D, Family::E, Family::F, Family::G}) {
    StandardType t{f, l};
    if (valid(t)) candidates.push_back(t);
  }
  for (StandardType t : candidates) {
    CoxeterGraph s = instantiate(t);
    std::vector<std::size_t> map(l);
    std::vector<bool> used(l, false);
    if (detail::extend_isomorphism(g, s, 0, map, used)) return Classification{t, std::move(map)};
  }
  return std::nullopt;
}

/// Chords given by endpoint positions 0..2l-1 around the boundary circle.
struct ChordDiagram {
  std::vector<std::pair<std::size_t, std::size_t>> chords;
};

inline void validate(const ChordDiagram& d) {
  const std::size_t points = 2 * d.chords.size();
  std::vector<bool> seen(points, false);
  for (auto [a, b] : d.chords) {
    if (a == b) throw InvalidArgument("chord with coincident endpoints");
    for (std::size_t p : {a, b}) {
      if (p >= points) throw InvalidArgument("chord endpoint out of range");
      if (seen[p]) throw InvalidArgument("endpoint " + std::to_string(p) + " used twice");
      seen[p] = true;
    }
  }
}

inline bool chords_cross(std::pair<std::size_t, std::size_t> c, std::pair<std::size_t, std::size_t> d) {
  auto [a, b] = std::minmax(c.first, c.second);
  auto [x, y] = std::minmax(d.first, d.second);
  return (a < x && x < b && b < y) || (x < a && a < y && y < b);
}

inline CoxeterGraph chord_to_coxeter(const ChordDiagram& d) {
  validate(d);
  CoxeterGraph g;
  for (std::size_t i = 1; i <= d.chords.size(); ++i) g.add_vertex("x" + std::to_string(i));
  for (std::size_t i = 0; i < d.chords.size(); ++i)
    for (std::size_t j = i + 1; j < d.chords.size(); ++j)
      if (chords_cross(d.chords[i], d.chords[j])) g.add_edge(i, j);
  return g;
}

/// Simple graph on punctures 0..vertices-1; edge k becomes Coxeter vertex a_{k+1}.
struct EmbeddedGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline CoxeterGraph embedded_graph_to_coxeter(const EmbeddedGraph& e) {
  for (std::size_t i = 0; i < e.edges.size(); ++i) {
    auto [a, b] = e.edges[i];
    if (a >= e.vertices || b >= e.vertices) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("loop in embedded graph");
    for (std::size_t j = 0; j < i; ++j)
      if (std::minmax(a, b) == std::minmax(e.edges[j].first, e.edges[j].second))
        throw InvalidArgument("multiple edge in embedded graph");
  }
  CoxeterGraph g;
  for (std::size_t i = 1; i <= e.edges.size(); ++i) g.add_vertex("a" + std::to_string(i));
  for (std::size_t i = 0; i < e.edges.size(); ++i)
    for (std::size_t j = i + 1; j < e.edges.size(); ++j) {
      auto [a, b] = e.edges[i];
      auto [c, d] = e.edges[j];
      if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
    }
  return g;
}

}  // namespace artin
