#pragma once

// Coxeter graphs and relator schemas presenting punctured mapping class groups
// as quotients of Artin groups.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/error.hpp"
#include "artin/garside.hpp"
#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

enum class Flavor { full, pure };

struct SurfaceParams {
  int g = 1;
  int r = 0;
  int n = 0;
  Flavor flavor = Flavor::full;
  bool closed = false;
};

inline void validate(const SurfaceParams& p) {
  if (p.g < 1) throw InvalidArgument("genus must be at least 1");
  if (p.r < 0 || p.n < 0) throw InvalidArgument("r and n must be non-negative");
  if (p.closed && p.r != 0) throw InvalidArgument("closed surfaces require r = 0");
  if (p.closed && p.flavor == Flavor::pure)
    throw InvalidArgument("pure mapping class groups of closed surfaces are unsupported by the paper");
}

inline std::string to_string(const SurfaceParams& p) {
  return "g=" + std::to_string(p.g) + " r=" + std::to_string(p.r) + " n=" + std::to_string(p.n) +
         (p.flavor == Flavor::pure ? " pure" : " full") + (p.closed ? " closed" : " bounded");
}

struct Role {
  char kind = 'x';
  int index = 0;
};

struct GraphFamily {
  CoxeterGraph graph;
  std::vector<Role> roles;
};

inline std::string xname(int i) { return "x" + std::to_string(i); }
inline std::string yname(int i) { return "y" + std::to_string(i); }
inline std::string uname(int i) { return "u" + std::to_string(i); }
inline std::string vname(int i) { return "v" + std::to_string(i); }

/// Highest x index: x_{r+1} only exists when there are punctures.
inline int top_x(const SurfaceParams& p) {
  if (p.flavor == Flavor::pure) return p.n + p.r;
  return p.n >= 1 ? p.r + 1 : p.r;
}

struct ExtraEdge {
  std::string a, b;
  int label = 3;
};

/// Vertex order: x's, y's, z, u's, v's. `extra` adds edges such as u-vertex
/// adjacencies, which are absent by default.
inline GraphFamily build_graph(const SurfaceParams& p, const std::vector<ExtraEdge>& extra = {}) {
  validate(p);
  GraphFamily f;
  auto add = [&](std::string name, char kind, int idx) {
    f.graph.add_vertex(std::move(name));
    f.roles.push_back({kind, idx});
  };
  const int xs = top_x(p);
  for (int i = 0; i <= xs; ++i) add(xname(i), 'x', i);
  for (int i = 1; i <= 2 * p.g - 1; ++i) add(yname(i), 'y', i);
  if (p.g >= 2) add("z", 'z', 0);
  for (int i = 1; i <= p.r; ++i) add(uname(i), 'u', i);
  const int vs = p.flavor == Flavor::full ? p.n - 1 : 0;
  for (int i = 1; i <= vs; ++i) add(vname(i), 'v', i);

  auto& g = f.graph;
  for (int i = 0; i <= xs; ++i) g.add_edge(xname(i), "y1");
  for (int i = 1; i < 2 * p.g - 1; ++i) g.add_edge(yname(i), yname(i + 1));
  if (p.g >= 2) g.add_edge("z", "y3");
  if (vs >= 1) g.add_edge(xname(p.r + 1), "v1", 4);
  for (int i = 1; i < vs; ++i) g.add_edge(vname(i), vname(i + 1));
  for (const auto& e : extra) g.add_edge(e.a, e.b, e.label);
  return f;
}

inline std::vector<ExtraEdge> parse_extra_edges(std::string_view text) {
  std::vector<ExtraEdge> out;
  CoxeterGraph scratch;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] != "edge" || tok.size() < 3 || tok.size() > 4)
      throw ParseError("extra edges line " + std::to_string(lineno) + ": expected 'edge <a> <b> [m]'");
    ExtraEdge e{tok[1], tok[2], 3};
    if (tok.size() == 4) {
      try {
        e.label = std::stoi(tok[3]);
      } catch (const std::exception&) {
        throw ParseError("extra edges line " + std::to_string(lineno) + ": bad label");
      }
    }
    out.push_back(e);
  }
  return out;
}

/// Generator power x^k or Δ^k(X) inside a relator template.
struct Term {
  bool delta = false;
  std::vector<std::string> names;
  long power = 1;
  /// Expected standard type of Δ's argument, e.g. "D6".
  std::string expected;
};

inline Term gen(std::string name, long k = 1) { return {false, {std::move(name)}, k, {}}; }
inline Term delta(std::vector<std::string> names, long k, std::string expected) {
  return {true, std::move(names), k, std::move(expected)};
}

struct EmittedRelation {
  std::string schema;
  std::string tag;
  std::vector<Term> lhs_terms, rhs_terms;
  Word lhs, rhs;

  Word relator() const { return concat(lhs, inverse(rhs)); }
};

inline std::string format_term(const Term& t) {
  std::string pw = t.power == 1 ? "" : "^" + std::to_string(t.power);
  if (!t.delta) return t.names[0] + pw;
  std::string s = "Delta" + pw + "(";
  for (std::size_t i = 0; i < t.names.size(); ++i) s += (i ? "," : "") + t.names[i];
  return s + ")";
}

inline std::string format_terms(const std::vector<Term>& ts) {
  if (ts.empty()) return "1";
  std::string s;
  for (const auto& t : ts) s += (s.empty() ? "" : " ") + format_term(t);
  return s;
}

/// The relation as written in the source, e.g. `Delta^4(y1,y2,y3,z) = ...`.
inline std::string symbolic(const EmittedRelation& e) {
  return format_terms(e.lhs_terms) + " = " + format_terms(e.rhs_terms);
}

namespace detail {

inline std::vector<std::string> range_names(const char* prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::string bn(int n) { return n == 1 ? "A1" : "B" + std::to_string(n); }
inline std::string dn(int n) { return n == 3 ? "A3" : "D" + std::to_string(n); }

struct Emitter {
  const SurfaceParams& p;
  std::vector<EmittedRelation> out;

  void emit(std::string schema, std::string instance, std::vector<Term> lhs, std::vector<Term> rhs) {
    std::string tag = instance.empty() ? schema : schema + ":" + instance;
    out.push_back({std::move(schema), std::move(tag), std::move(lhs), std::move(rhs), {}, {}});
  }

  std::vector<std::string> yz(int from = 1) const { return join(range_names("y", from, 3), {"z"}); }

  void r1(const std::string& id) {
    if (p.g >= 2) emit(id, "", {delta(yz(), 4, "A4")}, {delta(join({"x0"}, yz()), 2, "A5")});
  }
  void r2(const std::string& id) {
    if (p.g < 3) return;
    auto big = join(range_names("y", 1, 5), {"z"});
    emit(id, "", {delta(big, 2, "E6")}, {delta(join({"x0"}, big), 1, "E7")});
  }

  /// x_k C = C x_k and y_2 C = C y_2 with C = Δ^{-1}(x_{i+1},x_j,y_1) x_i Δ(x_{i+1},x_j,y_1).
  void commutations(const std::string& r3, const std::string& r4, int imax, int xs) {
    auto conj = [](int i, int j) {
      std::vector<std::string> s{xname(i + 1), xname(j), "y1"};
      return std::vector<Term>{delta(s, -1, "A3"), gen(xname(i)), delta(s, 1, "A3")};
    };
    auto with = [](std::vector<Term> c, Term t, bool front) {
      if (front) c.insert(c.begin(), t);
      else c.push_back(t);
      return c;
    };
    auto label = [](int k, int j, int i) {
      std::string s = k >= 0 ? "k=" + std::to_string(k) + "," : "";
      return s + "j=" + std::to_string(j) + ",i=" + std::to_string(i);
    };
    for (int i = 0; i <= imax && i + 1 <= xs; ++i)
      for (int j = 0; j < i; ++j)
        for (int k = 0; k < j; ++k)
          emit(r3, label(k, j, i), with(conj(i, j), gen(xname(k)), true), with(conj(i, j), gen(xname(k)), false));
    if (p.g < 2) return;
    for (int i = 0; i <= imax && i + 1 <= xs; ++i)
      for (int j = 0; j < i; ++j)
        emit(r4, label(-1, j, i), with(conj(i, j), gen("y2"), true), with(conj(i, j), gen("y2"), false));
  }

  std::vector<Term> u1_value() const {
    return {delta(join({"x0", "x1"}, yz()), 1, "D6"), delta(join({"x1"}, yz()), -2, "A5")};
  }

  /// Δ(x_i,x_{i+1},Y) Δ^{-2}(x_{i+1},Y) with Y = y1,y2,y3,z.
  std::vector<Term> left_pair(int i) const {
    return {delta(join({xname(i), xname(i + 1)}, yz()), 1, "D6"), delta(join({xname(i + 1)}, yz()), -2, "A5")};
  }
  /// Δ(x_0,x_i,x_{i+1},y_1) Δ^{-2}(x_0,x_{i+1},y_1).
  std::vector<Term> right_pair(int i) const {
    return {delta({"x0", xname(i), xname(i + 1), "y1"}, 1, "D4"), delta({"x0", xname(i + 1), "y1"}, -2, "A3")};
  }
  std::vector<Term> u_value(int i) const {
    auto v = left_pair(i);
    v.push_back(delta({"x0", xname(i + 1), "y1"}, 2, "A3"));
    v.push_back(delta({"x0", xname(i), xname(i + 1), "y1"}, -1, "D4"));
    return v;
  }

  void r7(const std::string& id) {
    if (p.n < 2) return;
    std::string xa = xname(p.r), xb = xname(p.r + 1);
    emit(id, "", {delta({xa, xb, "y1", "v1"}, 1, "B4")}, {delta({xb, "y1", "v1"}, 2, "B3")});
  }

  std::vector<std::string> x1v() const { return join({"x1"}, range_names("v", 1, p.n - 1)); }
  std::vector<std::string> zy() const { return join({"z"}, range_names("y", 2, 2 * p.g - 1)); }

  void full_bounded() {
    r1("R1");
    r2("R2");
    commutations("R3", "R4", p.r, top_x(p));
    if (p.g >= 2 && p.r >= 1) emit("R5", "", {gen("u1")}, u1_value());
    if (p.g >= 2)
      for (int i = 1; i <= p.r - 1; ++i) emit("R6", "i=" + std::to_string(i), {gen(uname(i + 1))}, u_value(i));
    r7("R7");
    if (p.n >= 1 && p.g >= 2 && p.r == 0) emit("R8a", "", {u1_value()[0]}, {delta(join({"x1"}, yz()), 2, "A5")});
    if (p.n >= 1 && p.g >= 2 && p.r >= 1) emit("R8b", "", left_pair(p.r), right_pair(p.r));
  }

  void full_closed() {
    if (p.n == 0) {
      r1("M1");
      r2("M2");
      if (p.g == 1)
        emit("M3", "", {gen("x0"), gen("y1"), gen("x0"), gen("y1"), gen("x0"), gen("y1"), gen("x0"), gen("y1"),
                        gen("x0"), gen("y1"), gen("x0"), gen("y1")}, {});
      else
        emit("M3", "", {gen("x0", 2L * p.g - 2)}, {delta(zy(), 2, dn(2 * p.g - 1))});
      return;
    }
    r1("R1");
    r2("R2");
    r7("R7");
    if (p.g >= 2) {
      emit("R8a", "", {u1_value()[0]}, {delta(join({"x1"}, yz()), 2, "A5")});
      std::vector<Term> lhs;
      if (2L * p.g - p.n - 2 != 0) lhs.push_back(gen("x0", 2L * p.g - p.n - 2));
      lhs.push_back(delta(x1v(), 1, bn(p.n)));
      emit("R9a", "", lhs, {delta(zy(), 2, dn(2 * p.g - 1))});
    } else {
      emit("R9b", "", {gen("x0", p.n)}, {delta(x1v(), 1, bn(p.n))});
      std::vector<Term> rhs;
      if (p.n >= 2) rhs.push_back(delta(range_names("v", 1, p.n - 1), 2, "A" + std::to_string(p.n - 1)));
      emit("R9c", "", {delta({"x0", "y1"}, 4, "A2")}, rhs);
    }
  }

  void pure_bounded() {
    r1("PR1");
    r2("PR2");
    commutations("PR3", "PR4", p.r + p.n - 1, top_x(p));
    if (p.g < 2) return;
    if (p.r == 0) {
      if (p.n >= 1) emit("PR5", "", {u1_value()[0]}, {delta(join({"x1"}, yz()), 2, "A5")});
      for (int i = 1; i <= p.n - 1; ++i) emit("PR6", "i=" + std::to_string(i), left_pair(i), right_pair(i));
      return;
    }
    emit("PR5a", "", {gen("u1")}, u1_value());
    for (int i = 1; i <= p.r - 1; ++i) emit("PR6a", "i=" + std::to_string(i), {gen(uname(i + 1))}, u_value(i));
    for (int i = p.r; i <= p.n + p.r - 1; ++i) emit("PR6b", "i=" + std::to_string(i), left_pair(i), right_pair(i));
  }
};

}  // namespace detail

inline Word render_terms(const CoxeterGraph& g, const std::vector<Term>& ts,
                         std::map<std::vector<std::size_t>, Word>& cache) {
  Word out;
  for (const auto& t : ts) {
    Word unit;
    if (t.delta) {
      auto idx = g.indices(t.names);
      std::sort(idx.begin(), idx.end());
      auto it = cache.find(idx);
      if (it == cache.end()) it = cache.emplace(idx, delta_word(g, idx)).first;
      unit = it->second;
    } else {
      unit = {pos(g.index(t.names[0]))};
    }
    Word w = power(unit, t.power);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

/// Relations whose guards hold for `p`, rendered over the vertices of `fam`.
inline std::vector<EmittedRelation> emit_relators(const SurfaceParams& p, const GraphFamily& fam) {
  validate(p);
  detail::Emitter e{p, {}};
  if (p.flavor == Flavor::pure)
    e.pure_bounded();
  else if (p.closed)
    e.full_closed();
  else
    e.full_bounded();
  std::map<std::vector<std::size_t>, Word> cache;
  for (auto& rel : e.out) {
    rel.lhs = render_terms(fam.graph, rel.lhs_terms, cache);
    rel.rhs = render_terms(fam.graph, rel.rhs_terms, cache);
  }
  return e.out;
}

inline std::vector<EmittedRelation> emit_relators(const SurfaceParams& p) {
  return emit_relators(p, build_graph(p));
}

inline std::string generator_doc(const Role& r) {
  switch (r.kind) {
    case 'x': return "Dehn twist a" + std::to_string(r.index);
    case 'y': return "Dehn twist b" + std::to_string(r.index);
    case 'z': return "Dehn twist c";
    case 'u': return "Dehn twist d" + std::to_string(r.index);
    case 'v': return "braid twist tau" + std::to_string(r.index);
  }
  return {};
}

/// Artin relators of the family graph followed by the emitted relations.
inline Presentation presentation_of(const SurfaceParams& p, const std::vector<ExtraEdge>& extra = {}) {
  GraphFamily fam = build_graph(p, extra);
  Presentation pres = artin_presentation(fam.graph);
  for (std::size_t i = 0; i < fam.roles.size(); ++i) pres.set_doc(i, generator_doc(fam.roles[i]));
  for (const auto& rel : emit_relators(p, fam)) pres.add_relation(rel.lhs, rel.rhs, rel.tag);
  return pres;
}

inline std::string normalize_type(const std::string& t) {
  if (t == "D3") return "A3";
  if (t == "B1") return "A1";
  return t;
}

struct WellformedReport {
  std::size_t checked = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Classifies every Δ argument of every emitted relation against its expected type.
inline WellformedReport schema_wellformed(const SurfaceParams& p, const std::vector<ExtraEdge>& extra = {}) {
  WellformedReport rep;
  GraphFamily fam = build_graph(p, extra);
  detail::Emitter e{p, {}};
  if (p.flavor == Flavor::pure)
    e.pure_bounded();
  else if (p.closed)
    e.full_closed();
  else
    e.full_bounded();
  for (const auto& rel : e.out) {
    for (const auto* side : {&rel.lhs_terms, &rel.rhs_terms})
      for (const auto& t : *side) {
        bool known = true;
        for (const auto& nm : t.names)
          if (!fam.graph.find(nm)) {
            rep.problems.push_back(rel.tag + ": unknown vertex " + nm);
            known = false;
          }
        if (!known || !t.delta) continue;
        ++rep.checked;
        if (t.names.empty()) {
          if (!t.expected.empty()) rep.problems.push_back(rel.tag + ": empty Delta argument");
          continue;
        }
        auto c = classify_finite_type(fam.graph.induced(fam.graph.indices(t.names)));
        std::string found = c ? to_string(c->type) : "not finite type";
        if (found != normalize_type(t.expected))
          rep.problems.push_back(rel.tag + ": " + format_term(t) + " expected " + normalize_type(t.expected) +
                                 ", found " + found);
      }
  }
  return rep;
}

/// Classification of a parabolic subset of a family graph.
inline Classification classify_parabolic(const GraphFamily& fam, const std::vector<std::string>& subset) {
  CoxeterGraph sub = fam.graph.induced(fam.graph.indices(subset));
  if (!sub.connected()) throw NotFiniteType("parabolic subset is disconnected");
  auto c = classify_finite_type(sub);
  if (!c) throw NotFiniteType("parabolic subset is not of finite type");
  return *c;
}

}  // namespace artin
