#pragma once

// Derivation scripts for the three commutation identities on the four-leaf
// star (y joined to x1..x4), in the quotient of its Artin group by one extra
// commutation relator tagged "H". Scripts are produced by following a fixed
// chain of intermediate words and filling each link with elementary moves
// inside finite-type parabolic windows.

#include <array>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "artin/derivation.hpp"
#include "artin/garside.hpp"
#include "artin/presentation.hpp"

namespace artin {

inline CoxeterGraph star4_graph() {
  CoxeterGraph g;
  for (const char* v : {"x1", "x2", "x3", "x4", "y"}) g.add_vertex(v);
  for (const char* v : {"x1", "x2", "x3", "x4"}) g.add_edge(v, "y", 3);
  return g;
}

/// Aligns two words equal in A(Γ) as a sequence of windows, each living in a
/// finite-type parabolic subgroup, and rewrites window by window.
class WindowPlanner {
 public:
  WindowPlanner(const CoxeterGraph& g, std::size_t max_window = 16)
      : g_(g), w_(g), max_window_(max_window) {}

  /// Rewrites the builder's current word into `to`; throws Error if no
  /// window decomposition exists.
  void advance(ScriptBuilder& b, const Word& to) {
    const Word a = b.word();
    if (a == to) return;
    const std::size_t n = a.size(), m = to.size();
    auto ranges = [&](const Word& w) {
      std::vector<std::vector<CoxeterElement>> r(w.size() + 1);
      for (std::size_t i = 0; i <= w.size(); ++i) {
        CoxeterElement e = w_.identity();
        r[i].push_back(e);
        for (std::size_t k = i; k < w.size() && k - i < max_window_; ++k) {
          e = e.times_generator(w[k].gen);
          r[i].push_back(e);
        }
      }
      return r;
    };
    auto ra = ranges(a), rc = ranges(to);
    auto sums = [](const Word& w) {
      std::vector<long> s{0};
      for (Letter l : w) s.push_back(s.back() + (l.inverse ? -1 : 1));
      return s;
    };
    auto sa = sums(a), sc = sums(to);

    constexpr long inf = std::numeric_limits<long>::max() / 4;
    std::vector<std::vector<long>> best(n + 1, std::vector<long>(m + 1, inf));
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> from(n + 1, std::vector<std::pair<std::size_t, std::size_t>>(m + 1));
    best[0][0] = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= m; ++j) {
        if (best[i][j] >= inf) continue;
        for (std::size_t li = 0; li <= max_window_ && i + li <= n; ++li) {
          for (std::size_t lj = 0; lj <= max_window_ && j + lj <= m; ++lj) {
            if (li == 0 && lj == 0) continue;
            if (sa[i + li] - sa[i] != sc[j + lj] - sc[j]) continue;
            if (!(ra[i][li] == rc[j][lj])) continue;
            Word u(a.begin() + static_cast<std::ptrdiff_t>(i), a.begin() + static_cast<std::ptrdiff_t>(i + li));
            Word v(to.begin() + static_cast<std::ptrdiff_t>(j), to.begin() + static_cast<std::ptrdiff_t>(j + lj));
            long c = cost(u, v);
            if (c >= inf) continue;
            if (best[i][j] + c < best[i + li][j + lj]) {
              best[i + li][j + lj] = best[i][j] + c;
              from[i + li][j + lj] = {i, j};
            }
          }
        }
      }
    }
    if (best[n][m] >= inf)
      throw Error("no finite-type window decomposition between " + b.presentation().format(a) + " and " +
                  b.presentation().format(to));
    std::vector<std::pair<std::size_t, std::size_t>> cuts{{n, m}};
    while (cuts.back() != std::pair<std::size_t, std::size_t>{0, 0}) cuts.push_back(from[cuts.back().first][cuts.back().second]);
    std::reverse(cuts.begin(), cuts.end());
    std::size_t offset = 0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      auto [i0, j0] = cuts[k];
      auto [i1, j1] = cuts[k + 1];
      Word u(a.begin() + static_cast<std::ptrdiff_t>(i0), a.begin() + static_cast<std::ptrdiff_t>(i1));
      Word v(to.begin() + static_cast<std::ptrdiff_t>(j0), to.begin() + static_cast<std::ptrdiff_t>(j1));
      rewriter(support(concat(u, v))).rewrite(b, offset, u, v);
      offset += v.size();
    }
    b.check_at(0, to);
  }

 private:
  long cost(const Word& u, const Word& v) {
    constexpr long inf = std::numeric_limits<long>::max() / 4;
    if (u == v) return 0;
    if (free_reduce(u) == free_reduce(v)) return 1;
    std::vector<std::size_t> supp = support(concat(u, v));
    if (!finite(supp)) return inf;
    auto key = std::make_pair(u, v);
    auto it = equal_.find(key);
    bool eq = it != equal_.end() ? it->second : (equal_[key] = rewriter(supp).equal(u, v));
    if (!eq) return inf;
    return 10 + static_cast<long>(u.size() + v.size());
  }

  static std::uint64_t mask(const std::vector<std::size_t>& s) {
    std::uint64_t b = 0;
    for (std::size_t i : s) b |= std::uint64_t{1} << i;
    return b;
  }

  bool finite(const std::vector<std::size_t>& s) {
    auto [it, fresh] = finite_.try_emplace(mask(s), false);
    if (fresh) it->second = is_finite_type(g_.induced(s));
    return it->second;
  }

  const ParabolicRewriter& rewriter(const std::vector<std::size_t>& s) {
    auto& slot = rewriters_[mask(s)];
    if (!slot) slot = std::make_unique<ParabolicRewriter>(g_, s);
    return *slot;
  }

  const CoxeterGraph& g_;
  CoxeterGroup w_;
  std::size_t max_window_;
  std::map<std::uint64_t, bool> finite_;
  std::map<std::uint64_t, std::unique_ptr<ParabolicRewriter>> rewriters_;
  std::map<std::pair<Word, Word>, bool> equal_;
};

/// The quotient group and the chains of intermediate words for its three
/// commutation identities.
class CommutationLemma {
 public:
  CommutationLemma() : graph_(star4_graph()), p_(artin_presentation(graph_)) {
    d13_ = delta_word(graph_, std::vector<std::string>{"x1", "x3", "y"});
    d24_ = delta_word(graph_, std::vector<std::string>{"x2", "x4", "y"});
    p_.add_relation(w("x4 D13' x2 D13"), w("D13' x2 D13 x4"), "H");
  }

  const CoxeterGraph& graph() const { return graph_; }
  const Presentation& presentation() const { return p_; }

  /// Sides of identity k (1, 2 or 3).
  std::pair<Word, Word> identity(int k) const {
    switch (k) {
      case 1: return {w("x3 D24' x1 D24"), w("D24' x1 D24 x3")};
      case 2: return {w("x2 D13' x4 D13"), w("D13' x4 D13 x2")};
      case 3: return {w("x1 D24' x3 D24"), w("D24' x3 D24 x1")};
      default: throw InvalidArgument("identity index must be 1, 2 or 3");
    }
  }

  /// LHS·RHS^{-1} of identity k.
  Word commutator(int k) const {
    auto [l, r] = identity(k);
    return concat(l, inverse(r));
  }

  /// Intermediate words for identity 1, ending in U^{-1}·ρ·U with ρ a
  /// rotation of H^{-1}.
  std::vector<Word> chain() const {
    return {
        commutator(1),
        w("x3 y^-1 x2^-1 x4^-1 y^-1 x1 y x2 x4 y x3^-1 y^-1 x2^-1 x4^-1 y^-1 x1^-1 y x2 x4 y"),
        w("y^-1 x3^-1 y x3 x2^-1 x4^-1 x1 y x1^-1 x2 x4 x3^-1 y^-1 x3 x2^-1 x4^-1 x1 y^-1 x1^-1 x2 x4 y"),
        w("y^-1 x2^-1 x3^-1 x2 y x2^-1 x1 x3 x4^-1 y x4 x1^-1 x3^-1 x2 y^-1 x2^-1 x1 x3 x4^-1 y^-1 x4 x1^-1 "
          "x3^-1 x3 x2 y"),
        w("y^-1 x2^-1 x3^-1 y^-1 x2 y x1 x3 y x4 y^-1 x1^-1 x3^-1 y^-1 x2^-1 y x1 x3 y x4^-1 y^-1 x1^-1 x3^-1 "
          "x3 x2 y"),
        w("y^-1 x2^-1 x3^-1 y^-1 x2 D13 x4 D13' x2^-1 D13 x4^-1 D13' y x3 x2 y"),
    };
  }

  struct Derived {
    /// Steps taking commutator(k) to the empty word.
    DerivationScript to_identity;
    /// Script from LHS to RHS with notes marking the chain.
    DerivationScript script;
    std::vector<std::pair<std::size_t, std::string>> notes;
  };

  /// Derivations for all three identities (the second reuses the third).
  std::array<Derived, 3> derive() const {
    WindowPlanner planner(graph_);
    std::array<Derived, 3> out;
    const std::vector<Word> base = chain();
    const Word rho = w("x2 D13 x4 D13' x2^-1 D13 x4^-1 D13'");
    const Word rho3 = w("x3 D24 x1 D24' x3^-1 D24 x1^-1 D24'");

    auto run = [&](int k, const std::vector<Word>& waypoints, const Word& core, const std::vector<Step>* lemma) {
      Derived d;
      ScriptBuilder b(p_, commutator(k));
      for (std::size_t i = 0; i < waypoints.size(); ++i) {
        d.notes.emplace_back(b.steps().size(), "reach " + p_.format(waypoints[i]));
        planner.advance(b, waypoints[i]);
      }
      // Final waypoint is U^{-1} core U with |U| = 4.
      d.notes.emplace_back(b.steps().size(), "remove the conjugated relator and cancel");
      if (lemma)
        b.remove_lemma(4, core.size(), commutator(3), *lemma);
      else
        b.remove_instance(4, core.size());
      b.reduce();
      if (!b.word().empty()) throw Error("chain does not end in the empty word");
      d.to_identity = b.finish(Word{});
      d.script = wrap(k, d.to_identity, d.notes);
      return d;
    };

    out[0] = run(1, base, rho, nullptr);

    std::vector<Word> chain3;
    for (const Word& x : base) chain3.push_back(relabel(x, swap13()));
    chain3.push_back(concat(relabel(w("y^-1 x2^-1 x3^-1 y^-1"), swap13()),
                            concat(rho, relabel(w("y x3 x2 y"), swap13()))));
    out[2] = run(3, chain3, rho, nullptr);

    std::vector<Word> chain2{commutator(2)};
    for (const Word& x : base) chain2.push_back(relabel(x, cycle()));
    chain2.push_back(concat(relabel(w("y^-1 x2^-1 x3^-1 y^-1"), cycle()),
                            concat(rho3, relabel(w("y x3 x2 y"), cycle()))));
    out[1] = run(2, chain2, rho3, &out[2].to_identity.steps);
    return out;
  }

 private:
  /// x1 <-> x3.
  static std::vector<std::size_t> swap13() { return {2, 1, 0, 3, 4}; }
  /// x1 -> x4, x2 -> x3, x3 -> x2, x4 -> x1.
  static std::vector<std::size_t> cycle() { return {3, 2, 1, 0, 4}; }

  /// Word from text where D13/D24 stand for the Δ words and a trailing '
  /// inverts them.
  Word w(std::string_view text) const {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t j = text.find(' ', i);
      if (j == std::string_view::npos) j = text.size();
      std::string_view tok = text.substr(i, j - i);
      i = j + 1;
      if (tok.empty()) continue;
      if (tok.starts_with("D13") || tok.starts_with("D24")) {
        const Word& d = tok.starts_with("D13") ? d13_ : d24_;
        Word x = tok.ends_with("'") ? inverse(d) : d;
        out.insert(out.end(), x.begin(), x.end());
      } else {
        Word x = p_.parse(tok);
        out.insert(out.end(), x.begin(), x.end());
      }
    }
    return out;
  }

  /// LHS -> LHS·RHS^{-1}·RHS -> RHS.
  DerivationScript wrap(int k, const DerivationScript& core, std::vector<std::pair<std::size_t, std::string>>& notes) const {
    auto [l, r] = identity(k);
    ScriptBuilder b(p_, l);
    b.insert_trivial(l.size(), inverse(r));
    std::size_t shift = b.steps().size();
    for (auto& n : notes) n.first += shift;
    notes.insert(notes.begin(), {0, "append RHS^-1 RHS"});
    b.apply_at(0, core.start, core.steps);
    if (b.word() != r) throw Error("wrapped script does not end in the right-hand side");
    return b.finish(r);
  }

  CoxeterGraph graph_;
  Presentation p_;
  Word d13_, d24_;
};

/// Script text with '#' notes before the marked steps.
inline std::string format_annotated(const Presentation& p, const DerivationScript& s,
                                    const std::vector<std::pair<std::size_t, std::string>>& notes) {
  std::string out = "start " + p.format(s.start) + "\n";
  std::size_t k = 0;
  for (std::size_t i = 0; i <= s.steps.size(); ++i) {
    while (k < notes.size() && notes[k].first == i) out += "# " + notes[k++].second + "\n";
    if (i < s.steps.size()) out += format_step(p, s.steps[i]) + "\n";
  }
  out += "end " + p.format(s.end) + "\n";
  return out;
}

}  // namespace artin
