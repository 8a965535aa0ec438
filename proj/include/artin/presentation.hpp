#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/error.hpp"
#include "artin/word.hpp"

namespace artin {

struct Relator {
  Word word;
  std::string tag;
  /// LHS = RHS as written in the source, kept for display only.
  std::optional<std::pair<Word, Word>> display;

  friend bool operator==(const Relator&, const Relator&) = default;
};

/// Finitely presented group. Relators are stored freely and cyclically reduced.
class Presentation {
 public:
  std::size_t add_generator(std::string name, std::string doc = {}) {
    std::size_t i = gens_.add(std::move(name));
    docs_.push_back(std::move(doc));
    return i;
  }

  std::size_t add_relator(std::span<const Letter> w, std::string tag = {},
                          std::optional<std::pair<Word, Word>> display = std::nullopt) {
    check_letters(w);
    if (display) {
      check_letters(display->first);
      check_letters(display->second);
    }
    if (tag.empty()) tag = "r" + std::to_string(rels_.size() + 1);
    rels_.push_back({cyclic_reduce(w), std::move(tag), std::move(display)});
    return rels_.size() - 1;
  }

  /// Adds LHS·RHS^{-1} and keeps the pair for display.
  std::size_t add_relation(const Word& lhs, const Word& rhs, std::string tag) {
    return add_relator(concat(lhs, inverse(rhs)), std::move(tag), std::make_pair(lhs, rhs));
  }

  std::size_t generator_count() const { return gens_.size(); }
  std::size_t relator_count() const { return rels_.size(); }
  const Alphabet& alphabet() const { return gens_; }
  const std::string& generator(std::size_t i) const { return gens_.name(i); }
  const std::string& doc(std::size_t i) const { return docs_.at(i); }
  void set_doc(std::size_t i, std::string doc) { docs_.at(i) = std::move(doc); }
  const std::vector<Relator>& relators() const { return rels_; }
  const Relator& relator(std::size_t i) const { return rels_.at(i); }

  std::optional<std::size_t> find_relator(std::string_view tag) const {
    for (std::size_t i = 0; i < rels_.size(); ++i)
      if (rels_[i].tag == tag) return i;
    return std::nullopt;
  }

  std::vector<std::size_t> relators_tagged(std::string_view prefix) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rels_.size(); ++i)
      if (rels_[i].tag == prefix || rels_[i].tag.starts_with(std::string(prefix) + ":")) out.push_back(i);
    return out;
  }

  Word parse(std::string_view text) const { return parse_word(text, gens_); }
  std::string format(std::span<const Letter> w) const { return format_word(w, gens_); }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.gens_ == b.gens_ && a.docs_ == b.docs_ && a.rels_ == b.rels_;
  }

 private:
  void check_letters(std::span<const Letter> w) const {
    for (Letter l : w)
      if (l.gen >= gens_.size()) throw InvalidArgument("relator mentions an undeclared generator");
  }

  Alphabet gens_;
  std::vector<std::string> docs_;
  std::vector<Relator> rels_;
};

/// prod(a, b, m): the alternating positive word a b a ... of length m.
inline Word alternating(std::size_t a, std::size_t b, int m) {
  Word out;
  for (int k = 0; k < m; ++k) out.push_back(pos(k % 2 == 0 ? a : b));
  return out;
}

inline std::string artin_tag(const CoxeterGraph& g, std::size_t i, std::size_t j) {
  return "artin:" + g.name(i) + "," + g.name(j);
}

/// One relator prod(xi,xj,m)·prod(xj,xi,m)^{-1} per pair i < j.
inline Presentation artin_presentation(const CoxeterGraph& g) {
  Presentation p;
  for (std::size_t i = 0; i < g.size(); ++i) p.add_generator(g.name(i));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      int m = g.label(i, j);
      p.add_relation(alternating(i, j, m), alternating(j, i, m), artin_tag(g, i, j));
    }
  return p;
}

/// Data for a presentation of G from 1 -> K -> G -> H -> 1.
struct ExtensionData {
  Presentation kernel;
  Presentation quotient;
  /// Name of the chosen lift of each quotient generator.
  std::vector<std::string> lifts;
  /// For each quotient relator r, a kernel word w_r with r̃ = w_r.
  std::vector<Word> relator_words;
  /// conjugates[x][y] = v(x, y): x̃ y x̃^{-1} as a kernel word.
  std::vector<std::vector<Word>> conjugates;
};

inline Presentation compose_extension(const ExtensionData& d) {
  const std::size_t nh = d.quotient.generator_count(), nk = d.kernel.generator_count();
  if (d.lifts.size() != nh) throw InvalidArgument("one lift name per quotient generator is required");
  if (d.relator_words.size() != d.quotient.relator_count())
    throw InvalidArgument("one kernel word per quotient relator is required");
  if (d.conjugates.size() != nh) throw InvalidArgument("conjugation table has the wrong shape");
  for (const auto& row : d.conjugates)
    if (row.size() != nk) throw InvalidArgument("conjugation table has the wrong shape");
  auto kernel_word = [&](const Word& w) {
    for (Letter l : w)
      if (l.gen >= nk) throw InvalidArgument("kernel word mentions an undeclared generator");
  };

  Presentation g;
  for (std::size_t x = 0; x < nh; ++x) {
    if (d.kernel.alphabet().find(d.lifts[x])) throw InvalidArgument("lift name '" + d.lifts[x] + "' collides with the kernel");
    g.add_generator(d.lifts[x], d.quotient.doc(x));
  }
  for (std::size_t k = 0; k < nk; ++k) g.add_generator(d.kernel.generator(k), d.kernel.doc(k));
  auto shift_kernel = [&](const Word& w) {
    kernel_word(w);
    Word out;
    for (Letter l : w) out.push_back({l.gen + nh, l.inverse});
    return out;
  };

  for (std::size_t r = 0; r < d.quotient.relator_count(); ++r) {
    const Relator& rel = d.quotient.relator(r);
    g.add_relation(rel.word, shift_kernel(d.relator_words[r]), "R1:" + rel.tag);
  }
  for (std::size_t x = 0; x < nh; ++x)
    for (std::size_t y = 0; y < nk; ++y) {
      Word lhs{pos(x), pos(y + nh), neg(x)};
      g.add_relation(lhs, shift_kernel(d.conjugates[x][y]),
                     "R2:" + d.lifts[x] + "," + d.kernel.generator(y));
    }
  for (const Relator& rel : d.kernel.relators()) {
    std::optional<std::pair<Word, Word>> disp;
    if (rel.display) disp = std::make_pair(shift_kernel(rel.display->first), shift_kernel(rel.display->second));
    g.add_relator(shift_kernel(rel.word), "K:" + rel.tag, std::move(disp));
  }
  return g;
}

/// Removes `gen` using relator `rel_index`, in which it must occur exactly once.
inline Presentation tietze_eliminate(const Presentation& p, std::size_t gen, std::size_t rel_index) {
  if (gen >= p.generator_count()) throw InvalidArgument("unknown generator");
  if (rel_index >= p.relator_count()) throw InvalidArgument("unknown relator");
  const Word& r = p.relator(rel_index).word;
  if (occurrences(r, gen) != 1)
    throw InvalidArgument("relator " + p.relator(rel_index).tag + " is not solvable for " + p.generator(gen));
  auto at = std::find_if(r.begin(), r.end(), [gen](Letter l) { return l.gen == gen; });
  Word a(r.begin(), at), b(at + 1, r.end());
  Word value = at->inverse ? concat(b, a) : concat(inverse(a), inverse(b));

  std::vector<std::size_t> renumber(p.generator_count());
  Presentation out;
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    if (i != gen) renumber[i] = out.add_generator(p.generator(i), p.doc(i));
  auto substitute = [&](const Word& w) {
    Word res;
    for (Letter l : w) {
      if (l.gen != gen) {
        res.push_back({renumber[l.gen], l.inverse});
        continue;
      }
      Word v = l.inverse ? inverse(value) : value;
      for (Letter m : v) res.push_back({renumber[m.gen], m.inverse});
    }
    return free_reduce(res);
  };
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (i == rel_index) continue;
    const Relator& rel = p.relator(i);
    std::optional<std::pair<Word, Word>> disp;
    if (rel.display) disp = std::make_pair(substitute(rel.display->first), substitute(rel.display->second));
    out.add_relator(substitute(rel.word), rel.tag, std::move(disp));
  }
  return out;
}

inline Presentation tietze_eliminate(const Presentation& p, std::string_view gen, std::string_view tag) {
  auto r = p.find_relator(tag);
  if (!r) throw InvalidArgument("no relator tagged '" + std::string(tag) + "'");
  return tietze_eliminate(p, p.alphabet().index(gen), *r);
}

namespace detail {

inline long long checked(long long a, long long b, long long q) {
  long long prod = 0, res = 0;
  if (__builtin_mul_overflow(b, q, &prod) || __builtin_sub_overflow(a, prod, &res))
    throw CapExceeded("integer overflow in Smith normal form");
  return res;
}

}  // namespace detail

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries).
inline std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<long long> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        long long q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] = detail::checked(a[i][j], a[t][j], q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        long long q = a[t][j] / a[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] = detail::checked(a[i][j], a[i][t], q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  return diag;
}

/// Torsion divisors greater than 1 in increasing order, then one 0 per free rank.
inline std::vector<long long> abelianization_invariants(const Presentation& p) {
  std::vector<std::vector<long long>> m;
  for (const auto& r : p.relators()) m.push_back(exponent_vector(r.word, p.generator_count()));
  std::vector<long long> diag = smith_diagonal(m);
  std::vector<long long> out;
  for (long long d : diag)
    if (d > 1) out.push_back(d);
  std::sort(out.begin(), out.end());
  out.insert(out.end(), p.generator_count() - diag.size(), 0);
  return out;
}

/// Index of the subgroup generated by `subgroup` (default: the order of the
/// group) by HLT coset enumeration, or nullopt once `limit` cosets are defined.
inline std::optional<std::size_t> coset_enumerate(const Presentation& p, std::size_t limit = 100000,
                                                  const std::vector<Word>& subgroup = {}) {
  const std::size_t cols = 2 * p.generator_count();
  auto col = [](Letter l) { return 2 * l.gen + (l.inverse ? 1 : 0); };
  auto inv = [](std::size_t c) { return c ^ 1U; };
  constexpr long none = -1;
  std::vector<std::vector<long>> table;
  std::vector<long> rep;
  std::size_t defined = 0;
  bool overflow = false;

  auto find = [&](long c) {
    long r = c;
    while (rep[r] != r) r = rep[r];
    while (rep[c] != r) {
      long next = rep[c];
      rep[c] = r;
      c = next;
    }
    return r;
  };
  auto add_coset = [&]() -> long {
    if (defined >= limit) {
      overflow = true;
      return none;
    }
    ++defined;
    table.emplace_back(cols, none);
    rep.push_back(static_cast<long>(rep.size()));
    return static_cast<long>(rep.size()) - 1;
  };
  auto define = [&](long c, std::size_t x) {
    long n = add_coset();
    if (n == none) return;
    table[c][x] = n;
    table[n][inv(x)] = c;
  };
  auto coincidence = [&](long a, long b) {
    std::deque<long> queue;
    auto merge = [&](long k, long l) {
      k = find(k);
      l = find(l);
      if (k == l) return;
      if (l < k) std::swap(k, l);
      rep[l] = k;
      queue.push_back(l);
    };
    merge(a, b);
    while (!queue.empty()) {
      long e = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols; ++x) {
        long f = table[e][x];
        if (f == none) continue;
        if (table[f][inv(x)] == e) table[f][inv(x)] = none;
        long e1 = find(e), f1 = find(f);
        if (table[e1][x] != none)
          merge(f1, table[e1][x]);
        else if (table[f1][inv(x)] != none)
          merge(e1, table[f1][inv(x)]);
        else {
          table[e1][x] = f1;
          table[f1][inv(x)] = e1;
        }
      }
    }
  };
  auto scan_and_fill = [&](long c, const Word& w) {
    if (w.empty()) return;
    long f = c, b = c;
    std::size_t i = 0, j = w.size();
    for (;;) {
      while (i < j && table[f][col(w[i])] != none) f = table[f][col(w[i++])];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table[b][inv(col(w[j - 1]))] != none) b = table[b][inv(col(w[--j]))];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table[f][col(w[i])] = b;
        table[b][inv(col(w[i]))] = f;
        return;
      }
      define(f, col(w[i]));
      if (overflow) return;
    }
  };

  add_coset();
  for (const Word& h : subgroup) scan_and_fill(0, h);
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (overflow) return std::nullopt;
    if (find(static_cast<long>(c)) != static_cast<long>(c)) continue;
    for (const auto& r : p.relators()) {
      scan_and_fill(static_cast<long>(c), r.word);
      if (overflow) return std::nullopt;
      if (find(static_cast<long>(c)) != static_cast<long>(c)) break;
    }
    if (find(static_cast<long>(c)) != static_cast<long>(c)) continue;
    for (std::size_t x = 0; x < cols; ++x)
      if (table[c][x] == none) {
        define(static_cast<long>(c), x);
        if (overflow) return std::nullopt;
      }
  }
  std::size_t live = 0;
  for (std::size_t c = 0; c < table.size(); ++c) live += find(static_cast<long>(c)) == static_cast<long>(c);
  return live;
}

// ---- text formats ----

inline std::string format_text(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) out += (i ? ", " : "") + p.generator(i);
  out += " | ";
  for (std::size_t i = 0; i < p.relator_count(); ++i) out += (i ? ", " : "") + p.format(p.relator(i).word);
  out += " >";
  return out;
}

inline std::string format_machine(const Presentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    out += "gen " + p.generator(i) + "\n";
    if (!p.doc(i).empty()) out += "doc " + p.generator(i) + " " + p.doc(i) + "\n";
  }
  for (const auto& r : p.relators()) {
    out += "rel " + p.format(r.word) + "\n";
    out += "tag " + r.tag + "\n";
    if (r.display) {
      out += "lhs " + p.format(r.display->first) + "\n";
      out += "rhs " + p.format(r.display->second) + "\n";
    }
  }
  return out;
}

inline std::string gap_word(const Presentation& p, std::span<const Letter> w) {
  if (w.empty()) return "One(F)";
  std::string s = format_word(w, p.alphabet());
  std::replace(s.begin(), s.end(), ' ', '*');
  return s;
}

inline std::string format_gap(const Presentation& p) {
  std::string out = "F := FreeGroup(";
  for (std::size_t i = 0; i < p.generator_count(); ++i) out += (i ? ", \"" : "\"") + p.generator(i) + "\"";
  out += ");;\n";
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    out += p.generator(i) + " := F." + std::to_string(i + 1) + ";;\n";
  out += "rels := [";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    const auto& r = p.relator(i);
    out += (i ? ",\n  " : "\n  ") + gap_word(p, r.word);
    out += "  # " + r.tag;
  }
  out += p.relator_count() ? "\n];;\n" : "];;\n";
  out += "G := F / rels;;\n";
  return out;
}

inline Presentation parse_text_presentation(std::string_view text) {
  auto lt = text.find('<'), bar = text.find('|'), gt = text.rfind('>');
  if (lt == std::string_view::npos || bar == std::string_view::npos || gt == std::string_view::npos ||
      !(lt < bar && bar < gt))
    throw ParseError("expected '< generators | relators >'");
  for (char c : text.substr(0, lt))
    if (!std::isspace(static_cast<unsigned char>(c))) throw ParseError("text before '<'");
  for (char c : text.substr(gt + 1))
    if (!std::isspace(static_cast<unsigned char>(c))) throw ParseError("text after '>'");
  auto split = [](std::string_view s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    auto trim = [](std::string& x) {
      auto b = x.find_first_not_of(" \t\r\n");
      auto e = x.find_last_not_of(" \t\r\n");
      x = b == std::string::npos ? "" : x.substr(b, e - b + 1);
    };
    for (auto& x : parts) trim(x);
    if (parts.size() == 1 && parts[0].empty()) parts.clear();
    return parts;
  };
  Presentation p;
  try {
    for (auto& g : split(text.substr(lt + 1, bar - lt - 1))) p.add_generator(g);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  for (auto& r : split(text.substr(bar + 1, gt - bar - 1))) {
    if (r.empty()) throw ParseError("empty relator");
    p.add_relator(p.parse(r));
  }
  return p;
}

inline Presentation parse_machine_presentation(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  struct Pending {
    Word word;
    std::string tag;
    std::optional<Word> lhs, rhs;
  };
  std::vector<Pending> rels;
  auto fail = [&](const std::string& what) {
    throw ParseError("presentation line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto sp = line.find(' ');
    std::string key = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    try {
      if (key == "gen") {
        p.add_generator(rest);
      } else if (key == "doc") {
        auto s2 = rest.find(' ');
        std::string name = rest.substr(0, s2);
        p.set_doc(p.alphabet().index(name), s2 == std::string::npos ? "" : rest.substr(s2 + 1));
      } else if (key == "rel") {
        rels.push_back({p.parse(rest), {}, {}, {}});
      } else if (key == "tag" || key == "lhs" || key == "rhs") {
        if (rels.empty()) fail("'" + key + "' before any 'rel'");
        if (key == "tag") rels.back().tag = rest;
        if (key == "lhs") rels.back().lhs = p.parse(rest);
        if (key == "rhs") rels.back().rhs = p.parse(rest);
      } else {
        fail("unknown record '" + key + "'");
      }
    } catch (const InvalidArgument& e) {
      fail(e.what());
    } catch (const ParseError& e) {
      if (std::string_view(e.what()).starts_with("presentation line")) throw;
      fail(e.what());
    }
  }
  for (auto& r : rels) {
    if (r.lhs.has_value() != r.rhs.has_value()) throw ParseError("relator needs both 'lhs' and 'rhs'");
    std::optional<std::pair<Word, Word>> disp;
    if (r.lhs) disp = std::make_pair(*r.lhs, *r.rhs);
    p.add_relator(r.word, r.tag, std::move(disp));
  }
  return p;
}

/// Accepts either the bracket text format or the machine format.
inline Presentation parse_presentation(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '<') return parse_text_presentation(text);
  return parse_machine_presentation(text);
}

}  // namespace artin
