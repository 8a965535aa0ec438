#pragma once

// Derivation scripts: sequences of elementary moves (relator insertion, free
// cancellation, free insertion) transforming one word into another inside a
// finitely presented group.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <tuple>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artin/coxeter_group.hpp"
#include "artin/error.hpp"
#include "artin/garside.hpp"
#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

struct Step {
  enum class Kind { relator, cancel, insert };

  Kind kind = Kind::cancel;
  std::size_t position = 0;
  std::string tag;
  bool inverse = false;
  std::size_t rotation = 0;
  /// For insert: the pair letter, letter^{-1} is inserted.
  Letter letter;

  static Step relator(std::string tag, std::size_t pos, bool inv = false, std::size_t rot = 0) {
    Step s;
    s.kind = Kind::relator;
    s.tag = std::move(tag);
    s.position = pos;
    s.inverse = inv;
    s.rotation = rot;
    return s;
  }
  static Step cancel(std::size_t pos) {
    Step s;
    s.kind = Kind::cancel;
    s.position = pos;
    return s;
  }
  static Step insert(Letter l, std::size_t pos) {
    Step s;
    s.kind = Kind::insert;
    s.letter = l;
    s.position = pos;
    return s;
  }

  friend bool operator==(const Step&, const Step&) = default;
};

struct DerivationScript {
  Word start;
  std::vector<Step> steps;
  Word end;

  friend bool operator==(const DerivationScript&, const DerivationScript&) = default;
};

/// The word a relator step inserts: rotate_left(r^{±1}, k).
inline Word relator_instance(const Presentation& p, const Step& s) {
  auto i = p.find_relator(s.tag);
  if (!i) throw InvalidArgument("unknown relator '" + s.tag + "'");
  Word r = p.relator(*i).word;
  if (s.inverse) r = inverse(r);
  if (s.rotation >= std::max<std::size_t>(r.size(), 1))
    throw InvalidArgument("rotation " + std::to_string(s.rotation) + " out of range for '" + s.tag + "'");
  return rotate_word(r, s.rotation);
}

/// Applies one step in place; throws InvalidArgument if it is not legal.
inline void apply_step(const Presentation& p, Word& w, const Step& s) {
  switch (s.kind) {
    case Step::Kind::relator: {
      Word r = relator_instance(p, s);
      if (s.position > w.size()) throw InvalidArgument("position past the end of the word");
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(s.position), r.begin(), r.end());
      return;
    }
    case Step::Kind::cancel:
      if (s.position + 1 >= w.size()) throw InvalidArgument("cancel position past the end of the word");
      if (w[s.position] != w[s.position + 1].inverted())
        throw InvalidArgument("letters at " + std::to_string(s.position) + " do not cancel");
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(s.position),
              w.begin() + static_cast<std::ptrdiff_t>(s.position + 2));
      return;
    case Step::Kind::insert:
      if (s.letter.gen >= p.generator_count()) throw InvalidArgument("unknown generator in insert");
      if (s.position > w.size()) throw InvalidArgument("position past the end of the word");
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(s.position), {s.letter, s.letter.inverted()});
      return;
  }
}

struct CheckResult {
  bool ok = false;
  /// Index of the first illegal step, if any.
  std::optional<std::size_t> failed_step;
  std::string message;
  Word final_word;
};

inline CheckResult check_derivation(const Presentation& p, const DerivationScript& s) {
  CheckResult res;
  Word w = s.start;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    try {
      apply_step(p, w, s.steps[i]);
    } catch (const InvalidArgument& e) {
      res.failed_step = i;
      res.message = "step " + std::to_string(i + 1) + ": " + e.what();
      res.final_word = w;
      return res;
    }
  }
  res.final_word = w;
  if (free_reduce(w) != free_reduce(s.end)) {
    res.message = "final word " + p.format(w) + " does not match the claimed end " + p.format(s.end);
    return res;
  }
  res.ok = true;
  return res;
}

// ---- script text format ----

inline std::string format_step(const Presentation& p, const Step& s) {
  switch (s.kind) {
    case Step::Kind::relator: {
      std::string out = "step rel " + s.tag + " at " + std::to_string(s.position);
      if (s.inverse) out += " inv";
      if (s.rotation) out += " rot " + std::to_string(s.rotation);
      return out;
    }
    case Step::Kind::cancel:
      return "step cancel " + std::to_string(s.position);
    case Step::Kind::insert:
      return "step insert " + p.generator(s.letter.gen) + (s.letter.inverse ? "^-1" : "") + " at " +
             std::to_string(s.position);
  }
  return {};
}

inline std::string format_script(const Presentation& p, const DerivationScript& s) {
  std::string out = "start " + p.format(s.start) + "\n";
  for (const auto& st : s.steps) out += format_step(p, st) + "\n";
  out += "end " + p.format(s.end) + "\n";
  return out;
}

inline DerivationScript parse_script(const Presentation& p, std::string_view text) {
  DerivationScript s;
  bool have_start = false, have_end = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("script line " + std::to_string(lineno) + ": " + what);
  };
  auto number = [&](const std::string& t) -> std::size_t {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
      fail("expected a non-negative integer, got '" + t + "'");
    return static_cast<std::size_t>(std::stoull(t));
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto rest = [&](std::size_t from) {
      std::string r;
      for (std::size_t i = from; i < tok.size(); ++i) r += (i > from ? " " : "") + tok[i];
      return r;
    };
    try {
      if (tok[0] == "start") {
        if (have_start) fail("duplicate 'start'");
        s.start = p.parse(rest(1));
        have_start = true;
      } else if (tok[0] == "end") {
        if (have_end) fail("duplicate 'end'");
        s.end = p.parse(rest(1));
        have_end = true;
      } else if (tok[0] == "step") {
        if (!have_start || have_end) fail("'step' outside start/end");
        if (tok.size() < 2) fail("empty step");
        if (tok[1] == "rel") {
          if (tok.size() < 5 || tok[3] != "at") fail("expected 'step rel <tag> at <pos> [inv] [rot k]'");
          Step st = Step::relator(tok[2], number(tok[4]));
          std::size_t i = 5;
          if (i < tok.size() && tok[i] == "inv") {
            st.inverse = true;
            ++i;
          }
          if (i < tok.size() && tok[i] == "rot") {
            if (i + 1 >= tok.size()) fail("missing rotation amount");
            st.rotation = number(tok[i + 1]);
            i += 2;
          }
          if (i != tok.size()) fail("trailing tokens in relator step");
          s.steps.push_back(st);
        } else if (tok[1] == "cancel") {
          if (tok.size() != 3) fail("expected 'step cancel <pos>'");
          s.steps.push_back(Step::cancel(number(tok[2])));
        } else if (tok[1] == "insert") {
          if (tok.size() != 5 || tok[3] != "at") fail("expected 'step insert <gen> at <pos>'");
          Word l = p.parse(tok[2]);
          if (l.size() != 1) fail("insert needs a single letter");
          s.steps.push_back(Step::insert(l[0], number(tok[4])));
        } else {
          fail("unknown step kind '" + tok[1] + "'");
        }
      } else {
        fail("unknown record '" + tok[0] + "'");
      }
    } catch (const ParseError& e) {
      if (std::string_view(e.what()).starts_with("script line")) throw;
      fail(e.what());
    }
  }
  if (!have_start || !have_end) throw ParseError("script needs both 'start' and 'end'");
  return s;
}

// ---- script algebra ----

/// Replays a script and returns the word before every step (and the final word last).
inline std::vector<Word> trace(const Presentation& p, const Word& start, const std::vector<Step>& steps) {
  std::vector<Word> out{start};
  Word w = start;
  for (const auto& s : steps) {
    apply_step(p, w, s);
    out.push_back(w);
  }
  return out;
}

/// Steps taking the script's final word back to its start.
inline std::vector<Step> inverse_steps(const Presentation& p, const Word& start, const std::vector<Step>& steps) {
  std::vector<Word> words = trace(p, start, steps);
  std::vector<Step> out;
  for (std::size_t i = steps.size(); i-- > 0;) {
    const Step& s = steps[i];
    switch (s.kind) {
      case Step::Kind::cancel:
        out.push_back(Step::insert(words[i][s.position], s.position));
        break;
      case Step::Kind::insert:
        out.push_back(Step::cancel(s.position));
        break;
      case Step::Kind::relator: {
        std::size_t len = relator_instance(p, s).size();
        std::size_t rot = len == 0 ? 0 : (len - s.rotation) % len;
        out.push_back(Step::relator(s.tag, s.position + len, !s.inverse, rot));
        for (std::size_t t = 0; t < len; ++t) out.push_back(Step::cancel(s.position + len - 1 - t));
        break;
      }
    }
  }
  return out;
}

/// Steps acting on the inverse word, given steps acting on `start`.
inline std::vector<Step> mirror_steps(const Presentation& p, const Word& start, const std::vector<Step>& steps) {
  std::vector<Word> words = trace(p, start, steps);
  std::vector<Step> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    const std::size_t n = words[i].size();
    switch (s.kind) {
      case Step::Kind::cancel:
        out.push_back(Step::cancel(n - s.position - 2));
        break;
      case Step::Kind::insert:
        out.push_back(Step::insert(s.letter, n - s.position));
        break;
      case Step::Kind::relator: {
        std::size_t len = relator_instance(p, s).size();
        std::size_t rot = len == 0 ? 0 : (len - s.rotation) % len;
        out.push_back(Step::relator(s.tag, n - s.position, !s.inverse, rot));
        break;
      }
    }
  }
  return out;
}

inline std::vector<Step> shift_steps(std::vector<Step> steps, std::size_t offset) {
  for (auto& s : steps) s.position += offset;
  return steps;
}

// ---- construction ----

/// Records steps while applying them to a current word.
class ScriptBuilder {
 public:
  ScriptBuilder(const Presentation& p, Word start) : p_(p), start_(start), w_(std::move(start)) {
    for (std::size_t i = 0; i < p_.relator_count(); ++i) {
      const Relator& r = p_.relator(i);
      for (bool inv : {false, true}) {
        Word base = inv ? inverse(r.word) : r.word;
        for (std::size_t k = 0; k < base.size(); ++k) instances_.emplace(rotate_word(base, k), Step::relator(r.tag, 0, inv, k));
      }
    }
  }

  const Presentation& presentation() const { return p_; }
  const Word& word() const { return w_; }
  const std::vector<Step>& steps() const { return steps_; }

  void step(const Step& s) {
    apply_step(p_, w_, s);
    steps_.push_back(s);
  }
  void steps(const std::vector<Step>& ss) {
    for (const auto& s : ss) step(s);
  }

  const std::map<Word, Step>& instances() const { return instances_; }

  /// Finds the relator instance spelled exactly by `x`, if any.
  std::optional<Step> instance(const Word& x) const {
    auto it = instances_.find(x);
    if (it == instances_.end()) return std::nullopt;
    return it->second;
  }

  /// Cancels adjacent inverse pairs inside [from, to) until none is left there.
  void reduce(std::size_t from = 0, std::size_t to = static_cast<std::size_t>(-1)) {
    to = std::min(to, w_.size());
    std::size_t i = from;
    while (i + 1 < to) {
      if (w_[i] == w_[i + 1].inverted()) {
        step(Step::cancel(i));
        to -= 2;
        if (i > from) --i;
      } else {
        ++i;
      }
    }
  }

  /// Inserts u u^{-1} at pos using free insertions.
  void insert_trivial(std::size_t pos, const Word& u) {
    for (std::size_t k = 0; k < u.size(); ++k) step(Step::insert(u[k], pos + k));
  }

  /// Replaces w[pos, pos+|u|) = u with v, where u^{-1}v spells a relator instance.
  bool replace_by_relator(std::size_t pos, const Word& u, const Word& v) {
    check_at(pos, u);
    auto inst = instance(concat(inverse(u), v));
    if (!inst) return false;
    inst->position = pos + u.size();
    step(*inst);
    for (std::size_t t = 0; t < u.size(); ++t) step(Step::cancel(pos + u.size() - 1 - t));
    return true;
  }

  /// Replaces u by a freely equal word v.
  void replace_free(std::size_t pos, const Word& u, const Word& v) {
    check_at(pos, u);
    if (free_reduce(u) != free_reduce(v)) throw InvalidArgument("words are not freely equal");
    reduce(pos, pos + u.size());
    ScriptBuilder tmp(p_, v);
    tmp.reduce();
    steps(shift_steps(inverse_steps(p_, v, tmp.steps()), pos));
  }

  /// Deletes a relator instance occupying [pos, pos+len).
  void remove_instance(std::size_t pos, std::size_t len) {
    Word x(w_.begin() + static_cast<std::ptrdiff_t>(pos), w_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    auto inst = instance(inverse(x));
    if (!inst) throw InvalidArgument("subword at " + std::to_string(pos) + " is not a relator instance");
    inst->position = pos + len;
    step(*inst);
    for (std::size_t t = 0; t < len; ++t) step(Step::cancel(pos + len - 1 - t));
  }

  /// Deletes a cyclic rotation of lemma^{±1} occupying [pos, pos+len), given
  /// steps taking `lemma` to the empty word.
  void remove_lemma(std::size_t pos, std::size_t len, const Word& lemma, const std::vector<Step>& lemma_steps) {
    Word x(w_.begin() + static_cast<std::ptrdiff_t>(pos), w_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    if (len != lemma.size() || len == 0) throw InvalidArgument("lemma length mismatch");
    for (bool inv : {false, true}) {
      Word base = inv ? inverse(lemma) : lemma;
      for (std::size_t k = 0; k < len; ++k) {
        if (rotate_word(base, k) != x) continue;
        std::vector<Step> ss = inv ? mirror_steps(p_, lemma, lemma_steps) : lemma_steps;
        // x = B A with base = A B and |A| = k; append B B^{-1}, consume A B.
        Word tail(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
        insert_trivial(pos + len, tail);
        apply_at(pos + tail.size(), base, ss);
        reduce(pos, pos + 2 * tail.size());
        return;
      }
    }
    throw InvalidArgument("subword at " + std::to_string(pos) + " is not a rotation of the lemma");
  }

  /// Inlines steps that act on a word starting at `pos`.
  void apply_at(std::size_t pos, const Word& expected, const std::vector<Step>& ss) {
    check_at(pos, expected);
    steps(shift_steps(ss, pos));
  }

  void check_at(std::size_t pos, const Word& u) const {
    if (pos + u.size() > w_.size() || !std::equal(u.begin(), u.end(), w_.begin() + static_cast<std::ptrdiff_t>(pos)))
      throw InvalidArgument("subword mismatch at position " + std::to_string(pos));
  }

  DerivationScript finish() const { return {start_, steps_, w_}; }
  DerivationScript finish(Word end) const { return {start_, steps_, std::move(end)}; }

 private:
  const Presentation& p_;
  Word start_;
  Word w_;
  std::vector<Step> steps_;
  std::map<Word, Step> instances_;
};

/// Word-level Garside machinery inside a finite-type parabolic subgroup whose
/// Artin relators are relators of the ambient presentation.
class ParabolicRewriter {
 public:
  /// `vertices` are ambient generator indices of the presentation; `graph`
  /// is the Coxeter graph on those generators (ambient order).
  ParabolicRewriter(const CoxeterGraph& ambient, std::vector<std::size_t> vertices)
      : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    group_ = std::make_unique<ArtinGroup>(ambient.induced(vertices_));
    local_.assign(ambient.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < vertices_.size(); ++i) local_[vertices_[i]] = i;
    delta_ = to_ambient(group_->delta_word());
  }

  const ArtinGroup& group() const { return *group_; }

  bool contains(std::span<const Letter> w) const {
    return std::all_of(w.begin(), w.end(),
                       [&](Letter l) { return l.gen < local_.size() && local_[l.gen] != static_cast<std::size_t>(-1); });
  }

  Word to_local(std::span<const Letter> w) const {
    Word out;
    for (Letter l : w) out.push_back({local_.at(l.gen), l.inverse});
    return out;
  }
  Word to_ambient(std::span<const Letter> w) const {
    Word out;
    for (Letter l : w) out.push_back({vertices_.at(l.gen), l.inverse});
    return out;
  }

  bool equal(const Word& a, const Word& b) const { return group_->equal(to_local(a), to_local(b)); }

  /// Canonical word of the element: Δ^k then the lex-least word of each simple.
  Word canonical(const Word& w) const { return to_ambient(group_->render(group_->normal_form(to_local(w)))); }

  /// Braid moves turning reduced positive word u (at pos) into v for the
  /// same element: a shortest sequence when the reduced-word graph is small,
  /// otherwise the recursive descent construction.
  void matsumoto(ScriptBuilder& b, std::size_t pos, Word u, Word v) const {
    std::size_t lead = 0;
    while (lead < u.size() && lead < v.size() && u[lead] == v[lead]) ++lead;
    std::size_t tail = 0;
    while (tail + lead < u.size() && tail + lead < v.size() && u[u.size() - 1 - tail] == v[v.size() - 1 - tail]) ++tail;
    u = Word(u.begin() + static_cast<std::ptrdiff_t>(lead), u.end() - static_cast<std::ptrdiff_t>(tail));
    v = Word(v.begin() + static_cast<std::ptrdiff_t>(lead), v.end() - static_cast<std::ptrdiff_t>(tail));
    pos += lead;
    if (u == v) return;
    if (auto moves = braid_path(u, v)) {
      for (const auto& [at, from, to] : *moves) b.replace_by_relator(pos + at, from, to) || fail_braid();
      return;
    }
    descend(b, pos, u, v);
  }

  /// Rewrites the subword u at pos into the canonical word of its element.
  void canonicalize(ScriptBuilder& b, std::size_t pos, const Word& u) const {
    b.check_at(pos, u);
    const std::size_t n = delta_.size();
    Word cur = u;
    // Split each negative run into chunks S^{-1} with S simple, then
    // S^{-1} -> Δ^{-1} Q where Q S spells Δ.
    for (std::size_t i = 0; i < cur.size();) {
      if (!cur[i].inverse) {
        ++i;
        continue;
      }
      CoxeterElement e = group_->coxeter().identity();
      std::size_t j = i;
      while (j < cur.size() && cur[j].inverse && !e.is_left_descent(local_[cur[j].gen])) {
        e = e.generator_times(local_[cur[j].gen]);
        ++j;
      }
      Word chunk(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.begin() + static_cast<std::ptrdiff_t>(j));
      Word simple = inverse(chunk);
      Word q = to_ambient((group_->longest() * e.inverse()).positive_word());
      std::size_t at = pos + i;
      b.insert_trivial(at, inverse(delta_));
      matsumoto(b, at + n, delta_, concat(q, simple));
      std::size_t mid = at + n + q.size() + simple.size();
      for (std::size_t t = 0; t < simple.size(); ++t) b.step(Step::cancel(mid - 1 - t));
      Word repl = concat(inverse(delta_), q);
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.begin() + static_cast<std::ptrdiff_t>(j));
      cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
      i += repl.size();
    }
    b.check_at(pos, cur);
    // Move every Δ^{-1} to the front: P Δ^{-1} -> Δ^{-1} τ(P).
    Word dinv = inverse(delta_);
    std::size_t front = 0;
    for (;;) {
      std::size_t k = front;
      while (k + n <= cur.size() && std::equal(dinv.begin(), dinv.end(), cur.begin() + static_cast<std::ptrdiff_t>(k))) k += n;
      front = k;
      std::size_t next = find_delta_inverse(cur, front);
      if (next == cur.size()) break;
      Word block(cur.begin() + static_cast<std::ptrdiff_t>(front), cur.begin() + static_cast<std::ptrdiff_t>(next));
      std::size_t at = pos + front;
      b.insert_trivial(at, dinv);
      Word shifted;
      for (std::size_t t = 0; t < block.size(); ++t) {
        Letter a = block[t];
        Letter ta = tau(a);
        Word bw = to_ambient(group_->longest().times_generator(local_[a.gen]).positive_word());
        matsumoto(b, at + n + t, delta_, concat(Word{ta}, bw));
        matsumoto(b, at + n + t + 1, concat(bw, Word{a}), delta_);
        shifted.push_back(ta);
      }
      std::size_t mid = at + n + block.size() + n;
      for (std::size_t t = 0; t < n; ++t) b.step(Step::cancel(mid - 1 - t));
      Word repl = concat(dinv, shifted);
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(front), cur.begin() + static_cast<std::ptrdiff_t>(next + n));
      cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(front), repl.begin(), repl.end());
      front += n;
    }
    b.check_at(pos, cur);
    std::size_t negatives = front / n;
    Word positive(cur.begin() + static_cast<std::ptrdiff_t>(front), cur.end());
    normalize_positive(b, pos + front, positive);
    Word nf = to_ambient(positive_canonical(positive));
    std::size_t dpos = 0;
    while (dpos + n <= nf.size() && std::equal(delta_.begin(), delta_.end(), nf.begin() + static_cast<std::ptrdiff_t>(dpos))) dpos += n;
    std::size_t cancel = std::min(negatives, dpos / n);
    for (std::size_t c = 0; c < cancel; ++c) {
      std::size_t mid = pos + front;
      for (std::size_t t = 0; t < n; ++t) b.step(Step::cancel(mid - 1 - t));
      front -= n;
    }
    b.check_at(pos, canonical(u));
  }

  /// Rewrites u at pos into v, where u = v in the parabolic subgroup.
  void rewrite(ScriptBuilder& b, std::size_t pos, const Word& u, const Word& v) const {
    if (u == v) return;
    if (free_reduce(u) == free_reduce(v)) {
      b.replace_free(pos, u, v);
      return;
    }
    if (!equal(u, v)) throw InvalidArgument("words are not equal in the parabolic subgroup");
    if (search_rewrite(b, pos, u, v)) return;
    ScriptBuilder tmp(b.presentation(), v);
    canonicalize(tmp, 0, v);
    canonicalize(b, pos, u);
    b.steps(shift_steps(inverse_steps(b.presentation(), v, tmp.steps()), pos));
  }

  /// Meet-in-the-middle search between u and v whose moves replace a
  /// subword P by Q where P Q^{-1} is a relator instance of the parabolic,
  /// each followed by free reduction. Returns false when nothing is found
  /// within `radius` moves per side.
  bool search_rewrite(ScriptBuilder& b, std::size_t pos, const Word& u, const Word& v, std::size_t radius = 4,
                      std::size_t cap = 60000) const {
    struct Move {
      std::size_t at;
      std::size_t len;
      Word q;
    };
    std::map<Word, std::set<Word>> pat;
    std::size_t maxp = 0;
    for (const auto& [x, st] : b.instances()) {
      if (!contains(x)) continue;
      for (std::size_t k = 1; k <= x.size(); ++k) {
        pat[Word(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k))].insert(
            inverse(Word(x.begin() + static_cast<std::ptrdiff_t>(k), x.end())));
        maxp = std::max(maxp, k);
      }
    }
    const Word a = free_reduce(u), c = free_reduce(v);
    const std::size_t maxlen = std::max(a.size(), c.size()) + 4;
    using Parents = std::map<Word, std::pair<Word, Move>>;
    Parents pa, pc;
    pa.emplace(a, std::make_pair(Word{}, Move{}));
    pc.emplace(c, std::make_pair(Word{}, Move{}));
    std::vector<Word> fa{a}, fc{c};
    std::optional<Word> meet;
    if (a == c) meet = a;
    auto grow = [&](std::vector<Word>& frontier, Parents& mine, const Parents& other) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        for (std::size_t i = 0; i < w.size() && !meet; ++i) {
          for (std::size_t l = 1; l <= maxp && i + l <= w.size() && !meet; ++l) {
            auto it = pat.find(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + l)));
            if (it == pat.end()) continue;
            for (const Word& q : it->second) {
              Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
              nw.insert(nw.end(), q.begin(), q.end());
              nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i + l), w.end());
              nw = free_reduce(nw);
              if (nw.size() > maxlen) continue;
              if (!mine.emplace(nw, std::make_pair(w, Move{i, l, q})).second) continue;
              if (other.count(nw)) {
                meet = nw;
                break;
              }
              next.push_back(std::move(nw));
            }
          }
        }
        if (meet) break;
      }
      frontier = std::move(next);
    };
    for (std::size_t level = 0; level < 2 * radius && !meet; ++level) {
      if (pa.size() + pc.size() > cap) break;
      bool left = fa.size() <= fc.size();
      if (left ? fa.empty() : fc.empty()) break;
      if (left)
        grow(fa, pa, pc);
      else
        grow(fc, pc, pa);
    }
    if (!meet) return false;
    auto path = [&](const Parents& par) {
      std::vector<Move> moves;
      for (Word w = *meet;;) {
        const auto& [prev, mv] = par.at(w);
        if (mv.len == 0) break;
        moves.push_back(mv);
        w = prev;
      }
      std::reverse(moves.begin(), moves.end());
      return moves;
    };
    auto play = [&](ScriptBuilder& sb, std::size_t at, Word w, const std::vector<Move>& moves) {
      for (const Move& mv : moves) {
        Word p(w.begin() + static_cast<std::ptrdiff_t>(mv.at), w.begin() + static_cast<std::ptrdiff_t>(mv.at + mv.len));
        if (!sb.replace_by_relator(at + mv.at, p, mv.q)) throw Error("search move is not a relator instance");
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(mv.at), w.begin() + static_cast<std::ptrdiff_t>(mv.at + mv.len));
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(mv.at), mv.q.begin(), mv.q.end());
        sb.reduce(at, at + w.size());
        w = free_reduce(w);
      }
    };
    b.reduce(pos, pos + u.size());
    play(b, pos, a, path(pa));
    ScriptBuilder tmp(b.presentation(), c);
    play(tmp, 0, c, path(pc));
    b.steps(shift_steps(inverse_steps(b.presentation(), c, tmp.steps()), pos));
    b.replace_free(pos, c, v);
    return true;
  }

 private:
  using BraidMove = std::tuple<std::size_t, Word, Word>;

  /// Breadth-first search over braid moves; nullopt past the state cap.
  std::optional<std::vector<BraidMove>> braid_path(const Word& u, const Word& v, std::size_t cap = 50000) const {
    auto key = std::make_pair(u, v);
    if (auto it = braid_cache_.find(key); it != braid_cache_.end()) return it->second;
    std::map<Word, std::pair<Word, BraidMove>> parent{{u, {}}};
    std::deque<Word> queue{u};
    std::optional<std::vector<BraidMove>> out;
    while (!queue.empty() && parent.size() < cap) {
      Word w = std::move(queue.front());
      queue.pop_front();
      if (w == v) {
        std::vector<BraidMove> moves;
        for (Word x = v; x != u;) {
          const auto& [prev, mv] = parent.at(x);
          moves.push_back(mv);
          x = prev;
        }
        std::reverse(moves.begin(), moves.end());
        out = std::move(moves);
        break;
      }
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        std::size_t s = w[i].gen, t = w[i + 1].gen;
        if (s == t) continue;
        int m = group_->graph().label(local_[s], local_[t]);
        if (i + static_cast<std::size_t>(m) > w.size()) continue;
        Word st = alternating(s, t, m);
        if (!std::equal(st.begin(), st.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) continue;
        Word ts = alternating(t, s, m);
        Word nw = w;
        std::copy(ts.begin(), ts.end(), nw.begin() + static_cast<std::ptrdiff_t>(i));
        if (parent.emplace(nw, std::make_pair(w, BraidMove{i, st, ts})).second) queue.push_back(std::move(nw));
      }
    }
    braid_cache_.emplace(key, out);
    return out;
  }

  void descend(ScriptBuilder& b, std::size_t pos, Word u, const Word& v) const {
    if (u == v) return;
    if (u.size() != v.size() || u.empty()) throw InvalidArgument("words are not reduced words of one element");
    if (u[0] == v[0]) {
      descend(b, pos + 1, Word(u.begin() + 1, u.end()), Word(v.begin() + 1, v.end()));
      return;
    }
    std::size_t s = local_[u[0].gen], t = local_[v[0].gen];
    int m = group_->graph().label(s, t);
    Word st = alternating(u[0].gen, v[0].gen, m), ts = alternating(v[0].gen, u[0].gen, m);
    CoxeterElement rest = element(st).inverse() * element(u);
    Word c = to_ambient(rest.positive_word());
    descend(b, pos + 1, Word(u.begin() + 1, u.end()), concat(Word(st.begin() + 1, st.end()), c));
    b.replace_by_relator(pos, st, ts) || fail_braid();
    descend(b, pos + 1, concat(Word(ts.begin() + 1, ts.end()), c), Word(v.begin() + 1, v.end()));
  }

  static bool fail_braid() { throw Error("braid relator missing from the presentation"); }

  CoxeterElement element(const Word& positive) const {
    std::vector<std::size_t> idx;
    for (Letter l : positive) idx.push_back(local_[l.gen]);
    return group_->coxeter().element(idx);
  }

  Letter tau(Letter a) const { return {vertices_[group_->tau(local_[a.gen])], a.inverse}; }

  std::size_t find_delta_inverse(const Word& w, std::size_t from) const {
    Word dinv = inverse(delta_);
    for (std::size_t k = from; k + dinv.size() <= w.size(); ++k)
      if (std::equal(dinv.begin(), dinv.end(), w.begin() + static_cast<std::ptrdiff_t>(k))) return k;
    return w.size();
  }

  Word positive_canonical(const Word& positive) const {
    return group_->render(group_->normal_form(to_local(positive)));
  }

  /// Left-greedy normalization of a positive word by braid moves only.
  void normalize_positive(ScriptBuilder& b, std::size_t pos, const Word& positive) const {
    const ArtinGroup& g = *group_;
    const CoxeterElement& w0 = g.longest();
    std::vector<CoxeterElement> f;
    auto word_of = [&](const CoxeterElement& e) { return to_ambient(e.positive_word()); };
    auto offset = [&](std::size_t i) {
      std::size_t o = pos;
      for (std::size_t k = 0; k < i; ++k) o += f[k].length();
      return o;
    };
    for (Letter l : positive) {
      f.push_back(g.coxeter().generator(local_[l.gen]));
      for (std::size_t i = f.size() - 1; i-- > 0;) {
        CoxeterElement t = weak_order_gcd(f[i].inverse() * w0, f[i + 1]);
        if (t.is_identity()) break;
        CoxeterElement u2 = f[i] * t, v2 = t.inverse() * f[i + 1];
        std::size_t o = offset(i);
        std::size_t ul = f[i].length();
        matsumoto(b, o + ul, word_of(f[i + 1]), concat(word_of(t), word_of(v2)));
        matsumoto(b, o, concat(word_of(f[i]), word_of(t)), word_of(u2));
        f[i] = u2;
        f[i + 1] = v2;
      }
      std::erase_if(f, [](const CoxeterElement& e) { return e.is_identity(); });
    }
    Word cur;
    for (const auto& e : f) cur = concat(cur, word_of(e));
    b.check_at(pos, cur);
    if (cur != to_ambient(positive_canonical(positive)))
      throw Error("positive normalization did not reach the canonical word");
  }

  std::vector<std::size_t> vertices_;
  std::vector<std::size_t> local_;
  std::unique_ptr<ArtinGroup> group_;
  Word delta_;
  mutable std::map<std::pair<Word, Word>, std::optional<std::vector<BraidMove>>> braid_cache_;
};

/// Best-first search over relator insertions (each followed by free
/// reduction) for a script taking w to the empty word. At most `depth`
/// relator insertions; nullopt means inconclusive.
inline std::optional<DerivationScript> bounded_search(const Presentation& p, const Word& w, std::size_t depth = 12,
                                                      std::size_t state_cap = 20000) {
  struct Node {
    Word word;
    std::vector<Step> steps;
    std::size_t inserted = 0;
  };
  ScriptBuilder root(p, w);
  root.reduce();
  if (root.word().empty()) return root.finish(Word{});
  std::vector<Word> instances;
  std::vector<Step> instance_steps;
  for (const auto& r : p.relators())
    for (bool inv : {false, true}) {
      Word base = inv ? inverse(r.word) : r.word;
      for (std::size_t k = 0; k < base.size(); ++k) {
        instances.push_back(rotate_word(base, k));
        instance_steps.push_back(Step::relator(r.tag, 0, inv, k));
      }
    }
  auto cmp = [](const std::shared_ptr<Node>& a, const std::shared_ptr<Node>& b) {
    if (a->word.size() != b->word.size()) return a->word.size() > b->word.size();
    return a->inserted > b->inserted;
  };
  std::priority_queue<std::shared_ptr<Node>, std::vector<std::shared_ptr<Node>>, decltype(cmp)> open(cmp);
  std::set<Word> seen{root.word()};
  open.push(std::make_shared<Node>(Node{root.word(), root.steps(), 0}));
  std::size_t expanded = 0;
  while (!open.empty() && expanded < state_cap) {
    auto node = open.top();
    open.pop();
    ++expanded;
    if (node->inserted >= depth) continue;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      for (std::size_t pos = 0; pos <= node->word.size(); ++pos) {
        Word cand = node->word;
        cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(pos), instances[i].begin(), instances[i].end());
        if (free_reduce(cand).size() >= node->word.size() + instances[i].size()) continue;
        ScriptBuilder b(p, node->word);
        Step st = instance_steps[i];
        st.position = pos;
        b.step(st);
        b.reduce();
        if (!seen.insert(b.word()).second) continue;
        std::vector<Step> steps = node->steps;
        steps.insert(steps.end(), b.steps().begin(), b.steps().end());
        if (b.word().empty()) return DerivationScript{w, steps, Word{}};
        open.push(std::make_shared<Node>(Node{b.word(), std::move(steps), node->inserted + 1}));
      }
    }
  }
  return std::nullopt;
}

}  // namespace artin
