#pragma once

// Free-group words over an indexed alphabet, plus the text grammar shared by
// every module: whitespace separated syllables `name`, `name^k`, `name^-k`,
// parenthesised groups `( ... )^k`, and `1` for the empty word.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artin/error.hpp"

namespace artin {

struct Letter {
  std::size_t gen = 0;
  bool inverse = false;

  constexpr Letter inverted() const { return {gen, !inverse}; }
  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

inline Letter pos(std::size_t g) { return {g, false}; }
inline Letter neg(std::size_t g) { return {g, true}; }

inline Word inverse(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

inline Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Freely reduces with a single stack pass.
inline Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverted())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

/// Free reduction followed by removal of mutually inverse first/last letters.
inline Word cyclic_reduce(std::span<const Letter> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
              r.begin() + static_cast<std::ptrdiff_t>(hi));
}

inline bool is_freely_reduced(std::span<const Letter> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1].inverted()) return false;
  return true;
}

inline bool is_cyclically_reduced(std::span<const Letter> w) {
  return is_freely_reduced(w) && (w.size() < 2 || w.front() != w.back().inverted());
}

/// w^n as a plain (unreduced) repetition; negative n repeats the inverse.
inline Word power(std::span<const Letter> w, long n) {
  Word unit = n < 0 ? inverse(w) : Word(w.begin(), w.end());
  Word out;
  const auto times = static_cast<std::size_t>(n < 0 ? -n : n);
  out.reserve(unit.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

/// Left rotation by k letters.
inline Word rotate_word(std::span<const Letter> w, std::size_t k) {
  Word out(w.begin(), w.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return out;
}

inline std::size_t occurrences(std::span<const Letter> w, std::size_t gen) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [gen](Letter l) { return l.gen == gen; }));
}

/// Exponent sum of each generator; the row of the relation matrix.
inline std::vector<long long> exponent_vector(std::span<const Letter> w, std::size_t rank) {
  std::vector<long long> v(rank, 0);
  for (Letter l : w) v.at(l.gen) += l.inverse ? -1 : 1;
  return v;
}

/// Renames every generator index through `map`.
inline Word relabel(std::span<const Letter> w, std::span<const std::size_t> map) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back({map[l.gen], l.inverse});
  return out;
}

inline bool valid_name(std::string_view name) {
  if (name.empty() || name == "1") return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

/// Ordered list of generator names with reverse lookup.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) {
    for (auto& n : names) add(std::move(n));
  }

  std::size_t add(std::string name) {
    if (!valid_name(name)) throw InvalidArgument("invalid generator name '" + name + "'");
    if (index_.contains(name)) throw InvalidArgument("duplicate generator name '" + name + "'");
    index_.emplace(name, names_.size());
    names_.push_back(std::move(name));
    return names_.size() - 1;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw InvalidArgument("unknown generator '" + std::string(name) + "'");
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }

  Word sequence() {
    Word out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      Word item = atom();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        item = power(item, exponent());
      }
      out.insert(out.end(), item.begin(), item.end());
    }
  }

  long exponent() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits[0] == '+') digits.remove_prefix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) fail("bad exponent");
    return value;
  }

  Word atom() {
    if (text_[pos_] == '(') {
      ++pos_;
      Word inner = sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')
        ++pos_;
      else
        break;
    }
    if (start == pos_) fail("expected a generator name");
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "1") return {};
    auto g = alphabet_.find(name);
    if (!g) fail("unknown generator '" + std::string(name) + "'");
    return {pos(*g)};
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return detail::WordParser(text, alphabet).parse();
}

/// Syllable form: runs of one letter collapse to `name^k`; empty word is `1`.
inline std::string format_word(std::span<const Letter> w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long e = static_cast<long>(j - i) * (w[i].inverse ? -1 : 1);
    if (!out.empty()) out += ' ';
    out += alphabet.name(w[i].gen);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace artin
