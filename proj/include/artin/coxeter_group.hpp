#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/error.hpp"
#include "artin/word.hpp"

namespace artin {

class CoxeterGroup;

/// Subset of generators as a bitmask (rank at most 64).
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}

  void insert(std::size_t s) { bits_ |= std::uint64_t{1} << s; }
  bool contains(std::size_t s) const { return (bits_ >> s) & 1U; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::uint64_t bits() const { return bits_; }
  std::optional<std::size_t> least() const {
    if (bits_ == 0) return std::nullopt;
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }
  bool subset_of(GeneratorSet o) const { return (bits_ & ~o.bits_) == 0; }
  GeneratorSet operator&(GeneratorSet o) const { return GeneratorSet(bits_ & o.bits_); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  friend bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Element of W(Γ) stored as its matrix on the simple-root basis together with
/// the inverse matrix. Column j of the matrix is w(α_j).
class CoxeterElement {
 public:
  CoxeterElement() = default;

  const CoxeterGroup& group() const { return *group_; }
  std::size_t rank() const { return n_; }

  int entry(std::size_t row, std::size_t col) const { return m_[row * n_ + col]; }
  const std::vector<int>& matrix() const { return m_; }

  CoxeterElement operator*(const CoxeterElement& o) const;
  CoxeterElement inverse() const {
    CoxeterElement r = *this;
    std::swap(r.m_, r.inv_);
    return r;
  }
  CoxeterElement times_generator(std::size_t s) const;
  CoxeterElement generator_times(std::size_t s) const;

  bool is_right_descent(std::size_t s) const { return column_negative(m_, s); }
  bool is_left_descent(std::size_t s) const { return column_negative(inv_, s); }

  GeneratorSet right_descents() const {
    GeneratorSet d;
    for (std::size_t s = 0; s < n_; ++s)
      if (is_right_descent(s)) d.insert(s);
    return d;
  }
  GeneratorSet left_descents() const {
    GeneratorSet d;
    for (std::size_t s = 0; s < n_; ++s)
      if (is_left_descent(s)) d.insert(s);
    return d;
  }

  bool is_identity() const;
  std::size_t length() const;

  /// Lexicographically least reduced word (generator indices).
  std::vector<std::size_t> reduced_word() const {
    std::vector<std::size_t> out;
    CoxeterElement w = *this;
    for (;;) {
      auto s = w.left_descents().least();
      if (!s) return out;
      out.push_back(*s);
      w = w.generator_times(*s);
    }
  }

  Word positive_word() const {
    Word out;
    for (std::size_t s : reduced_word()) out.push_back(pos(s));
    return out;
  }

  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
    return a.group_ == b.group_ && a.m_ == b.m_;
  }
  friend bool operator<(const CoxeterElement& a, const CoxeterElement& b) { return a.m_ < b.m_; }

 private:
  friend class CoxeterGroup;

  bool column_negative(const std::vector<int>& m, std::size_t s) const {
    for (std::size_t i = 0; i < n_; ++i) {
      int v = m[i * n_ + s];
      if (v != 0) return v < 0;
    }
    return false;
  }

  const CoxeterGroup* group_ = nullptr;
  std::size_t n_ = 0;
  std::vector<int> m_;
  std::vector<int> inv_;
};

/// Reflection representation over the integer Cartan matrix of a graph whose
/// labels lie in {3, 4, 6}. The group object must outlive its elements.
class CoxeterGroup {
 public:
  static constexpr std::size_t default_root_cap = 4096;

  explicit CoxeterGroup(CoxeterGraph graph, std::size_t root_cap = default_root_cap)
      : graph_(std::move(graph)), n_(graph_.size()) {
    if (n_ > 64) throw InvalidArgument("rank above 64 is not supported");
    cartan_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      cartan_[i * n_ + i] = 2;
      for (std::size_t j = i + 1; j < n_; ++j) {
        switch (graph_.label(i, j)) {
          case 2: break;
          case 3: cartan_[i * n_ + j] = cartan_[j * n_ + i] = -1; break;
          case 4: cartan_[i * n_ + j] = -1; cartan_[j * n_ + i] = -2; break;
          case 6: cartan_[i * n_ + j] = -1; cartan_[j * n_ + i] = -3; break;
          default:
            throw NotFiniteType("label " + std::to_string(graph_.label(i, j)) +
                                " is not crystallographic");
        }
      }
    }
    build_roots(root_cap);
    if (finite_) {
      CoxeterElement w = identity();
      for (;;) {
        std::optional<std::size_t> next;
        for (std::size_t s = 0; s < n_ && !next; ++s)
          if (!w.is_right_descent(s)) next = s;
        if (!next) break;
        w = w.times_generator(*next);
      }
      w0_ = w;
    }
  }

  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const CoxeterGraph& graph() const { return graph_; }
  std::size_t rank() const { return n_; }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i * n_ + j]; }
  bool finite() const { return finite_; }

  /// Positive roots in the simple-root basis; complete only when finite().
  const std::vector<std::vector<int>>& positive_roots() const { return roots_; }

  CoxeterElement identity() const {
    CoxeterElement e;
    e.group_ = this;
    e.n_ = n_;
    e.m_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) e.m_[i * n_ + i] = 1;
    e.inv_ = e.m_;
    return e;
  }

  CoxeterElement generator(std::size_t s) const {
    if (s >= n_) throw InvalidArgument("generator index out of range");
    return identity().times_generator(s);
  }
  CoxeterElement generator(std::string_view name) const { return generator(graph_.index(name)); }

  CoxeterElement element(const std::vector<std::size_t>& word) const {
    CoxeterElement w = identity();
    for (std::size_t s : word) w = w.times_generator(s);
    return w;
  }

  const CoxeterElement& longest_element() const {
    if (!w0_) throw NotFiniteType("Coxeter group is infinite");
    return *w0_;
  }

  /// w0 s w0 as a generator index.
  std::size_t tau(std::size_t s) const {
    const CoxeterElement& w0 = longest_element();
    CoxeterElement c = w0 * generator(s) * w0;
    for (std::size_t t = 0; t < n_; ++t)
      if (c == generator(t)) return t;
    throw Error("conjugate of a generator by w0 is not a generator");
  }

  std::vector<CoxeterElement> enumerate(std::size_t cap = 2000) const {
    std::set<std::vector<int>> seen;
    std::vector<CoxeterElement> out{identity()};
    seen.insert(out[0].matrix());
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (std::size_t s = 0; s < n_; ++s) {
        CoxeterElement w = out[head].times_generator(s);
        if (seen.insert(w.matrix()).second) {
          if (out.size() >= cap) throw CapExceeded("group order exceeds " + std::to_string(cap));
          out.push_back(std::move(w));
        }
      }
    }
    return out;
  }

 private:
  void build_roots(std::size_t cap) {
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < n_; ++i) {
      std::vector<int> r(n_, 0);
      r[i] = 1;
      seen.insert(r);
      roots_.push_back(r);
    }
    for (std::size_t head = 0; head < roots_.size(); ++head) {
      for (std::size_t i = 0; i < n_; ++i) {
        std::vector<int> r = roots_[head];
        int c = 0;
        for (std::size_t j = 0; j < n_; ++j) c += cartan_[i * n_ + j] * r[j];
        if (c == 0) continue;
        r[i] -= c;
        if (std::any_of(r.begin(), r.end(), [](int v) { return v < 0; })) continue;
        if (seen.insert(r).second) {
          if (roots_.size() >= cap) {
            finite_ = false;
            return;
          }
          roots_.push_back(std::move(r));
        }
      }
    }
    finite_ = true;
  }

  CoxeterGraph graph_;
  std::size_t n_;
  std::vector<int> cartan_;
  std::vector<std::vector<int>> roots_;
  bool finite_ = false;
  std::optional<CoxeterElement> w0_;
};

inline CoxeterElement CoxeterElement::operator*(const CoxeterElement& o) const {
  if (group_ != o.group_) throw InvalidArgument("elements of different Coxeter groups");
  CoxeterElement r;
  r.group_ = group_;
  r.n_ = n_;
  r.m_.assign(n_ * n_, 0);
  r.inv_.assign(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      int a = m_[i * n_ + k];
      int b = o.inv_[i * n_ + k];
      for (std::size_t j = 0; j < n_; ++j) {
        if (a) r.m_[i * n_ + j] += a * o.m_[k * n_ + j];
        if (b) r.inv_[i * n_ + j] += b * inv_[k * n_ + j];
      }
    }
  return r;
}

inline CoxeterElement CoxeterElement::times_generator(std::size_t s) const {
  const CoxeterGroup& g = *group_;
  CoxeterElement r = *this;
  // M S_s: column j -= C_sj * column s.  S_s M^{-1}: row s -= sum_j C_sj row j.
  for (std::size_t j = 0; j < n_; ++j) {
    int c = g.cartan(s, j);
    if (c == 0) continue;
    for (std::size_t i = 0; i < n_; ++i) r.m_[i * n_ + j] -= c * m_[i * n_ + s];
  }
  for (std::size_t col = 0; col < n_; ++col) {
    int acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc += g.cartan(s, j) * inv_[j * n_ + col];
    r.inv_[s * n_ + col] -= acc;
  }
  return r;
}

inline CoxeterElement CoxeterElement::generator_times(std::size_t s) const {
  return inverse().times_generator(s).inverse();
}

inline bool CoxeterElement::is_identity() const { return *this == group_->identity(); }

inline std::size_t CoxeterElement::length() const {
  std::size_t len = 0;
  for (const auto& root : group_->positive_roots()) {
    for (std::size_t i = 0; i < n_; ++i) {
      int v = 0;
      for (std::size_t j = 0; j < n_; ++j) v += m_[i * n_ + j] * root[j];
      if (v != 0) {
        if (v < 0) ++len;
        break;
      }
    }
  }
  return len;
}

/// Meet in the left weak order: the longest common prefix.
inline CoxeterElement weak_order_gcd(CoxeterElement u, CoxeterElement v) {
  if (&u.group() != &v.group()) throw InvalidArgument("elements of different Coxeter groups");
  CoxeterElement g = u.group().identity();
  for (;;) {
    auto s = (u.left_descents() & v.left_descents()).least();
    if (!s) return g;
    g = g.times_generator(*s);
    u = u.generator_times(*s);
    v = v.generator_times(*s);
  }
}

/// True iff u is a prefix of v in the left weak order.
inline bool left_divides(const CoxeterElement& u, const CoxeterElement& v) {
  return u.length() + (u.inverse() * v).length() == v.length();
}

}  // namespace artin
