#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/coxeter_group.hpp"
#include "artin/error.hpp"
#include "artin/word.hpp"

namespace artin {

/// Δ^delta_power · simples[0] · simples[1] ..., each simple neither 1 nor w0.
struct NormalForm {
  long delta_power = 0;
  std::vector<CoxeterElement> simples;

  bool is_identity() const { return delta_power == 0 && simples.empty(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// True iff every component of the graph is a supported finite type.
inline bool is_finite_type(const CoxeterGraph& g) {
  for (const auto& comp : g.components())
    if (!classify_finite_type(g.induced(comp))) return false;
  return true;
}

/// Garside structure of a finite-type Artin group with simples W(Γ).
class ArtinGroup {
 public:
  explicit ArtinGroup(CoxeterGraph graph) {
    if (!is_finite_type(graph)) throw NotFiniteType("Coxeter graph is not of finite type");
    w_ = std::make_unique<CoxeterGroup>(std::move(graph));
    w0_ = w_->longest_element();
    for (std::size_t s = 0; s < rank(); ++s) {
      tau_.push_back(w_->tau(s));
      generators_.push_back(w_->generator(s));
      complements_.push_back(w0_.times_generator(s));
    }
    delta_ = w0_.positive_word();
  }

  const CoxeterGraph& graph() const { return w_->graph(); }
  const CoxeterGroup& coxeter() const { return *w_; }
  std::size_t rank() const { return w_->rank(); }
  const CoxeterElement& longest() const { return w0_; }

  /// Lexicographically least positive word for Δ.
  const Word& delta_word() const { return delta_; }
  std::size_t tau(std::size_t s) const { return tau_.at(s); }
  const std::vector<std::size_t>& tau_permutation() const { return tau_; }

  NormalForm normal_form(std::span<const Letter> w) const {
    NormalForm nf;
    for (Letter l : w) {
      if (l.gen >= rank()) throw InvalidArgument("letter outside the generating set");
      if (l.inverse) {
        shift_delta(nf, -1);
        push_simple(nf, complements_[l.gen]);
      } else {
        push_simple(nf, generators_[l.gen]);
      }
    }
    return nf;
  }

  NormalForm normal_form(std::string_view text) const { return normal_form(parse(text)); }

  bool equal(std::span<const Letter> a, std::span<const Letter> b) const {
    return normal_form(a) == normal_form(b);
  }

  Word parse(std::string_view text) const { return parse_word(text, graph().alphabet()); }
  std::string format(std::span<const Letter> w) const { return format_word(w, graph().alphabet()); }

  Word render(const NormalForm& nf) const {
    Word out = power(delta_, nf.delta_power);
    for (const auto& u : nf.simples) {
      Word p = u.positive_word();
      out.insert(out.end(), p.begin(), p.end());
    }
    return out;
  }

  /// Left-weighted means left descents of each factor lie in the right
  /// descents of its predecessor; also checks that no factor is 1 or w0.
  bool left_weighted(const NormalForm& nf) const {
    for (std::size_t i = 0; i < nf.simples.size(); ++i) {
      if (nf.simples[i].is_identity() || nf.simples[i] == w0_) return false;
      if (i > 0 && !nf.simples[i].left_descents().subset_of(nf.simples[i - 1].right_descents()))
        return false;
    }
    return true;
  }

  /// `delta^k` followed by one reduced word per simple factor.
  std::vector<std::string> describe(const NormalForm& nf) const {
    std::vector<std::string> lines{"delta^" + std::to_string(nf.delta_power)};
    for (const auto& u : nf.simples) lines.push_back(format(u.positive_word()));
    return lines;
  }

 private:
  CoxeterElement conjugate_by_delta(const CoxeterElement& u) const { return w0_ * u * w0_; }

  void shift_delta(NormalForm& nf, long k) const {
    nf.delta_power += k;
    if (k % 2 != 0)
      for (auto& u : nf.simples) u = conjugate_by_delta(u);
  }

  void push_simple(NormalForm& nf, const CoxeterElement& x) const {
    if (x.is_identity()) return;
    nf.simples.push_back(x);
    auto& f = nf.simples;
    for (bool full = false;; full = true) {
      for (std::size_t i = f.size() - 1; i-- > 0;) {
        CoxeterElement t = weak_order_gcd(f[i].inverse() * w0_, f[i + 1]);
        if (t.is_identity()) {
          if (full) continue;
          break;
        }
        f[i] = f[i] * t;
        f[i + 1] = t.inverse() * f[i + 1];
      }
      std::erase_if(f, [](const CoxeterElement& u) { return u.is_identity(); });
      std::size_t lead = 0;
      while (lead < f.size() && f[lead] == w0_) ++lead;
      if (lead > 0) {
        f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
        nf.delta_power += static_cast<long>(lead);
      }
      if (left_weighted(nf) || f.empty()) return;
    }
  }

  std::unique_ptr<CoxeterGroup> w_;
  CoxeterElement w0_;
  Word delta_;
  std::vector<std::size_t> tau_;
  std::vector<CoxeterElement> generators_;
  std::vector<CoxeterElement> complements_;
};

/// Positive lift of the longest element of W_X as a word over the ambient
/// generators. The empty subset gives the empty word.
inline Word delta_word(const CoxeterGraph& ambient, std::vector<std::size_t> subset) {
  if (subset.empty()) return {};
  std::sort(subset.begin(), subset.end());
  CoxeterGraph sub = ambient.induced(subset);
  if (!sub.connected()) throw NotFiniteType("parabolic subgraph is disconnected");
  if (!classify_finite_type(sub)) throw NotFiniteType("parabolic subgraph is not of finite type");
  CoxeterGroup w(std::move(sub));
  Word out;
  for (std::size_t s : w.longest_element().reduced_word()) out.push_back(pos(subset[s]));
  return out;
}

inline Word delta_word(const CoxeterGraph& ambient, const std::vector<std::string>& names) {
  return delta_word(ambient, ambient.indices(names));
}

/// Generators occurring in w, sorted.
inline std::vector<std::size_t> support(std::span<const Letter> w) {
  std::vector<std::size_t> s;
  for (Letter l : w) s.push_back(l.gen);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// Word problem in the parabolic subgroup spanned by the combined support,
/// which embeds in A(Γ); fails if that parabolic is not of finite type.
inline bool words_equal(const CoxeterGraph& g, std::span<const Letter> a, std::span<const Letter> b) {
  Word both = concat(a, b);
  std::vector<std::size_t> supp = support(both);
  if (supp.empty()) return true;
  std::vector<std::size_t> local(g.size(), 0);
  for (std::size_t i = 0; i < supp.size(); ++i) local[supp[i]] = i;
  ArtinGroup sub(g.induced(supp));
  return sub.equal(relabel(a, local), relabel(b, local));
}

/// Word tied to the graph it is written over.
class ArtinWord {
 public:
  ArtinWord(std::shared_ptr<const CoxeterGraph> graph, Word letters)
      : graph_(std::move(graph)), letters_(free_reduce(letters)) {
    for (Letter l : letters_)
      if (l.gen >= graph_->size()) throw InvalidArgument("letter outside the graph");
  }
  ArtinWord(std::shared_ptr<const CoxeterGraph> graph, std::string_view text)
      : ArtinWord(graph, parse_word(text, graph->alphabet())) {}

  const CoxeterGraph& graph() const { return *graph_; }
  const std::shared_ptr<const CoxeterGraph>& graph_ptr() const { return graph_; }
  const Word& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::string str() const { return format_word(letters_, graph_->alphabet()); }

  ArtinWord inverse() const { return {graph_, artin::inverse(letters_)}; }
  ArtinWord power(long n) const { return {graph_, artin::power(letters_, n)}; }
  ArtinWord concat(const ArtinWord& o) const {
    same_graph(o);
    return {graph_, artin::concat(letters_, o.letters_)};
  }

  friend bool operator==(const ArtinWord& a, const ArtinWord& b) {
    return (a.graph_ == b.graph_ || *a.graph_ == *b.graph_) && a.letters_ == b.letters_;
  }

  void same_graph(const ArtinWord& o) const {
    if (graph_ != o.graph_ && !(*graph_ == *o.graph_))
      throw InvalidArgument("words over different graphs");
  }

 private:
  std::shared_ptr<const CoxeterGraph> graph_;
  Word letters_;
};

inline ArtinWord delta_word(const std::shared_ptr<const CoxeterGraph>& g, const std::vector<std::string>& names) {
  return {g, delta_word(*g, names)};
}

inline bool words_equal(const ArtinWord& a, const ArtinWord& b) {
  a.same_graph(b);
  return words_equal(a.graph(), a.letters(), b.letters());
}

}  // namespace artin
