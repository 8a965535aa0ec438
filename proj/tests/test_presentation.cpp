#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "artin/coxeter_group.hpp"
#include "artin/presentation.hpp"

using namespace artin;

namespace {

Presentation make(std::vector<std::string> gens, std::vector<std::string> rels) {
  Presentation p;
  for (auto& g : gens) p.add_generator(g);
  for (auto& r : rels) p.add_relator(p.parse(r));
  return p;
}

// gcd of all k x k minors, by cofactor expansion; small matrices only.
long long det(std::vector<std::vector<long long>> m) {
  if (m.size() == 1) return m[0][0];
  long long d = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    std::vector<std::vector<long long>> sub;
    for (std::size_t i = 1; i < m.size(); ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    d += (j % 2 ? -1 : 1) * m[0][j] * det(sub);
  }
  return d;
}

void choose(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<long long> determinantal_divisors(const std::vector<std::vector<long long>>& a, std::size_t cols) {
  std::vector<long long> diag;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(a.size(), cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    choose(a.size(), k, 0, cur, rs);
    choose(cols, k, 0, cur, cs);
    long long g = 0;
    for (auto& r : rs)
      for (auto& c : cs) {
        std::vector<std::vector<long long>> m;
        for (auto i : r) {
          std::vector<long long> row;
          for (auto j : c) row.push_back(a[i][j]);
          m.push_back(row);
        }
        g = std::gcd(g, std::llabs(det(m)));
      }
    if (g == 0) break;
    diag.push_back(g / prev);
    prev = g;
  }
  return diag;
}

std::vector<long long> invariants_oracle(const Presentation& p) {
  std::vector<std::vector<long long>> m;
  for (auto& r : p.relators()) m.push_back(exponent_vector(r.word, p.generator_count()));
  auto diag = determinantal_divisors(m, p.generator_count());
  std::vector<long long> out;
  for (auto d : diag)
    if (d > 1) out.push_back(d);
  std::sort(out.begin(), out.end());
  out.insert(out.end(), p.generator_count() - diag.size(), 0);
  return out;
}

using Perm = std::vector<int>;
Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}
std::size_t closure_order(const std::vector<Perm>& gens) {
  Perm id(gens[0].size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> todo{id};
  while (!todo.empty()) {
    Perm x = todo.back();
    todo.pop_back();
    for (auto& g : gens) {
      Perm y = compose(x, g);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size();
}

Presentation coxeter_presentation(const CoxeterGraph& g) {
  Presentation p = artin_presentation(g);
  for (std::size_t i = 0; i < g.size(); ++i) p.add_relator(Word{pos(i), pos(i)}, "sq:" + g.name(i));
  return p;
}

}  // namespace

TEST_CASE("Artin presentations") {
  Presentation p = artin_presentation(parse_graph("vertex a\nvertex b\n"));
  REQUIRE(p.relator_count() == 1);
  CHECK(p.relator(0).word == p.parse("a b a^-1 b^-1"));
  CHECK(p.relator(0).tag == "artin:a,b");

  p = artin_presentation(instantiate(parse_standard_type("A2")));
  CHECK(p.relator(0).word == p.parse("x1 x2 x1 (x2 x1 x2)^-1"));
  p = artin_presentation(instantiate(parse_standard_type("B2")));
  CHECK(p.relator(0).word == p.parse("(x1 x2)^2 ((x2 x1)^2)^-1"));
  REQUIRE(p.relator(0).display);
  CHECK(p.relator(0).display->first == p.parse("x1 x2 x1 x2"));

  for (const char* t : {"A4", "D5", "E6"}) {
    CoxeterGraph g = instantiate(parse_standard_type(t));
    p = artin_presentation(g);
    CHECK(p.relator_count() == g.size() * (g.size() - 1) / 2);
    for (auto& r : p.relators()) {
      CHECK(free_reduce(r.word) == r.word);
      CHECK(cyclic_reduce(r.word) == r.word);
    }
  }
  CHECK(abelianization_invariants(artin_presentation(instantiate(parse_standard_type("A2")))) ==
        std::vector<long long>{0});
}

TEST_CASE("abelianization invariants") {
  CHECK(abelianization_invariants(make({"a"}, {})) == std::vector<long long>{0});
  CHECK(abelianization_invariants(make({"a"}, {"a^2"})) == std::vector<long long>{2});
  CHECK(abelianization_invariants(make({"a", "b"}, {"a^4", "b^6", "a b a^-1 b^-1"})) ==
        std::vector<long long>{2, 12});
  CHECK(abelianization_invariants(make({"a", "b", "c"}, {"a^2 b^4", "c^3"})) == std::vector<long long>{6, 0});

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(-4, 4), len(0, 6), gen(0, 2), nrel(0, 4);
  for (int k = 0; k < 200; ++k) {
    Presentation p = make({"a", "b", "c"}, {});
    int r = nrel(rng);
    for (int i = 0; i < r; ++i) {
      Word w;
      int l = len(rng);
      for (int j = 0; j < l; ++j) w = concat(w, power(Word{pos(static_cast<std::size_t>(gen(rng)))}, e(rng)));
      p.add_relator(w);
    }
    CHECK(abelianization_invariants(p) == invariants_oracle(p));
  }
}

TEST_CASE("coset enumeration") {
  CHECK(coset_enumerate(make({"a"}, {"a^7"})) == 7u);
  CHECK(coset_enumerate(make({"a", "b"}, {"a^2", "b^3", "(a b)^2"})) == 6u);
  CHECK(coset_enumerate(make({"a", "b"}, {"a^2", "b^3", "(a b)^5"})) == 60u);
  CHECK(coset_enumerate(make({"a", "b"}, {"a^3", "b^3", "(a b)^3"}), 2000) == std::nullopt);
  CHECK(coset_enumerate(make({"a"}, {}), 50) == std::nullopt);
  CHECK(coset_enumerate(make({"a", "b"}, {"a^2", "b^3", "(a b)^2"}), 1000, {make({"a", "b"}, {}).parse("b")}) ==
        2u);
  for (const char* t : {"A3", "B3", "D4", "G2"}) {
    CoxeterGraph g = instantiate(parse_standard_type(t));
    CHECK(coset_enumerate(coxeter_presentation(g)) == CoxeterGroup(g).enumerate().size());
  }
}

TEST_CASE("Lemma 2.5 composition") {
  SECTION("trivial kernel") {
    ExtensionData d;
    d.quotient = artin_presentation(instantiate(parse_standard_type("A2")));
    d.lifts = {"X1", "X2"};
    d.relator_words = {Word{}};
    d.conjugates = {{}, {}};
    Presentation g = compose_extension(d);
    CHECK(g.generator_count() == 2);
    CHECK(g.relator_count() == 1);
    CHECK(g.relator(0).word == g.parse("X1 X2 X1 X2^-1 X1^-1 X2^-1"));
    CHECK(abelianization_invariants(g) == abelianization_invariants(d.quotient));
  }
  SECTION("infinite cyclic example") {
    ExtensionData d;
    d.kernel = make({"k"}, {});
    d.quotient = make({"x"}, {"x^2"});
    d.lifts = {"xt"};
    d.relator_words = {d.kernel.parse("k")};
    d.conjugates = {{d.kernel.parse("k")}};
    Presentation g = compose_extension(d);
    CHECK(format_text(g) == "< xt, k | xt^2 k^-1, xt k xt^-1 k^-1 >");
    CHECK(abelianization_invariants(g) == std::vector<long long>{0});
    CHECK(abelianization_invariants(g) == invariants_oracle(g));
  }
  SECTION("order six example") {
    ExtensionData d;
    d.kernel = make({"a"}, {"a^3"});
    d.quotient = make({"x"}, {"x^2"});
    d.lifts = {"xt"};
    d.relator_words = {Word{}};
    d.conjugates = {{d.kernel.parse("a^-1")}};
    Presentation g = compose_extension(d);
    CHECK(g.generator_count() == 2);
    CHECK(g.relator_count() == 3);
    CHECK(coset_enumerate(g) == 6u);
    CHECK(closure_order({{1, 0, 2}, {1, 2, 0}}) == 6u);
    CHECK(abelianization_invariants(g) == std::vector<long long>{2});
  }
  SECTION("shape and errors") {
    ExtensionData d;
    d.kernel = make({"a", "b"}, {"a b a^-1 b^-1", "a^5"});
    d.quotient = make({"x", "y"}, {"x^2", "y^2", "(x y)^3"});
    d.lifts = {"X", "Y"};
    d.relator_words = {Word{}, Word{}, Word{}};
    d.conjugates = {{d.kernel.parse("a"), d.kernel.parse("b")}, {d.kernel.parse("b"), d.kernel.parse("a")}};
    Presentation g = compose_extension(d);
    CHECK(g.generator_count() == 4);
    CHECK(g.relator_count() == 3 + 2 * 2 + 2);
    d.lifts = {"a", "Y"};
    CHECK_THROWS_AS(compose_extension(d), InvalidArgument);
    d.lifts = {"X", "Y"};
    d.conjugates[0][0] = Word{pos(7)};
    CHECK_THROWS_AS(compose_extension(d), InvalidArgument);
    d.conjugates.pop_back();
    CHECK_THROWS_AS(compose_extension(d), InvalidArgument);
  }
}

TEST_CASE("Tietze elimination") {
  Presentation p = make({"a", "b"}, {"b a^-2"});
  Presentation q = tietze_eliminate(p, 1, 0);
  CHECK(q.generator_count() == 1);
  CHECK(q.relator_count() == 0);

  p = make({"a", "b", "c"}, {"a b a^-1 b^-1", "c a^-1 b", "b^3"});
  q = tietze_eliminate(p, 2, 1);
  CHECK(q.generator_count() == 2);
  CHECK(q.relator(0).word == q.parse("a b a^-1 b^-1"));
  CHECK(abelianization_invariants(q) == abelianization_invariants(p));

  p = make({"a", "b", "c"}, {"a b^2 c^-1 a", "a^3 b^2", "(a c)^2"});
  q = tietze_eliminate(p, 2, 0);
  CHECK(q.relator(1).word == cyclic_reduce(q.parse("(a^3 b^2)^2")));
  CHECK(abelianization_invariants(q) == abelianization_invariants(p));
  CHECK(coset_enumerate(q, 10000) == coset_enumerate(p, 10000));

  CHECK_THROWS_AS(tietze_eliminate(make({"a", "b"}, {"b^2 a"}), 1, 0), InvalidArgument);
  CHECK_THROWS_AS(tietze_eliminate(make({"a", "b"}, {"b a"}), 0, 3), InvalidArgument);
}

TEST_CASE("presentation formats round-trip") {
  Presentation p = artin_presentation(instantiate(parse_standard_type("B3")));
  p.set_doc(0, "first generator");
  p.add_relator(Word{}, "empty");
  CHECK(parse_presentation(format_machine(p)) == p);
  Presentation t = parse_presentation(format_text(p));
  CHECK(t.alphabet() == p.alphabet());
  REQUIRE(t.relator_count() == p.relator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i) CHECK(t.relator(i).word == p.relator(i).word);
  CHECK(format_text(make({}, {})) == "<  |  >");
  CHECK(parse_presentation("< | >").generator_count() == 0);

  std::string gap = format_gap(make({"a", "b"}, {"a^2", "a b^-1"}));
  CHECK(gap.find("F := FreeGroup(\"a\", \"b\");;") != std::string::npos);
  CHECK(gap.find("a^2") != std::string::npos);
  CHECK(gap.find("a*b^-1") != std::string::npos);
  CHECK(gap.find("G := F / rels;;") != std::string::npos);

  CHECK_THROWS_AS(parse_presentation("< a | b >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gen a\ntag t\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gen a\nfoo\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a, a | >"), ParseError);
}
