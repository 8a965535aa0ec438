#include <catch_amalgamated.hpp>

#include <random>

#include "artin/garside.hpp"

using namespace artin;

namespace {

ArtinGroup group(const char* t) { return ArtinGroup(instantiate(parse_standard_type(t))); }

Word random_word(std::mt19937& rng, std::size_t rank, std::size_t maxlen) {
  std::uniform_int_distribution<std::size_t> len(0, maxlen), gen(0, rank - 1);
  std::bernoulli_distribution sign(0.5);
  Word w(len(rng));
  for (auto& l : w) l = {gen(rng), sign(rng)};
  return w;
}

}  // namespace

TEST_CASE("normal form basics") {
  ArtinGroup a2 = group("A2");
  CHECK(a2.normal_form(Word{}).is_identity());
  CHECK(a2.normal_form("x1 x1^-1").is_identity());
  CHECK(a2.normal_form("x1 x2 x1 (x2 x1 x2)^-1").is_identity());
  CHECK(a2.equal(a2.parse("x1 x2 x1"), a2.parse("x2 x1 x2")));
  CHECK_FALSE(a2.equal(a2.parse("x1"), a2.parse("x2")));
  auto nf = a2.normal_form("x1 x2 x1");
  CHECK(nf.delta_power == 1);
  CHECK(nf.simples.empty());
  nf = a2.normal_form("x1^-1");
  CHECK(nf.delta_power == -1);
  REQUIRE(nf.simples.size() == 1);
  CHECK(a2.render(nf) == a2.parse("(x1 x2 x1)^-1 x1 x2"));

  ArtinGroup a3 = group("A3");
  nf = a3.normal_form("(x1 x2 x3)^4");
  CHECK(nf.delta_power == 2);
  CHECK(nf.simples.empty());
}

TEST_CASE("delta words") {
  CoxeterGraph a2 = instantiate(parse_standard_type("A2"));
  CHECK(delta_word(a2, std::vector<std::string>{"x1"}) == Word{pos(0)});
  Word d = delta_word(a2, std::vector<std::string>{"x2", "x1"});
  CHECK(d.size() == 3);
  CHECK(words_equal(a2, d, parse_word("x1 x2 x1", a2.alphabet())));
  CHECK(d == delta_word(a2, std::vector<std::string>{"x1", "x2"}));

  CoxeterGraph b2 = instantiate(parse_standard_type("B2"));
  d = delta_word(b2, std::vector<std::string>{"x1", "x2"});
  CHECK(d.size() == 4);
  CHECK(words_equal(b2, d, parse_word("(x1 x2)^2", b2.alphabet())));

  CoxeterGraph a3 = instantiate(parse_standard_type("A3"));
  CHECK_THROWS_AS(delta_word(a3, std::vector<std::string>{"x1", "x3"}), NotFiniteType);
  CHECK(delta_word(a3, std::vector<std::size_t>{}).empty());

  CoxeterGraph tri = parse_graph("vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge a c\n");
  CHECK_THROWS_AS(delta_word(tri, std::vector<std::string>{"a", "b", "c"}), NotFiniteType);
  CHECK(delta_word(tri, std::vector<std::string>{"a", "b"}).size() == 3);
}

TEST_CASE("parabolic equality inside an infinite-type ambient graph") {
  CoxeterGraph tri = parse_graph("vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge a c\n");
  CHECK(words_equal(tri, parse_word("a b a", tri.alphabet()), parse_word("b a b", tri.alphabet())));
  CHECK_THROWS_AS(words_equal(tri, parse_word("a b c", tri.alphabet()), Word{}), NotFiniteType);
  CHECK_THROWS_AS(ArtinGroup(tri), NotFiniteType);
}

TEST_CASE("tau is conjugation by delta") {
  ArtinGroup a2 = group("A2");
  CHECK(a2.tau_permutation() == std::vector<std::size_t>{1, 0});
  ArtinGroup a1 = group("A1");
  CHECK(a1.tau(0) == 0);
  for (const char* t : {"A1", "A4", "B3", "B5", "D4", "D5", "D6", "E6", "E7", "F4", "G2"}) {
    ArtinGroup g = group(t);
    for (std::size_t s = 0; s < g.rank(); ++s) {
      Word w = concat(concat(g.delta_word(), Word{pos(s)}), inverse(g.delta_word()));
      CHECK(g.normal_form(w) == g.normal_form(Word{pos(g.tau(s))}));
      std::size_t a = s, b = g.tau(s);
      for (std::size_t r = 0; r < g.rank(); ++r)
        CHECK(g.graph().label(a, r) == g.graph().label(b, g.tau(r)));
    }
  }
}

TEST_CASE("disconnected finite-type graphs") {
  ArtinGroup g(parse_graph("vertex a\nvertex b\n"));
  CHECK(g.equal(g.parse("a b"), g.parse("b a")));
  CHECK(g.normal_form("a b").delta_power == 1);
  CHECK_FALSE(g.equal(g.parse("a b a"), g.parse("b a b")));
}

TEST_CASE("normal form properties on random words") {
  std::mt19937 rng(2024);
  for (const char* t : {"A3", "B3", "D4", "D6", "G2", "F4"}) {
    ArtinGroup g = group(t);
    for (int k = 0; k < 60; ++k) {
      Word u = random_word(rng, g.rank(), 20), v = random_word(rng, g.rank(), 20);
      auto nu = g.normal_form(u), nv = g.normal_form(v);
      CHECK(g.left_weighted(nu));
      CHECK(g.normal_form(g.render(nu)) == nu);
      CHECK(g.normal_form(concat(u, inverse(u))).is_identity());
      CHECK(g.normal_form(concat(u, v)) == g.normal_form(concat(g.render(nu), g.render(nv))));
      Word rel = g.parse("x1 x2 x1 x2^-1 x1^-1 x2^-1");
      if (g.graph().label(0, 1) == 3) {
        Word with = u;
        with.insert(with.begin() + static_cast<std::ptrdiff_t>(with.size() / 2), rel.begin(), rel.end());
        CHECK(g.normal_form(with) == nu);
      }
    }
  }
}

TEST_CASE("artin words") {
  auto g = std::make_shared<const CoxeterGraph>(instantiate(parse_standard_type("A2")));
  ArtinWord w(g, "x1 x2^2");
  CHECK(w.power(0).empty());
  CHECK(w.concat(w.inverse()).empty());
  CHECK(w.concat(ArtinWord(g, "x2^-1")).str() == "x1 x2");
  CHECK(words_equal(delta_word(g, {"x1", "x2"}).power(2), ArtinWord(g, "(x1 x2)^3")));
  auto h = std::make_shared<const CoxeterGraph>(instantiate(parse_standard_type("B2")));
  CHECK_THROWS_AS(w.concat(ArtinWord(h, "x1")), InvalidArgument);
}
