#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "artin/coxeter_group.hpp"

using namespace artin;

namespace {

CoxeterGraph type(const char* t) { return instantiate(parse_standard_type(t)); }

// Cayley-graph BFS distances: lengths that do not go through roots.
struct CayleyOracle {
  std::vector<CoxeterElement> elems;
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::size_t> dist;

  explicit CayleyOracle(const CoxeterGroup& w) {
    elems.push_back(w.identity());
    index[elems[0].matrix()] = 0;
    dist.push_back(0);
    for (std::size_t h = 0; h < elems.size(); ++h)
      for (std::size_t s = 0; s < w.rank(); ++s) {
        CoxeterElement x = elems[h].times_generator(s);
        if (index.emplace(x.matrix(), elems.size()).second) {
          elems.push_back(x);
          dist.push_back(dist[h] + 1);
        }
      }
  }
  std::size_t len(const CoxeterElement& x) const { return dist[index.at(x.matrix())]; }
  bool prefix(const CoxeterElement& x, const CoxeterElement& u) const {
    return len(x) + len(x.inverse() * u) == len(u);
  }
  CoxeterElement meet(const CoxeterElement& u, const CoxeterElement& v) const {
    const CoxeterElement* best = nullptr;
    for (const auto& x : elems)
      if (prefix(x, u) && prefix(x, v) && (!best || len(x) > len(*best))) best = &x;
    for (const auto& x : elems)
      if (prefix(x, u) && prefix(x, v)) REQUIRE(prefix(x, *best));
    return *best;
  }
};

}  // namespace

TEST_CASE("graph construction and text format") {
  CoxeterGraph g = parse_graph("# sample\nvertex a\nvertex b\nvertex c\nedge a b\nedge b c 4\n");
  CHECK(g.size() == 3);
  CHECK(g.label(0, 1) == 3);
  CHECK(g.label(1, 2) == 4);
  CHECK(g.label(0, 2) == 2);
  CHECK(g.label(1, 1) == 1);
  CHECK(parse_graph(format_graph(g)) == g);
  auto m = g.coxeter_matrix();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m[i][j] == m[j][i]);
  CHECK_THROWS_AS(parse_graph("vertex a\nedge a a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex b\nedge a b\nedge b a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex b\nedge a b 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\nedge a b\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertx a\n"), ParseError);
}

TEST_CASE("classification examples") {
  auto path = parse_graph("vertex a\nvertex b\nvertex c\nvertex d\nedge a b\nedge b c\nedge c d\n");
  auto c = classify_finite_type(path);
  REQUIRE(c);
  CHECK(to_string(c->type) == "A4");
  CHECK(c->to_standard[0] == 0);

  auto star = parse_graph("vertex y\nvertex p\nvertex q\nvertex r\nedge y p\nedge y q\nedge y r\n");
  c = classify_finite_type(star);
  REQUIRE(c);
  CHECK(to_string(c->type) == "D4");
  CHECK(c->to_standard[0] == 2);

  CoxeterGraph e6;
  for (const char* v : {"a", "b", "c", "d", "e", "p"}) e6.add_vertex(v);
  e6.add_edge("a", "b");
  e6.add_edge("b", "c");
  e6.add_edge("c", "d");
  e6.add_edge("d", "e");
  e6.add_edge("c", "p");
  c = classify_finite_type(e6);
  REQUIRE(c);
  CHECK(to_string(c->type) == "E6");
  CHECK(c->to_standard[5] == 5);

  auto b3 = parse_graph("vertex y1\nvertex x\nvertex v\nedge y1 x\nedge x v 4\n");
  c = classify_finite_type(b3);
  REQUIRE(c);
  CHECK(to_string(c->type) == "B3");
  CHECK(c->to_standard[2] == 0);

  CHECK_FALSE(classify_finite_type(parse_graph("vertex a\nvertex b\n")));
  CHECK_FALSE(classify_finite_type(parse_graph("vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge a c\n")));
  CHECK_FALSE(classify_finite_type(parse_graph("vertex a\nvertex b\nedge a b 5\n")));
  CHECK_FALSE(classify_finite_type(parse_graph("vertex a\nvertex b\nvertex c\nedge a b 4\nedge b c 4\n")));
}

TEST_CASE("classification round trip up to rank 8") {
  std::vector<std::string> names;
  for (int l = 1; l <= 8; ++l) names.push_back("A" + std::to_string(l));
  for (int l = 2; l <= 8; ++l) names.push_back("B" + std::to_string(l));
  for (int l = 4; l <= 8; ++l) names.push_back("D" + std::to_string(l));
  for (const char* t : {"E6", "E7", "E8", "F4", "G2"}) names.push_back(t);
  for (const auto& n : names) {
    StandardType t = parse_standard_type(n);
    CHECK(to_string(t) == n);
    auto c = classify_finite_type(instantiate(t));
    REQUIRE(c);
    CHECK(c->type == t);
    std::vector<std::size_t> id(t.rank);
    std::iota(id.begin(), id.end(), 0);
    CHECK(c->to_standard == id);
  }
}

TEST_CASE("classification of relabelled graphs") {
  std::mt19937 rng(7);
  for (const char* n : {"A5", "B4", "D5", "E6", "E7", "F4"}) {
    CoxeterGraph s = instantiate(parse_standard_type(n));
    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CoxeterGraph g;
    for (std::size_t i = 0; i < s.size(); ++i) g.add_vertex("v" + std::to_string(i));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (s.adjacent(perm[i], perm[j])) g.add_edge(i, j, s.label(perm[i], perm[j]));
    auto c = classify_finite_type(g);
    REQUIRE(c);
    CHECK(to_string(c->type) == n);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        CHECK(g.label(i, j) == s.label(c->to_standard[i], c->to_standard[j]));
  }
}

TEST_CASE("chord diagrams") {
  CoxeterGraph g = chord_to_coxeter({{{0, 1}, {2, 3}}});
  CHECK(g.size() == 2);
  CHECK(g.edge_count() == 0);
  g = chord_to_coxeter({{{0, 2}, {1, 3}}});
  CHECK(g.label(0, 1) == 3);

  ChordDiagram d{{{0, 2}, {1, 4}, {3, 5}}};
  g = chord_to_coxeter(d);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      auto [a, b] = std::minmax(d.chords[i].first, d.chords[i].second);
      int inside = 0;
      for (std::size_t p : {d.chords[j].first, d.chords[j].second}) inside += (a < p && p < b);
      CHECK(g.adjacent(i, j) == (inside == 1));
    }
  auto c = classify_finite_type(g);
  REQUIRE(c);
  CHECK(to_string(c->type) == "A3");

  CHECK_THROWS_AS(chord_to_coxeter({{{0, 0}, {1, 2}}}), InvalidArgument);
  CHECK_THROWS_AS(chord_to_coxeter({{{0, 1}, {1, 2}}}), InvalidArgument);
  CHECK_THROWS_AS(chord_to_coxeter({{{0, 9}, {1, 2}}}), InvalidArgument);
}

TEST_CASE("embedded graphs") {
  CoxeterGraph g = embedded_graph_to_coxeter({3, {{0, 1}, {1, 2}}});
  CHECK(to_string(classify_finite_type(g)->type) == "A2");
  g = embedded_graph_to_coxeter({4, {{0, 1}, {2, 3}}});
  CHECK(g.edge_count() == 0);
  g = embedded_graph_to_coxeter({3, {{0, 1}, {1, 2}, {2, 0}}});
  CHECK(g.edge_count() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(g.label(i, j) == 3);
  CHECK_THROWS_AS(embedded_graph_to_coxeter({2, {{0, 0}}}), InvalidArgument);
  CHECK_THROWS_AS(embedded_graph_to_coxeter({2, {{0, 1}, {1, 0}}}), InvalidArgument);
}

TEST_CASE("Coxeter arithmetic") {
  CoxeterGroup a2(type("A2"));
  auto s1 = a2.generator(0), s2 = a2.generator(1);
  CHECK((s1 * s1).is_identity());
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);
  CHECK(s1 * s2 != s2 * s1);

  CoxeterGroup b2(type("B2"));
  auto t = b2.generator(0) * b2.generator(1);
  auto p = b2.identity();
  for (int k = 1; k <= 4; ++k) {
    p = p * t;
    CHECK(p.is_identity() == (k == 4));
  }
  CoxeterGroup g2(type("G2"));
  CHECK(g2.enumerate().size() == 12);

  CoxeterGroup other(type("A2"));
  CHECK_THROWS_AS(s1 * other.generator(0), InvalidArgument);
  CHECK((s1 * s2).inverse() == s2 * s1);
  CHECK(s1.times_generator(1) == s1 * s2);
  CHECK(s1.generator_times(1) == s2 * s1);
}

TEST_CASE("group orders and root counts") {
  CHECK(CoxeterGroup(type("A3")).enumerate().size() == 24);
  CHECK(CoxeterGroup(type("B3")).enumerate().size() == 48);
  CHECK(CoxeterGroup(type("D4")).enumerate().size() == 192);
  CHECK_THROWS_AS(CoxeterGroup(type("E6")).enumerate(), CapExceeded);
  CHECK(CoxeterGroup(type("D5")).enumerate().size() == 1920);
  CHECK(CoxeterGroup(type("D4")).positive_roots().size() == 12);
  CHECK(CoxeterGroup(type("E6")).positive_roots().size() == 36);
  CHECK(CoxeterGroup(type("E7")).positive_roots().size() == 63);
  CHECK(CoxeterGroup(type("E8")).positive_roots().size() == 120);
  CHECK(CoxeterGroup(type("F4")).positive_roots().size() == 24);

  CoxeterGroup affine(parse_graph("vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge a c\n"));
  CHECK_FALSE(affine.finite());
  CHECK_THROWS_AS(affine.longest_element(), NotFiniteType);
  CHECK_THROWS_AS(CoxeterGroup(parse_graph("vertex a\nvertex b\nedge a b 5\n")), NotFiniteType);
}

TEST_CASE("longest element length equals the positive root count") {
  std::vector<std::string> names;
  for (int l = 1; l <= 6; ++l) names.push_back("A" + std::to_string(l));
  for (int l = 2; l <= 6; ++l) names.push_back("B" + std::to_string(l));
  for (int l = 4; l <= 6; ++l) names.push_back("D" + std::to_string(l));
  for (const char* t : {"E6", "F4", "G2"}) names.push_back(t);
  for (const auto& n : names) {
    CoxeterGroup w(type(n.c_str()));
    const auto& w0 = w.longest_element();
    CHECK(w0.length() == w.positive_roots().size());
    CHECK(w0.reduced_word().size() == w0.length());
    CHECK(w0.left_descents().size() == w.rank());
    CHECK(w0.right_descents().size() == w.rank());
  }
  CoxeterGroup a1(type("A1"));
  CHECK(a1.longest_element() == a1.generator(0));
  CoxeterGroup a2(type("A2"));
  CHECK(a2.longest_element().reduced_word() == std::vector<std::size_t>{0, 1, 0});
  CHECK(a2.longest_element().length() == 3);
  CHECK(CoxeterGroup(type("D4")).longest_element().length() == 12);
}

TEST_CASE("tau on the longest element") {
  CoxeterGroup a2(type("A2"));
  CHECK(a2.tau(0) == 1);
  CHECK(a2.tau(1) == 0);
  CoxeterGroup b3(type("B3"));
  for (std::size_t s = 0; s < 3; ++s) CHECK(b3.tau(s) == s);
  CoxeterGroup a1(type("A1"));
  CHECK(a1.tau(0) == 0);
}

TEST_CASE("descents and lengths agree with the Cayley graph") {
  for (const char* n : {"A3", "B3", "D4"}) {
    CoxeterGroup w(type(n));
    CayleyOracle oracle(w);
    std::size_t maxlen = *std::max_element(oracle.dist.begin(), oracle.dist.end());
    for (const auto& u : oracle.elems) {
      CHECK(u.length() == oracle.len(u));
      for (std::size_t s = 0; s < w.rank(); ++s) {
        CHECK(u.is_left_descent(s) == (oracle.len(w.generator(s) * u) < oracle.len(u)));
        CHECK(u.is_right_descent(s) == (oracle.len(u * w.generator(s)) < oracle.len(u)));
      }
      CHECK(u.left_descents().empty() == u.is_identity());
      bool all = u.left_descents().size() == w.rank();
      CHECK(all == (u == w.longest_element()));
      CHECK(all == (oracle.len(u) == maxlen));
      CHECK(w.element(u.reduced_word()) == u);
    }
  }
}

TEST_CASE("weak order gcd against the brute-force meet") {
  for (const char* n : {"A3", "B3", "D4"}) {
    CoxeterGroup w(type(n));
    CayleyOracle oracle(w);
    std::size_t pairs = 0;
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, oracle.elems.size() - 1);
    bool exhaustive = oracle.elems.size() <= 48;
    std::size_t budget = exhaustive ? oracle.elems.size() * oracle.elems.size() : 400;
    for (std::size_t k = 0; k < budget; ++k) {
      const auto& u = oracle.elems[exhaustive ? k / oracle.elems.size() : pick(rng)];
      const auto& v = oracle.elems[exhaustive ? k % oracle.elems.size() : pick(rng)];
      CHECK(weak_order_gcd(u, v) == oracle.meet(u, v));
      ++pairs;
    }
    if (std::string(n) == "A3") CHECK(pairs == 576);
  }
  CoxeterGroup a3(type("A3"));
  auto u = a3.element({0, 1, 2});
  CHECK(weak_order_gcd(u, a3.identity()).is_identity());
  CHECK(weak_order_gcd(u, u) == u);
  CHECK(weak_order_gcd(a3.longest_element(), u) == u);
}
