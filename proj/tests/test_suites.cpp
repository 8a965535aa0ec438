#include <catch_amalgamated.hpp>

#include "artin/suites.hpp"

using namespace artin;

namespace {

void all_pass(const SuiteReport& r) {
  for (const auto& c : r.claims) {
    INFO(r.suite << " " << c.id << ": " << c.message);
    CHECK(c.status == Status::verified);
  }
}

std::vector<std::string> ids(const SuiteReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.claims) out.push_back(c.id);
  return out;
}

}  // namespace

TEST_CASE("fundamental element powers") {
  SuiteReport r = run_suite("prop2.8");
  CHECK(r.claims.size() == 12);
  REQUIRE(r.find("E7"));
  CHECK(r.find("E7")->status == Status::corrected);
  CHECK(r.find("E7")->value == 9);
  CHECK(status_text(*r.find("E7")) == "corrected(9)");
  CHECK_FALSE(r.refuted());
  for (const auto& c : r.claims)
    if (c.id != "E7") CHECK(c.status == Status::verified);
}

TEST_CASE("fundamental element recursions") {
  SuiteReport r = run_suite("prop2.9");
  CHECK(r.claims.size() == 14);
  all_pass(r);
}

TEST_CASE("identities in type D") {
  SuiteReport r = run_suite("lemma3.5");
  CHECK(ids(r) == std::vector<std::string>{"D4:1", "D4:2", "D5:1", "D5:2", "D6:1", "D6:2"});
  all_pass(r);
  all_pass(run_suite("lemma3.6"));
  r = run_suite("lemma3.8");
  CHECK(r.claims.size() == 2);
  all_pass(r);
}

TEST_CASE("commutation scripts suite") {
  SuiteReport r = run_suite("lemma3.4");
  CHECK(ids(r) == std::vector<std::string>{"eq1", "eq2", "eq3"});
  all_pass(r);
  SuiteOptions o;
  o.data_dir = "/nonexistent";
  r = run_suite("lemma3.4", o);
  CHECK(r.refuted());
}

TEST_CASE("garside property suite") {
  SuiteOptions o;
  o.samples = 100;
  SuiteReport r = run_suite("garside-props", o);
  CHECK(r.claims.size() == 16);
  all_pass(r);
}

TEST_CASE("weak order oracle suite") {
  SuiteReport r = run_suite("weak-order-oracle");
  all_pass(r);
  REQUIRE(r.find("A3"));
  CHECK(r.find("A3")->message == "576 pairs");
  CHECK(r.find("B3")->message == "2304 pairs");
}

TEST_CASE("closed-form inventory") {
  CHECK(suites::expected_generators({2, 1, 3, Flavor::full, false}) == 2 * 2 + 2 * 1 + 3 + 1);
  CHECK(suites::expected_generators({1, 0, 0, Flavor::full, false}) == 2);
  CHECK(suites::expected_generators({3, 0, 2, Flavor::pure, false}) == 2 + 2 * 3 + 1);
  auto m = suites::expected_schemas({2, 2, 2, Flavor::full, false});
  CHECK(m == std::map<std::string, long>{{"R1", 1}, {"R3", 1}, {"R4", 3}, {"R5", 1}, {"R6", 1}, {"R7", 1}, {"R8b", 1}});
  Presentation p = suites::matsumoto(3, false);
  CHECK(p.generator_count() == 7);
  CHECK(p.relator_count() == 21 + 2);
  CHECK(suites::matsumoto(1, true).relator(1).word.size() == 12);
}

TEST_CASE("grid audit and extension suites") {
  SuiteReport r = run_suite("grid-audit");
  CHECK(r.claims.size() == 7);
  all_pass(r);
  r = run_suite("extension");
  CHECK(r.claims.size() == 3);
  all_pass(r);
}

TEST_CASE("suite reports are deterministic") {
  SuiteOptions one, four;
  one.samples = four.samples = 50;
  four.jobs = 4;
  for (const char* id : {"prop2.9", "garside-props", "lemma3.5"}) {
    SuiteReport a = run_suite(id, one), b = run_suite(id, four);
    REQUIRE(ids(a) == ids(b));
    for (std::size_t i = 0; i < a.claims.size(); ++i) {
      CHECK(a.claims[i].status == b.claims[i].status);
      CHECK(a.claims[i].message == b.claims[i].message);
    }
  }
  CHECK_THROWS_AS(run_suite("lemma9.9"), InvalidArgument);
  CHECK(suite_ids().size() == 10);
}
