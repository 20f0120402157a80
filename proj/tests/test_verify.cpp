#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tlloops/verify.hpp"

using namespace tlloops;

TEST_CASE("registry") {
  CHECK(suite_names().size() == 16);
  CHECK(std::find(suite_names().begin(), suite_names().end(), "main-technical") != suite_names().end());
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
  VerifyOptions o;
  o.max_degree = 1;
  CHECK_THROWS_AS(run_suite("letters", o), std::invalid_argument);
}

TEST_CASE("rings") {
  CHECK(parse_ring("za").domain().kind() == Domain::Kind::int_poly_a);
  CHECK(parse_ring("F3").domain().modulus() == 3);
  CHECK(parse_ring("z", 2).a() == Scalar::from_int(Domain::integers(), 2));
  CHECK_THROWS(parse_ring("r"));
}

TEST_CASE("quick suites pass with sorted checks") {
  VerifyOptions o;
  o.max_degree = 4;
  o.samples = 20;
  for (const char* name : {"slicing", "letters", "psi-chain-map", "phi-chain-map", "alpha-boundary", "leibniz"}) {
    SuiteReport r = run_suite(name, o);
    CAPTURE(r.str());
    CHECK(r.passed());
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));
    auto j = r.to_json();
    CHECK(j["suite"] == name);
    CHECK(j["checks"].size() == r.checks.size());
  }
}

TEST_CASE("a check that throws is reported as a failure") {
  VerifyOptions o;
  o.max_degree = 3;
  o.rings = {"za"};
  SuiteReport r = run_suite("word-complex", o);
  CHECK_FALSE(r.passed());
  CHECK(r.str().find("[FAIL]") != std::string::npos);
  CHECK(r.checks.front().detail.find("exception") != std::string::npos);
}

TEST_CASE("same seed, same report") {
  VerifyOptions o;
  o.max_degree = 4;
  o.samples = 30;
  o.seed = 9;
  auto strip = [](SuiteReport r) {
    for (auto& c : r.checks) c.seconds = 0;
    return r.to_json().dump();
  };
  CHECK(strip(run_suite("filtration-properties", o)) == strip(run_suite("filtration-properties", o)));
}
