#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "tlloops/complex.hpp"

using namespace tlloops;

namespace {

PointedRing zero_a(Domain d = Domain::integers()) { return PointedRing::with_a(d, 0); }

ComplexSpec subquotient(int w, int j, int max_degree, const char* ends = "cc") {
  ComplexSpec s;
  s.ring = zero_a();
  s.ends = EndSpec::from_code(ends);
  s.max_degree = max_degree;
  s.weight = w;
  s.dividers = j;
  s.subquotient = true;
  return s;
}

void check_same(const ChainComplexData& a, const ChainComplexData& b) {
  REQUIRE(a.min_degree == b.min_degree);
  REQUIRE(a.max_degree == b.max_degree);
  for (int p = a.min_degree; p <= a.max_degree; ++p) {
    CHECK(a.basis[p] == b.basis[p]);
    CHECK(a.d(p) == b.d(p));
    if (a.labeled() && b.labeled()) CHECK(a.weights[p] == b.weights[p]);
  }
}

}  // namespace

TEST_CASE("basis sizes of the reduced complex") {
  ComplexSpec s;
  s.max_degree = 5;
  std::size_t expect = 4;
  for (int p = 1; p <= 5; ++p, expect *= 13) CHECK(count_graffiti(s, p) == expect);
  s.max_degree = 3;
  ChainComplexData c = build_complex(s);
  CHECK(c.dim(1) == 4);
  CHECK(c.dim(2) == 52);
  CHECK(c.dim(3) == 676);
  CHECK(c.d(1).rows() == 0);

  ComplexSpec a = s;
  a.ends.augmented = true;
  ChainComplexData ca = build_complex(a);
  CHECK(ca.min_degree == 0);
  CHECK(ca.dim(0) == 1);
  CHECK(ca.d(1).nnz() == 4);
}

TEST_CASE("filtered bases") {
  auto b = enumerate_graffiti(subquotient(1, 0, 3), 1);
  REQUIRE(b.size() == 2);
  CHECK(b[0].encode() == "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,0){L1-L4,L2-L3}]");
  CHECK(b[1].encode() == "G(cc)[TL(0,4){R1-R4,R2-R3} | TL(4,0){L1-L2,L3-L4}]");
  CHECK(enumerate_graffiti(subquotient(1, 0, 3, "oo"), 1).size() == 4);
  CHECK(enumerate_graffiti(subquotient(1, 0, 3, "oc"), 1).size() == 3);
  CHECK(enumerate_graffiti(subquotient(1, 0, 3, "co"), 1).size() == 3);
  for (const auto& g : enumerate_graffiti(subquotient(1, 0, 3, "oo"), 1)) CHECK(close_ends(g).loop_count() == 1);

  ComplexSpec w;
  w.ring = zero_a();
  w.weight = 1;
  CHECK(count_graffiti(w, 1) == 2);
  w.weight = 2;
  CHECK(count_graffiti(w, 1) == 2);
  for (int p = 1; p <= 3; ++p)
    CHECK(count_graffiti(subquotient(2, 1, 3), p) == enumerate_graffiti(subquotient(2, 1, 3), p).size());
}

TEST_CASE("spec validation") {
  ComplexSpec s;
  s.weight = 1;
  CHECK_THROWS_AS(s.validate(), SpecError);
  ComplexSpec t;
  t.ring = zero_a();
  t.dividers = 0;
  CHECK_THROWS_AS(build_complex(t), SpecError);
  ComplexSpec u;
  u.two_n = 6;
  u.ends = EndSpec::from_code("oc");
  CHECK_THROWS_AS(u.validate(), SpecError);
  ComplexSpec v;
  v.ends = EndSpec{true, false, true};
  CHECK_THROWS_AS(v.validate(), SpecError);
  ComplexSpec w = subquotient(1, 0, 3);
  w.ring = PointedRing::with_a(Domain::integers(), 2);
  CHECK_THROWS_AS(w.validate(), SpecError);
  ComplexSpec m;
  m.max_degree = 0;
  CHECK_THROWS_AS(m.validate(), SpecError);
}

TEST_CASE("fast assembly agrees with the reference path") {
  std::vector<ComplexSpec> specs;
  {
    ComplexSpec s;
    specs.push_back(s);
    s.ends.augmented = true;
    specs.push_back(s);
  }
  for (const char* code : {"oc", "co", "oo"}) {
    ComplexSpec s;
    s.ends = EndSpec::from_code(code);
    specs.push_back(s);
  }
  {
    ComplexSpec s;
    s.ring = PointedRing::with_a(Domain::prime_field(3), 2);
    specs.push_back(s);
    s.two_n = 6;
    s.max_degree = 2;
    specs.push_back(s);
    s.two_n = 2;
    s.max_degree = 4;
    specs.push_back(s);
  }
  {
    ComplexSpec s;
    s.ring = zero_a(Domain::rationals());
    s.weight = 2;
    specs.push_back(s);
  }
  for (int w = 1; w <= 3; ++w)
    for (int j = 0; j <= 1; ++j) specs.push_back(subquotient(w, j, 3));
  specs.push_back(subquotient(1, 0, 3, "oo"));
  specs.push_back(subquotient(2, 0, 3, "oc"));
  for (const auto& s : specs) {
    CAPTURE(s.ends.code());
    ChainComplexData fast = build_complex(s);
    check_same(fast, build_complex_reference(s));
    check_same(fast, build_complex(s, 1));
  }
}

TEST_CASE("a = 0 differential preserves loop count") {
  ComplexSpec s;
  s.ring = zero_a();
  s.max_degree = 4;
  ChainComplexData c = build_complex(s);
  REQUIRE(c.labeled());
  for (int p = 2; p <= 4; ++p)
    for (const auto& e : c.d(p).entries()) CHECK(c.weights[p - 1][e.row] == c.weights[p][e.col]);
}

TEST_CASE("faces raise the divider count by at most one") {
  const PointedRing z = zero_a();
  std::mt19937_64 rng(19);
  for (int t = 0; t < 300; ++t) {
    Graffito g = random_graffito(4, EndSpec{}, 2 + t % 3, rng);
    for (int i = 0; i < g.degree(); ++i) {
      Chain f = face(g, i, z);
      for (const auto& [h, v] : f.terms()) {
        int j = h.divider_count();
        CHECK((j == g.divider_count() || j == g.divider_count() + 1));
      }
    }
  }
  // with a symbolic, a face that frees a loop may also remove a divider
  Graffito g = Graffito::parse(
      "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R1,L2-R2,L3-L4,R3-R4} | TL(4,4){L1-L2,L3-L4,R1-R2,R3-R4} | "
      "TL(4,0){L1-L2,L3-L4}]");
  Chain f = face(g, 2, PointedRing::universal());
  CHECK(f.terms().begin()->first.divider_count() == 0);
  CHECK(face(g, 2, z).is_zero());
}

TEST_CASE("subquotients split as tensor products of the 0-divider pieces") {
  // dim C_p[w, j] = sum over compositions of p and w into j+1 positive parts
  // of the product of dim C_{p_t}[w_t, 0].
  std::map<std::pair<int, int>, std::size_t> base;
  for (int p = 1; p <= 4; ++p)
    for (int w = 1; w <= 3; ++w) base[{p, w}] = count_graffiti(subquotient(w, 0, 4), p);
  std::function<std::size_t(int, int, int)> conv = [&](int p, int w, int parts) -> std::size_t {
    if (parts == 1) return p >= 1 && w >= 1 && p <= 4 && w <= 3 ? base[{p, w}] : 0;
    std::size_t sum = 0;
    for (int p1 = 1; p1 < p; ++p1)
      for (int w1 = 1; w1 < w; ++w1) sum += base[{p1, w1}] * conv(p - p1, w - w1, parts - 1);
    return sum;
  };
  for (int p = 1; p <= 4; ++p)
    for (int w = 1; w <= 3; ++w)
      for (int j = 0; j <= 2; ++j) {
        CAPTURE(p);
        CAPTURE(w);
        CAPTURE(j);
        CHECK(count_graffiti(subquotient(w, j, 4), p) == conv(p, w, j + 1));
      }
}

TEST_CASE("export and specialization") {
  ComplexSpec s;
  s.max_degree = 2;
  ChainComplexData c = build_complex(s);
  auto j = c.to_json();
  CHECK(j["degrees"].size() == 2);
  CHECK(j["degrees"][1]["basis"].size() == 52);
  ChainComplexData f2 = c.specialize(PointedRing::with_a(Domain::prime_field(2), 1));
  ComplexSpec t = s;
  t.ring = PointedRing::with_a(Domain::prime_field(2), 1);
  check_same(f2, build_complex(t));
}
