#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlloops/freedga.hpp"
#include "tlloops/homology.hpp"

using namespace tlloops;

namespace {

const PointedRing kZa = PointedRing::universal();
PointedRing zero_a(Domain d = Domain::integers()) { return PointedRing::with_a(d, 0); }

}  // namespace

TEST_CASE("polynomial arithmetic and text") {
  FreeDGA f = four_model(kZa);
  CHECK((f.gen("x") * f.gen("xh")).str() == "x.xh");
  CHECK((f.gen("x") + f.gen("r")) * f.gen("y") == f.parse("x.y + r.y"));
  CHECK(f.parse("2*x.xh.r - a*y").scaled(kZa.from_int(0)).is_zero());
  NCPoly p = f.parse("2*x.xh.r - a*y");
  CHECK(f.parse(p.str()) == p);
  CHECK(p.str() == "-a*y + 2*x.xh.r");
  CHECK(f.parse("x̂.x") == f.parse("xh.x"));
  CHECK(f.parse("(a + 2)*r - a").coefficient({2}) == kZa.a() + kZa.from_int(2));
  CHECK(f.parse("(a + 2)*r - a").coefficient({}) == -kZa.a());
  CHECK(f.parse("-x + x").is_zero());
  CHECK(f.parse("0").is_zero());
  CHECK_THROWS(f.parse("x.q"));
  CHECK_THROWS(f.parse("x +"));
  CHECK_THROWS(f.parse("(x"));
  FreeDGA m = minimal_model(4, kZa);
  CHECK_THROWS_AS(f.gen("x") + m.gen("x1"), AlgebraError);
  CHECK_FALSE(p.degree().has_value());
  CHECK(f.parse("2*x.xh - a*r").degree() == 2);
  CHECK_FALSE((f.gen("x") + f.gen("r")).degree().has_value());
}

TEST_CASE("model differentials") {
  FreeDGA m4 = minimal_model(4, kZa);
  CHECK(m4.generators().size() == 2);
  CHECK(m4.generators()[1].name == "x3");
  CHECK(m4.generators()[1].degree == 3);
  CHECK(m4.d_of(1) == m4.parse("2*x1.x1"));
  CHECK(m4.d(m4.parse("x1.x3")) == m4.parse("a*x3 - 2*x1.x1.x1"));
  CHECK(minimal_model(4, zero_a()).d(minimal_model(4, zero_a()).parse("x1.x3")).str() == "-2*x1.x1.x1");
  FreeDGA m2 = minimal_model(2, kZa);
  CHECK(m2.generators().size() == 1);
  CHECK(m2.d_of(0) == m2.constant(kZa.a()));
  FreeDGA m6 = minimal_model(6, kZa);
  CHECK(m6.d_of(2) == m6.parse("3*x1.x3 + 3*x3.x1"));
  for (int n = 2; n <= 12; n += 2) CHECK_NOTHROW(minimal_model(n, kZa).verify_d_squared());
  CHECK_THROWS(minimal_model(3, kZa));

  FreeDGA f = four_model(kZa);
  CHECK(f.d(f.gen("r")) == f.parse("xh - x"));
  CHECK(f.d(f.gen("y")) == f.parse("2*x.xh - 2*a*r"));
  CHECK(f.d(f.d(f.gen("y"))).is_zero());
  CHECK_THROWS_AS(f.set_d("r", f.gen("x").scaled(kZa.a())), AlgebraError);
  CHECK_THROWS_AS(f.set_d("y", f.gen("r")), AlgebraError);
}

TEST_CASE("d preserves weight") {
  FreeDGA f = four_model(kZa);
  for (int p = 1; p <= 5; ++p)
    for (const Word& w : f.words_of_degree(p)) {
      NCPoly dw = f.d(f.word(w, kZa.from_int(1)));
      for (const auto& [v, c] : dw.terms()) CHECK(f.signature().weight(v) + c.weight() == f.signature().weight(w));
    }
}

TEST_CASE("psi and phi are chain maps") {
  PolyMorphism s = psi(kZa);
  CHECK(s.image(1) == s.target().parse("y + 2*x.r"));
  CHECK(s.check_chain_map().ok);
  CHECK(s.target().d(s.image(1)) == s.target().parse("2*x.x"));

  LoopsMorphism f = phi(kZa);
  ChainMapReport r = f.check_chain_map();
  CHECK(r.ok);
  CHECK(f.apply(s.apply(s.source().gen("x1")), 1) == f.image(0));
  for (int g = 0; g < 4; ++g)
    for (const auto& [x, v] : f.image(g).terms()) CHECK(x.loop_count() == f.source().generators()[g].weight);

  // corrupt phi(r): drop the two-bar picture for its sign-flipped copy
  LoopsMorphism bad = f;
  bad.set_image("r", f.image(2).scaled(kZa.from_int(-1)));
  ChainMapReport rb = bad.check_chain_map();
  CHECK_FALSE(rb.ok);
  CHECK(rb.defects.size() >= 1);
  CHECK(rb.defects[0].generator == "r");

  for (const auto& ring : {zero_a(), zero_a(Domain::prime_field(2)), PointedRing::with_a(Domain::integers(), 3)}) {
    CHECK(psi(ring).check_chain_map().ok);
    CHECK(phi(ring).check_chain_map().ok);
  }
}

TEST_CASE("phi commutes with the involutions") {
  LoopsMorphism f = phi(kZa);
  const FreeDGA& a = f.source();
  for (int g = 0; g < 4; ++g) {
    int deg = a.generators()[g].degree;
    NCPoly p = a.word({g}, kZa.from_int(1));
    CHECK(involution_tb(f.image(g)) == f.apply(a.sigma_tb(p), deg));
    CHECK(involution_lr(f.image(g)) == f.apply(a.sigma_lr(p), deg));
  }
  NCPoly w = a.parse("x.r.xh + 3*y.x");
  CHECK(involution_lr(f.apply(w, 4)) == f.apply(a.sigma_lr(w), 4));
}

TEST_CASE("model involutions") {
  FreeDGA f = four_model(kZa);
  CHECK(f.sigma_lr(f.parse("x.r.y")) == f.parse("y.r.xh"));
  CHECK(f.sigma_tb(f.parse("x.r.y")) == f.parse("x.r.y"));
  CHECK(check_involution_relations(f, 200, 0).ok);
  CHECK(check_involution_relations(minimal_model(6, kZa), 100, 1).ok);
}

TEST_CASE("alpha boundary identity") {
  CHECK(alpha_boundary_defect(zero_a()).is_zero());
  CHECK(alpha_boundary_defect(zero_a(Domain::prime_field(2))).is_zero());
  CHECK(alpha_boundary_defect(zero_a(Domain::rationals())).is_zero());
  CHECK_FALSE(alpha_boundary_defect(zero_a(), "r.y - y.r - 2*x.r.r").is_zero());
  CHECK_THROWS(alpha_boundary_defect(kZa));
}

TEST_CASE("truncated complexes") {
  FreeDGA m = minimal_model(4, zero_a());
  ChainComplexData c = truncated_complex(m, 4, true);
  CHECK(c.dim(1) == 1);
  CHECK(c.dim(2) == 1);
  CHECK(c.dim(3) == 2);
  CHECK(c.basis[3] == std::vector<std::string>{"x3", "x1.x1.x1"});
  // compositions of p into parts 1 and 3
  std::vector<std::size_t> comp{1, 1, 1, 2, 3, 4, 6, 9, 13};
  ChainComplexData big = truncated_complex(m, 8, false);
  for (int p = 0; p <= 8; ++p) CHECK(big.dim(p) == comp[p]);
  CHECK(truncated_complex(four_model(kZa), 2, true).basis[2] ==
        std::vector<std::string>{"r", "x.x", "x.xh", "xh.x", "xh.xh"});

  ChainComplexData m12 = truncated_complex(minimal_model(12, kZa), 6, true);
  CHECK(validate_d_squared(m12).ok);
  CHECK(validate_d_squared(truncated_complex(minimal_model(12, kZa), 6, false)).ok);

  FreeDGA q = minimal_model(4, zero_a(Domain::rationals()));
  auto h = homology(truncated_complex(q, 5, true), 1, 4);
  CHECK(h[0].rank == 1);
  CHECK(h[1].rank == 0);
  CHECK(h[2].rank == 0);
  CHECK(h[3].rank == 1);

  ChainComplexData z = truncated_complex(m, 5, true);
  std::vector<Scalar> v(z.dim(3), Scalar::zero(Domain::integers()));
  v[1] = Scalar::from_int(Domain::integers(), 2);
  CHECK(is_boundary(z, v, 3));
  v[1] = Scalar::from_int(Domain::integers(), 1);
  CHECK(is_cycle(z, v, 3));
  CHECK_FALSE(is_boundary(z, v, 3));
}

TEST_CASE("specialization commutes with truncation") {
  for (const auto& ring : {zero_a(), PointedRing::with_a(Domain::prime_field(5), 2), zero_a(Domain::rationals())}) {
    ChainComplexData direct = truncated_complex(four_model(ring), 4, false);
    ChainComplexData via = truncated_complex(four_model(kZa), 4, false).specialize(ring);
    ChainComplexData spec_alg = truncated_complex(four_model(kZa).specialize(ring), 4, false);
    for (int p = 0; p <= 4; ++p) {
      CHECK(direct.d(p) == via.d(p));
      CHECK(direct.d(p) == spec_alg.d(p));
    }
  }
}
