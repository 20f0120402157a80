#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tlloops/graffito.hpp"

using namespace tlloops;

namespace {

const char* kX = "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,0){L1-L4,L2-L3}]";
const char* kXh = "G(cc)[TL(0,4){R1-R4,R2-R3} | TL(4,0){L1-L2,L3-L4}]";
const char* kR = "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R1,L2-L3,L4-R4,R2-R3} | TL(4,0){L1-L2,L3-L4}]";
const char* kThreeBar =
    "G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R3,L2-L3,L4-R4,R1-R2} | TL(4,4){L1-L2,L3-R1,L4-R2,R3-R4} | "
    "TL(4,0){L1-L4,L2-L3}]";

std::string y_term(const char* b1, const char* b2) {
  return std::string("G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){") + b1 + "} | TL(4,4){" + b2 +
         "} | TL(4,0){L1-L2,L3-L4}]";
}

const char* kB1a = "L1-R3,L2-L3,L4-R4,R1-R2";
const char* kB1b = "L1-R1,L2-L3,L4-R2,R3-R4";
const char* kB2a = "L1-L2,L3-R1,L4-R4,R2-R3";
const char* kB2b = "L1-R1,L2-R4,L3-L4,R2-R3";

Chain phi_y(const PointedRing& ring, bool augmented) {
  Chain c(ring, EndSpec{false, false, augmented}, 4, 3);
  c.add(Graffito::parse(y_term(kB1a, kB2a)), ring.from_int(1));
  c.add(Graffito::parse(y_term(kB1b, kB2b)), ring.from_int(1));
  c.add(Graffito::parse(y_term(kB1a, kB2b)), ring.from_int(-1));
  c.add(Graffito::parse(y_term(kB1b, kB2a)), ring.from_int(-1));
  return c;
}

Chain of(const char* text, const PointedRing& ring, bool augmented = false) {
  return Chain::of(Graffito::parse(text), ring, augmented);
}

}  // namespace

TEST_CASE("construction and statistics") {
  Graffito x = Graffito::parse(kX);
  CHECK(x.degree() == 1);
  CHECK(x.loop_count() == 1);
  CHECK(x.divider_count() == 0);
  CHECK(x.encode() == kX);
  CHECK(Graffito::parse(kXh).degree() == 1);
  CHECK(Graffito::parse("G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,0){L1-L2,L3-L4}]").loop_count() == 2);
  CHECK(Graffito::parse(y_term(kB1a, kB2a)).loop_count() == 2);
  CHECK(Graffito::parse(y_term(kB1a, kB2a)).divider_count() == 0);

  CHECK_THROWS_AS(Graffito::parse("G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,4){L1-R1,L2-R2,L3-R3,L4-R4} | "
                                  "TL(4,0){L1-L2,L3-L4}]"),
                  GraffitoError);
  CHECK_THROWS(Graffito::parse("G(cc)[TL(0,4){R1-R2,R3-R4} | TL(4,2){L1-L2,L3-R1,L4-R2}]"));
  CHECK_THROWS(Graffito::parse("G(oc)[TL(2,4){L1-L2,R1-R2,R3-R4} | TL(4,0){L1-L2,L3-L4}]"));
  CHECK(Graffito::parse("G(oc)[TL(2,4){L1-R1,L2-R2,R3-R4} | TL(4,0){L1-L2,L3-L4}]").ends().left_open);
}

TEST_CASE("faces of the two-bar generator and a three-bar graffito") {
  const PointedRing z = PointedRing::universal();
  Graffito r = Graffito::parse(kR);
  CHECK(face(r, 0, z) == of(kXh, z));
  CHECK(face(r, 1, z) == of(kX, z));
  CHECK(differential(of(kR, z)) == of(kXh, z) - of(kX, z));

  Graffito fig = Graffito::parse(kThreeBar);
  Chain f1 = face(fig, 1, z);
  REQUIRE(f1.terms().size() == 1);
  CHECK(f1.terms().begin()->second == z.a());
  CHECK(face(fig, 0, z).terms().begin()->second == z.from_int(1));

  CHECK_THROWS(face(r, 2, z));
  // degree-one faces vanish without the augmentation
  CHECK(face(Graffito::parse(kX), 0, z).is_zero());
  Chain aug = face(Graffito::parse(kX), 0, z, true);
  CHECK(aug.coefficient(Graffito::empty(4)) == z.a());
}

TEST_CASE("differential of the degree-three generator") {
  const PointedRing z = PointedRing::universal();
  Chain x = of(kX, z, true), xh = of(kXh, z, true), r = of(kR, z, true);
  Chain lhs = differential(phi_y(z, true));
  Chain rhs = product(x, xh).scaled(z.from_int(2)) - r.scaled(z.a() * z.from_int(2));
  CHECK(lhs == rhs);
  CHECK(differential(x) == Chain::of(Graffito::empty(4), z, true).scaled(z.a()));
  CHECK(differential(x) == differential(xh));
}

TEST_CASE("open ends kill same-side composites") {
  const PointedRing z = PointedRing::universal();
  std::mt19937_64 rng(3);
  int killed = 0;
  for (int t = 0; t < 300; ++t) {
    Graffito g = random_graffito(4, EndSpec{true, true, false}, 2, rng);
    for (int i = 0; i < 2; ++i) {
      Chain f = face(g, i, z);
      if (f.is_zero()) ++killed;
      for (const auto& [h, v] : f.terms()) CHECK(h.ends() == g.ends());
    }
  }
  CHECK(killed > 0);
}

TEST_CASE("d squared vanishes on random chains") {
  const PointedRing z = PointedRing::universal();
  std::mt19937_64 rng(11);
  for (const char* code : {"cc", "oc", "co", "oo"}) {
    EndSpec e = EndSpec::from_code(code);
    for (int deg = 2; deg <= 5; ++deg)
      for (int t = 0; t < 30; ++t) {
        Chain c(z, e, 4, deg);
        c.add(random_graffito(4, e, deg, rng), z.from_int(1));
        c.add(random_graffito(4, e, deg, rng), z.a());
        CHECK(differential(differential(c)).is_zero());
      }
  }
  for (int t = 0; t < 30; ++t) {
    Chain c = Chain::of(random_graffito(4, EndSpec{}, 2, rng), z, true);
    CHECK(differential(differential(c)).is_zero());
    Chain c6 = Chain::of(random_graffito(6, EndSpec{}, 3, rng), z);
    CHECK(differential(differential(c6)).is_zero());
  }
}

TEST_CASE("graded Leibniz rule") {
  std::mt19937_64 rng(5);
  const PointedRing z = PointedRing::universal();
  const PointedRing z0 = PointedRing::with_a(Domain::integers(), 0);
  for (int t = 0; t < 150; ++t) {
    int p = 1 + t % 3, q = 1 + (t / 3) % 3;
    Graffito gx = random_graffito(4, EndSpec{}, p, rng), gy = random_graffito(4, EndSpec{}, q, rng);
    {
      Chain x = Chain::of(gx, z, true), y = Chain::of(gy, z, true);
      Chain rhs = product(differential(x), y) + product(x, differential(y)).scaled(z.from_int(p % 2 ? -1 : 1));
      CHECK(differential(product(x, y)) == rhs);
    }
    {
      Chain x = Chain::of(gx, z0), y = Chain::of(gy, z0);
      Chain rhs = product(differential(x), y) + product(x, differential(y)).scaled(z0.from_int(p % 2 ? -1 : 1));
      CHECK(differential(product(x, y)) == rhs);
    }
    Graffito xy = product(gx, gy);
    CHECK(xy.degree() == p + q);
    CHECK(xy.loop_count() == gx.loop_count() + gy.loop_count());
    CHECK(xy.divider_count() == gx.divider_count() + gy.divider_count() + 1);
    CHECK(xy.nondivider_count() == gx.nondivider_count() + gy.nondivider_count());
  }
  CHECK(product(Graffito::parse(kX), Graffito::parse(kXh)).divider_count() == 1);
  CHECK(product(Graffito::empty(4), Graffito::parse(kX)) == Graffito::parse(kX));
  CHECK_THROWS(product(Graffito::parse("G(co)[TL(0,4){R1-R2,R3-R4} | TL(4,2){L1-R1,L2-L3,L4-R2}]"),
                       Graffito::parse(kX)));
}

TEST_CASE("involutions") {
  const PointedRing z = PointedRing::universal();
  Graffito x = Graffito::parse(kX), xh = Graffito::parse(kXh), r = Graffito::parse(kR);
  CHECK(involution_tb(x) == x);
  CHECK(involution_tb(xh) == xh);
  CHECK(involution_lr(x) == xh);
  CHECK(involution_lr(xh) == x);
  CHECK(involution_tb(r) == r);
  CHECK(involution_lr(r) == r);
  CHECK(involution_tb(phi_y(z, false)) == phi_y(z, false));
  CHECK(involution_lr(phi_y(z, false)) == phi_y(z, false));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    int p = 1 + t % 4;
    EndSpec e = EndSpec::from_code(t % 8 < 4 ? "cc" : "oc");
    Graffito g = random_graffito(4, e, p, rng);
    CHECK(involution_tb(involution_tb(g)) == g);
    CHECK(involution_lr(involution_lr(g)) == g);
    Chain c = Chain::of(g, z);
    CHECK(differential(involution_tb(c)) == involution_tb(differential(c)));
    CHECK(differential(involution_lr(c)) == involution_lr(differential(c)).scaled(z.from_int(p % 2 ? 1 : -1)));
    if (e.closed()) {
      Graffito h = random_graffito(4, e, 1 + t % 3, rng);
      CHECK(involution_lr(product(g, h)) == product(involution_lr(h), involution_lr(g)));
    }
  }
}

TEST_CASE("words and pivots") {
  auto w = to_word(Graffito::parse(kX));
  REQUIRE(w.size() == 1);
  CHECK(w[0].left.encode() == "N1-N2,N3-N4");
  CHECK(w[0].right.encode() == "N1-N4,N2-N3");

  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    EndSpec e = EndSpec::from_code(std::vector<const char*>{"cc", "oc", "co", "oo"}[t % 4]);
    Graffito g = random_graffito(4, e, 1 + t % 5, rng);
    auto word = to_word(g);
    CHECK(static_cast<int>(word.size()) == g.degree());
    CHECK(from_word(word) == g);
  }
  CHECK_THROWS_AS(from_word({Letter::parse("LT(0,2){left=N1-N2,N3-N4;right=N1-N2,N3-S1,N4-S2}"),
                             Letter::parse("LT(0,0){left=N1-N2,N3-N4;right=N1-N2,N3-N4}")}),
                  GraffitoError);

  CHECK(pivot_sequence(Graffito::parse(y_term(kB1a, kB2a))).size() == 1);
  CHECK(pivot_sequence(Graffito::parse(kX)).empty());
  int three = 0;
  for (int t = 0; t < 2000 && three < 50; ++t) {
    Graffito g = random_graffito(4, EndSpec{}, 1 + t % 4, rng);
    if (g.divider_count() != 0) continue;
    auto piv = pivot_sequence(g);
    CHECK(static_cast<int>(piv.size()) == g.loop_count() - 1);
    if (g.loop_count() == 3) ++three;
  }
  CHECK(three > 0);
  CHECK_THROWS(pivot_sequence(product(Graffito::parse(kX), Graffito::parse(kX))));
}

TEST_CASE("close ends") {
  std::mt19937_64 rng(17);
  Graffito x = Graffito::parse(kX);
  CHECK(close_ends(x) == x);
  Graffito o = Graffito::parse("G(oo)[TL(2,4){L1-R1,L2-R4,R2-R3} | TL(4,2){L1-R1,L2-R2,L3-L4}]");
  Graffito c = close_ends(o);
  CHECK(c.ends().closed());
  CHECK(c.degree() == 1);
  CHECK(c.loop_count() == 1);
  for (int t = 0; t < 50; ++t) {
    Graffito g = random_graffito(4, EndSpec{true, false, false}, 1 + t % 3, rng);
    CHECK(close_ends(g).degree() == g.degree());
  }
}

TEST_CASE("chain text round trip") {
  const PointedRing z = PointedRing::universal();
  Chain c = phi_y(z, false) + of(kThreeBar, z).scaled(z.a() + z.from_int(2));
  CHECK(Chain::parse(c.str(), z) == c);
  CHECK_THROWS(Chain::parse("0", z));
  Chain diff = Chain::parse(std::string(kX) + " - a*" + kXh, z);
  CHECK(diff.coefficient(Graffito::parse(kX)) == z.from_int(1));
  CHECK(diff.coefficient(Graffito::parse(kXh)) == -z.a());
  CHECK(Chain::parse(std::string("-") + kX + " + 2*" + kXh, z) ==
        Chain::parse(std::string("-1*") + kX + " + 2*" + kXh, z));
  CHECK_THROWS(Chain::parse(std::string(kX) + " - ", z));
}
