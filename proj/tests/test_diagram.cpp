#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "tlloops/diagram.hpp"
#include "tlloops/errors.hpp"

using namespace tlloops;

namespace {

TLDiagram D(const char* s) { return TLDiagram::parse(s); }

// Oracle: every perfect matching of n+m points, filtered by a direct
// chord-interleaving test on the boundary circle.
std::set<std::string> brute_force(int n, int m) {
  std::set<std::string> out;
  int size = n + m;
  std::vector<int> partner(size, -1);
  auto pos = [&](int f) { return f < n ? f : n + (m - 1 - (f - n)); };
  std::function<void()> rec = [&] {
    int first = -1;
    for (int i = 0; i < size; ++i)
      if (partner[i] < 0) {
        first = i;
        break;
      }
    if (first < 0) {
      for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
          int p = pos(a), q = pos(partner[a]), r = pos(b), s = pos(partner[b]);
          if (p > q) std::swap(p, q);
          if (r > s) std::swap(r, s);
          if (p < r && r < q && q < s) return;
        }
      std::vector<std::pair<Endpoint, Endpoint>> pairs;
      auto ep = [&](int f) { return f < n ? Endpoint::L(f + 1) : Endpoint::R(f - n + 1); };
      for (int a = 0; a < size; ++a)
        if (a < partner[a]) pairs.emplace_back(ep(a), ep(partner[a]));
      out.insert(TLDiagram(n, m, pairs).encode());
      return;
    }
    for (int j = first + 1; j < size; ++j) {
      if (partner[j] >= 0) continue;
      partner[first] = j;
      partner[j] = first;
      rec();
      partner[first] = partner[j] = -1;
    }
  };
  rec();
  return out;
}

}  // namespace

TEST_CASE("construction and validation") {
  CHECK(TLDiagram(2, 2, {{Endpoint::L(1), Endpoint::R(1)}, {Endpoint::L(2), Endpoint::R(2)}}) == TLDiagram::identity(2));
  CHECK_THROWS_AS(TLDiagram(2, 2, {{Endpoint::L(1), Endpoint::R(2)}, {Endpoint::L(2), Endpoint::R(1)}}), DiagramError);
  CHECK_THROWS_AS(TLDiagram(1, 2, {}), DiagramError);
  CHECK_THROWS_AS(D("TL(2,0){L1-L1}"), DiagramError);
  CHECK_THROWS_AS(D("TL(2,0){"), ParseError);
  CHECK(D(" TL( 4,0 ){ L2-L3 , L1-L4 } ").encode() == "TL(4,0){L1-L4,L2-L3}");
  CHECK(TLDiagram().encode() == "TL(0,0){}");
  CHECK(D("TL(0,0){}") == TLDiagram());
}

TEST_CASE("enumeration matches brute force and Catalan numbers") {
  CHECK(enumerate_diagrams(4, 4).size() == 14);
  CHECK(enumerate_diagrams(4, 0).size() == 2);
  CHECK(enumerate_diagrams(0, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_diagrams(3, 0), DiagramError);
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; n + m <= 10; ++m) {
      if ((n + m) % 2) continue;
      auto list = enumerate_diagrams(n, m);
      CHECK(list.size() == catalan((n + m) / 2));
      auto oracle = brute_force(n, m);
      std::vector<std::string> enc;
      for (auto& d : list) enc.push_back(d.encode());
      CHECK(std::is_sorted(enc.begin(), enc.end()));
      CHECK(std::set<std::string>(enc.begin(), enc.end()) == oracle);
    }
  CHECK(enumerate_diagrams(6, 6).size() == catalan(6));
}

TEST_CASE("composition") {
  auto c = compose(D("TL(4,2){L1-R1,L2-L3,L4-R2}"), D("TL(2,0){L1-L2}"));
  CHECK(c.diagram == D("TL(4,0){L1-L4,L2-L3}"));
  CHECK(c.loops == 0);
  auto e = D("TL(2,2){L1-L2,R1-R2}");
  auto ee = compose(e, e);
  CHECK(ee.diagram == e);
  CHECK(ee.loops == 1);
  auto closed = compose(D("TL(0,4){R1-R2,R3-R4}"), D("TL(4,0){L1-L2,L3-L4}"));
  CHECK(closed.loops == 2);
  CHECK(compose(D("TL(0,4){R1-R2,R3-R4}"), D("TL(4,0){L1-L4,L2-L3}")).loops == 1);
  CHECK_THROWS_AS(compose(e, D("TL(4,0){L1-L2,L3-L4}")), DiagramError);
  for (int m : {0, 2, 4, 6})
    for (auto& d : enumerate_diagrams(4, m)) {
      auto r = compose(TLDiagram::identity(4), d);
      CHECK(r.diagram == d);
      CHECK(r.loops == 0);
    }
}

TEST_CASE("composition is associative with loop counts; ideal property; reflections") {
  std::mt19937 rng(11);
  auto pick = [&](int n, int m) {
    auto all = enumerate_diagrams(n, m);
    return all[rng() % all.size()];
  };
  for (int trial = 0; trial < 300; ++trial) {
    int a = 2 * (rng() % 3), b = 2 * (rng() % 3) + 2, c = 2 * (rng() % 3), e = 2 * (rng() % 3);
    auto d1 = pick(a, b), d2 = pick(b, c), d3 = pick(c, e);
    auto l12 = compose(d1, d2);
    auto left = compose(l12.diagram, d3);
    auto r23 = compose(d2, d3);
    auto right = compose(d1, r23.diagram);
    CHECK(left.diagram == right.diagram);
    CHECK(l12.loops + left.loops == r23.loops + right.loops);
    CHECK(l12.diagram.through_count() <= std::min(d1.through_count(), d2.through_count()));
    CHECK(reflect_lr(reflect_lr(d1)) == d1);
    CHECK(reflect_tb(reflect_tb(d1)) == d1);
    auto lr = compose(reflect_lr(d2), reflect_lr(d1));
    CHECK(lr.diagram == reflect_lr(l12.diagram));
    CHECK(lr.loops == l12.loops);
  }
}

TEST_CASE("reflections") {
  CHECK(reflect_lr(TLDiagram::identity(4)) == TLDiagram::identity(4));
  CHECK(reflect_tb(D("TL(4,0){L1-L2,L3-L4}")) == D("TL(4,0){L1-L2,L3-L4}"));
  CHECK(reflect_lr(D("TL(4,2){L1-R1,L2-L3,L4-R2}")) == D("TL(2,4){L1-R1,L2-R4,R2-R3}"));
  CHECK(reflect_tb(D("TL(4,0){L1-L4,L2-L3}")) == D("TL(4,0){L1-L4,L2-L3}"));
}

TEST_CASE("through count") {
  CHECK(TLDiagram::identity(4).through_count() == 4);
  CHECK(D("TL(4,4){L1-R3,L2-L3,L4-R4,R1-R2}").through_count() == 2);
  CHECK(D("TL(4,4){L1-L4,L2-L3,R1-R2,R3-R4}").through_count() == 0);
}

TEST_CASE("slicing") {
  auto [left, right] = slice(D("TL(4,4){L1-R3,L2-L3,L4-R4,R1-R2}"));
  CHECK(left.diagram == D("TL(4,2){L1-R1,L2-L3,L4-R2}"));
  CHECK(right.diagram == D("TL(2,4){L1-R3,L2-R4,R1-R2}"));
  std::map<int, int> per_k;
  for (auto& d : enumerate_diagrams(4, 4)) {
    auto [l, r] = slice(d);
    CHECK(unslice(l, r) == d);
    CHECK(l.stubs() == d.through_count());
    ++per_k[d.through_count()];
  }
  // I_k basis is in bijection with S(4,k) x S^v(k,4)
  for (auto [k, count] : per_k) {
    auto nl = cell_basis(4, k, CellSide::left_cell).size();
    auto nr = cell_basis(4, k, CellSide::right_cell).size();
    CHECK(static_cast<std::size_t>(count) == nl * nr);
  }
  auto [l0, r0] = slice(D("TL(4,4){L1-L4,L2-L3,R1-R2,R3-R4}"));
  CHECK(l0.diagram == D("TL(4,0){L1-L4,L2-L3}"));
  CHECK(r0.diagram == D("TL(0,4){R1-R2,R3-R4}"));
  auto two = cell_basis(4, 2, CellSide::left_cell);
  CHECK_THROWS_AS(unslice(two[0], r0), DiagramError);
}

TEST_CASE("cell modules and closing up") {
  auto right = cell_basis(4, 2, CellSide::right_cell);
  CHECK(right.size() == 3);
  CHECK(cell_basis(4, 0, CellSide::left_cell).size() == 2);
  auto top = cell_basis(4, 4, CellSide::left_cell);
  REQUIRE(top.size() == 1);
  CHECK(top[0].diagram.is_identity());
  CHECK_THROWS_AS(cell_basis(4, 1, CellSide::left_cell), DiagramError);
  CHECK_THROWS_AS(LinkState(D("TL(4,2){L1-L2,L3-L4,R1-R2}"), CellSide::left_cell), DiagramError);

  LinkState s12(D("TL(2,4){L1-R1,L2-R2,R3-R4}"), CellSide::right_cell);
  LinkState s14(D("TL(2,4){L1-R1,L2-R4,R2-R3}"), CellSide::right_cell);
  CHECK(close_up(s12).diagram == D("TL(0,4){R1-R2,R3-R4}"));
  CHECK(close_up(s14).diagram == D("TL(0,4){R1-R4,R2-R3}"));
  std::set<std::string> hit;
  for (auto& s : right) hit.insert(close_up(s).diagram.encode());
  CHECK(hit.size() == 2);
  CHECK_THROWS_AS(close_up(top[0]), DiagramError);
}

TEST_CASE("letters") {
  CHECK(enumerate_letters(2, 2).size() == 9);
  CHECK(enumerate_letters(0, 2).size() == 6);
  CHECK(enumerate_letters(2, 0).size() == 6);
  CHECK(enumerate_letters(0, 0).size() == 4);
  CHECK_THROWS_AS(enumerate_letters(1, 0), DiagramError);
  int pivots = 0, single = 0, total = 0;
  std::map<std::pair<int, int>, int> single_by_type;
  for (int kl : {0, 2})
    for (int kr : {0, 2})
      for (auto& l : enumerate_letters(kl, kr)) {
        ++total;
        CHECK(Letter::parse(l.encode()) == l);
        CHECK(l.loops_touched() >= 1);
        if (l.is_pivot()) {
          ++pivots;
        } else {
          ++single;
          ++single_by_type[{kl, kr}];
        }
      }
  CHECK(total == 25);
  CHECK(pivots == 13);
  CHECK(single == 12);
  CHECK(single_by_type[{0, 0}] == 2);
  CHECK(single_by_type[{0, 2}] == 3);
  CHECK(single_by_type[{2, 0}] == 3);
  CHECK(single_by_type[{2, 2}] == 4);
  auto x = Letter::parse("LT(0,0){left=N1-N2,N3-N4;right=N1-N4,N2-N3}");
  CHECK(x.loops_touched() == 1);
  CHECK(x.encode() == "LT(0,0){left=N1-N2,N3-N4;right=N1-N4,N2-N3}");
  auto twice = Letter::parse("LT(0,0){left=N1-N2,N3-N4;right=N1-N2,N3-N4}");
  CHECK(twice.is_pivot());
  for (auto& h : {x.left, x.right}) {
    CHECK(HalfMatching::from_entering(h.to_entering()) == h);
    CHECK(HalfMatching::from_leaving(h.to_leaving()) == h);
  }
}
