#include "tlloops/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "tlloops/complex.hpp"
#include "tlloops/diagram.hpp"
#include "tlloops/freedga.hpp"
#include "tlloops/graffito.hpp"
#include "tlloops/homology.hpp"

namespace tlloops {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

class Runner {
 public:
  explicit Runner(std::string suite) { report_.suite = std::move(suite); }

  void check(std::string name, std::string claim, const std::function<Outcome()>& body) {
    CheckResult r;
    r.name = std::move(name);
    r.claim = std::move(claim);
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      r.passed = o.passed;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(r));
  }

  SuiteReport finish() {
    std::stable_sort(report_.checks.begin(), report_.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return std::move(report_);
  }

 private:
  SuiteReport report_;
};

/// Collects the first few failures of a property loop.
class Tally {
 public:
  void count() { ++total_; }
  void bad(const std::string& what) {
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(what);
  }
  Outcome outcome() const {
    std::string d = std::to_string(total_) + " cases";
    if (failures_ == 0) return pass(d);
    d += ", " + std::to_string(failures_) + " failed";
    for (const auto& e : examples_) d += "; " + e;
    return fail(d);
  }

 private:
  std::size_t total_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> examples_;
};

PointedRing zero_a(const Domain& d) { return PointedRing::with_a(d, 0); }

std::vector<PointedRing> rings_or(const VerifyOptions& o, std::vector<std::string> fallback) {
  std::vector<PointedRing> out;
  for (const auto& n : o.rings.empty() ? fallback : o.rings) out.push_back(parse_ring(n, 0));
  return out;
}

ComplexSpec subquotient(const PointedRing& ring, int w, int j, int max_degree, const char* ends = "cc") {
  ComplexSpec s;
  s.ring = ring;
  s.ends = EndSpec::from_code(ends);
  s.max_degree = max_degree;
  s.weight = w;
  s.dividers = j;
  s.subquotient = true;
  return s;
}

std::string describe(const std::vector<HomologyGroup>& h, const Domain& d) {
  std::string out;
  for (const auto& g : h) out += (out.empty() ? "" : ", ") + g.str(d);
  return "[" + out + "]";
}

/// Expected: R in degree `at` (or nowhere when at < 0), zero elsewhere.
bool single_copy(const std::vector<HomologyGroup>& h, int at) {
  for (const auto& g : h) {
    if (!g.torsion.empty()) return false;
    if (g.rank != (g.degree == at ? 1u : 0u)) return false;
  }
  return true;
}

std::vector<Scalar> to_vector(const Chain& c, const ChainComplexData& cx, int p) {
  std::unordered_map<std::string, std::size_t> pos;
  const auto& basis = cx.basis.at(static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  std::vector<Scalar> v(basis.size(), Scalar::zero(cx.ring.domain()));
  for (const auto& [g, s] : c.terms()) {
    auto it = pos.find(g.encode());
    if (it == pos.end()) throw std::invalid_argument("term not in basis: " + g.encode());
    v[it->second] = s;
  }
  return v;
}

std::vector<Scalar> combine(const std::vector<Scalar>& x, const std::vector<Scalar>& y, long sy) {
  std::vector<Scalar> out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + y[i] * Scalar::from_int(y[i].domain(), sy);
  return out;
}

/// True when c generates the single free class of degree p: c = +-rep mod boundaries.
bool generates(const ChainComplexData& cx, const std::vector<Scalar>& c, const std::vector<Scalar>& rep, int p) {
  return is_boundary(cx, combine(c, rep, -1), p) || is_boundary(cx, combine(c, rep, 1), p);
}

// ---------------------------------------------------------------------------

SuiteReport suite_d_squared(const VerifyOptions& o) {
  Runner r("d-squared");
  r.check("closed-universal", "d^2 = 0 on the reduced complex over Z[a] through the top degree", [&] {
    ComplexSpec s;
    s.max_degree = o.max_degree;
    ChainComplexData c = build_complex(s, o.threads);
    DSquaredReport d = validate_d_squared(c);
    return d.ok ? pass("degrees 1.." + std::to_string(o.max_degree) + ", top basis " +
                       std::to_string(c.dim(o.max_degree)))
                : fail(d.str());
  });
  r.check("augmented-universal", "d^2 = 0 on the augmented complex over Z[a]", [&] {
    ComplexSpec s;
    s.ends.augmented = true;
    s.max_degree = std::min(o.max_degree, 4);
    DSquaredReport d = validate_d_squared(build_complex(s, o.threads));
    return d.ok ? pass() : fail(d.str());
  });
  r.check("open-ends-universal", "d^2 = 0 with one or both ends open", [&] {
    for (const char* e : {"oc", "co", "oo"}) {
      ComplexSpec s;
      s.ends = EndSpec::from_code(e);
      s.max_degree = std::min(o.max_degree, 4);
      DSquaredReport d = validate_d_squared(build_complex(s, o.threads));
      if (!d.ok) return fail(std::string(e) + ": " + d.str());
    }
    return pass("oc, co, oo");
  });
  r.check("six-points", "d^2 = 0 for 2n = 6", [&] {
    ComplexSpec s;
    s.two_n = 6;
    s.max_degree = 3;
    DSquaredReport d = validate_d_squared(build_complex(s, o.threads));
    return d.ok ? pass() : fail(d.str());
  });
  r.check("model-truncations", "d^2 = 0 on minimal models 2n <= 12 and the four-generator model through degree 6",
          [&] {
            const PointedRing za = PointedRing::universal();
            for (int n = 2; n <= 12; n += 2)
              for (bool nu : {true, false}) {
                DSquaredReport d = validate_d_squared(truncated_complex(minimal_model(n, za), 6, nu));
                if (!d.ok) return fail("minimal " + std::to_string(n) + ": " + d.str());
              }
            DSquaredReport d = validate_d_squared(truncated_complex(four_model(za), 6, true));
            return d.ok ? pass("2n = 2..12, unital and nonunital") : fail("four model: " + d.str());
          });
  return r.finish();
}

SuiteReport suite_leibniz(const VerifyOptions& o) {
  Runner r("leibniz");
  auto run = [&](const PointedRing& ring, bool augmented, int two_n, std::uint64_t salt) {
    std::mt19937_64 rng(o.seed + salt);
    Tally t;
    for (int k = 0; k < o.samples; ++k) {
      int p = 1 + k % 3, q = 1 + (k / 3) % 3;
      Graffito gx = random_graffito(two_n, EndSpec{}, p, rng), gy = random_graffito(two_n, EndSpec{}, q, rng);
      Chain x = Chain::of(gx, ring, augmented), y = Chain::of(gy, ring, augmented);
      Chain lhs = differential(product(x, y));
      Chain rhs = product(differential(x), y) + product(x, differential(y)).scaled(ring.from_int(p % 2 ? -1 : 1));
      t.count();
      if (!(lhs == rhs)) t.bad(gx.encode() + " * " + gy.encode());
    }
    return t.outcome();
  };
  r.check("augmented-universal", "d(xy) = d(x)y + (-1)^|x| x d(y) in the augmented complex over Z[a]",
          [&] { return run(PointedRing::universal(), true, 4, 1); });
  r.check("reduced-zero-a", "the same rule in the reduced complex with a = 0",
          [&] { return run(zero_a(Domain::integers()), false, 4, 2); });
  r.check("six-points", "the same rule for 2n = 6 over Z[a]", [&] { return run(PointedRing::universal(), true, 6, 3); });
  r.check("model-algebras", "the model differentials are derivations", [&] {
    std::mt19937_64 rng(o.seed + 4);
    Tally t;
    FreeDGA f = four_model(PointedRing::universal());
    for (int k = 0; k < o.samples; ++k) {
      auto words = f.words_of_degree(1 + k % 3), more = f.words_of_degree(1 + (k / 3) % 3);
      const Word& u = words[rng() % words.size()];
      const Word& v = more[rng() % more.size()];
      NCPoly pu = f.word(u, f.ring().from_int(1)), pv = f.word(v, f.ring().from_int(1));
      int deg = f.signature().degree(u);
      NCPoly rhs = f.d(pu) * pv + (pu * f.d(pv)).scaled(f.ring().from_int(deg % 2 ? -1 : 1));
      t.count();
      if (!(f.d(pu * pv) == rhs)) t.bad(f.signature().word_text(u) + " * " + f.signature().word_text(v));
    }
    return t.outcome();
  });
  return r.finish();
}

SuiteReport suite_involutions(const VerifyOptions& o) {
  Runner r("involutions");
  const PointedRing za = PointedRing::universal();
  r.check("phi-generators", "tb fixes each image of phi and lr realizes the generator swap x <-> xh", [&] {
    LoopsMorphism f = phi(za);
    const FreeDGA& a = f.source();
    for (int g = 0; g < 4; ++g) {
      int deg = a.generators()[g].degree;
      NCPoly p = a.word({g}, za.from_int(1));
      if (!(involution_tb(f.image(g)) == f.image(g))) return fail("tb moves phi(" + a.generators()[g].name + ")");
      if (!(involution_tb(f.image(g)) == f.apply(a.sigma_tb(p), deg)))
        return fail("tb mismatch on " + a.generators()[g].name);
      if (!(involution_lr(f.image(g)) == f.apply(a.sigma_lr(p), deg)))
        return fail("lr mismatch on " + a.generators()[g].name);
    }
    return pass("x, xh, r, y");
  });
  r.check("phi-words", "phi commutes with both involutions on random words", [&] {
    LoopsMorphism f = phi(za);
    const FreeDGA& a = f.source();
    std::mt19937_64 rng(o.seed + 11);
    Tally t;
    for (int k = 0; k < o.samples; ++k) {
      int deg = 1 + k % 4;
      auto words = a.words_of_degree(deg);
      NCPoly p = a.word(words[rng() % words.size()], za.from_int(1));
      t.count();
      if (!(involution_tb(f.apply(p, deg)) == f.apply(a.sigma_tb(p), deg)) ||
          !(involution_lr(f.apply(p, deg)) == f.apply(a.sigma_lr(p), deg)))
        t.bad(p.str());
    }
    return t.outcome();
  });
  for (int deg = 1; deg <= 4; ++deg)
    r.check("random-graffiti-degree-" + std::to_string(deg),
            "d tb = tb d and d lr = (-1)^(p+1) lr d; both are involutions; lr reverses products", [&, deg] {
              std::mt19937_64 rng(o.seed + 100 + static_cast<std::uint64_t>(deg));
              Tally t;
              for (int k = 0; k < o.samples; ++k) {
                Graffito g = random_graffito(4, EndSpec{}, deg, rng);
                Chain c = Chain::of(g, za);
                t.count();
                if (!(involution_tb(involution_tb(g)) == g) || !(involution_lr(involution_lr(g)) == g))
                  t.bad("not an involution: " + g.encode());
                if (!(differential(involution_tb(c)) == involution_tb(differential(c))))
                  t.bad("tb: " + g.encode());
                if (!(differential(involution_lr(c)) ==
                      involution_lr(differential(c)).scaled(za.from_int(deg % 2 ? 1 : -1))))
                  t.bad("lr: " + g.encode());
                Graffito h = random_graffito(4, EndSpec{}, 1 + k % 3, rng);
                if (!(involution_lr(product(g, h)) == product(involution_lr(h), involution_lr(g))) ||
                    !(involution_tb(product(g, h)) == product(involution_tb(g), involution_tb(h))))
                  t.bad("product: " + g.encode());
              }
              return t.outcome();
            });
  r.check("model-relations", "the model involutions satisfy the same relations", [&] {
    for (const FreeDGA& a : {four_model(za), minimal_model(4, za), minimal_model(6, za)}) {
      ChainMapReport rep = check_involution_relations(a, o.samples, o.seed);
      if (!rep.ok) return fail(a.signature().name + ": " + rep.defects.front().generator + " " + rep.defects.front().defect);
    }
    return pass("four model, minimal 4 and 6");
  });
  return r.finish();
}

SuiteReport suite_slicing(const VerifyOptions&) {
  Runner r("slicing");
  r.check("counts", "|TL(4,4)| = 14, |S(4,0)| = 2, |S^v(2,4)| = 3", [] {
    std::size_t tl = enumerate_diagrams(4, 4).size(), s = cell_basis(4, 0, CellSide::left_cell).size(),
                sv = cell_basis(4, 2, CellSide::right_cell).size();
    std::string d = std::to_string(tl) + ", " + std::to_string(s) + ", " + std::to_string(sv);
    return tl == 14 && s == 2 && sv == 3 ? pass(d) : fail(d);
  });
  r.check("round-trip", "slicing then rejoining returns the diagram, for TL(n,n) with n <= 6", [] {
    Tally t;
    for (int n = 0; n <= 6; ++n)
      for (const TLDiagram& d : enumerate_diagrams(n, n)) {
        t.count();
        auto [left, right] = slice(d);
        if (!(unslice(left, right) == d)) t.bad(d.encode());
      }
    return t.outcome();
  });
  r.check("cell-decomposition", "|TL(n,n)| = sum over k of |S(n,k)| |S^v(k,n)| for n <= 8", [] {
    for (int n = 0; n <= 8; ++n) {
      std::size_t sum = 0;
      for (int k = n % 2; k <= n; k += 2)
        sum += cell_basis(n, k, CellSide::left_cell).size() * cell_basis(n, k, CellSide::right_cell).size();
      if (sum != catalan(n)) return fail("n = " + std::to_string(n));
    }
    return pass("n = 0..8");
  });
  return r.finish();
}

std::vector<Letter> all_letters() {
  std::vector<Letter> out;
  for (int kl : {0, 2})
    for (int kr : {0, 2})
      for (const Letter& l : enumerate_letters(kl, kr)) out.push_back(l);
  return out;
}

SuiteReport suite_letters(const VerifyOptions& o) {
  Runner r("letters");
  r.check("alphabet", "9 letters with two connections on each side, 6 and 6 with one side closed, 4 closed", [] {
    std::string d = std::to_string(enumerate_letters(2, 2).size()) + "/" +
                    std::to_string(enumerate_letters(0, 2).size()) + "/" +
                    std::to_string(enumerate_letters(2, 0).size()) + "/" +
                    std::to_string(enumerate_letters(0, 0).size());
    return d == "9/6/6/4" ? pass(d) : fail(d);
  });
  r.check("one-loop-letters", "4 + 3 + 3 + 2 = 12 letters touch a single loop", [] {
    std::string d;
    for (auto [kl, kr] : {std::pair{2, 2}, {0, 2}, {2, 0}, {0, 0}}) {
      auto ls = enumerate_letters(kl, kr);
      d += (d.empty() ? "" : "+") +
           std::to_string(std::count_if(ls.begin(), ls.end(), [](const Letter& l) { return !l.is_pivot(); }));
    }
    return d == "4+3+3+2" ? pass(d) : fail(d);
  });
  r.check("one-loop-words", "the one-loop, no-divider basis uses exactly those 12 letters", [&] {
    std::set<Letter> seen;
    ComplexSpec s = subquotient(zero_a(Domain::integers()), 1, 0, o.max_degree);
    for (int p = 1; p <= std::min(o.max_degree, 4); ++p)
      for (const Graffito& g : enumerate_graffiti(s, p))
        for (const Letter& l : to_word(g)) seen.insert(l);
    std::set<Letter> expected;
    for (const Letter& l : all_letters())
      if (!l.is_pivot()) expected.insert(l);
    return seen == expected ? pass(std::to_string(seen.size()) + " letters")
                            : fail(std::to_string(seen.size()) + " letters seen");
  });
  r.check("pivots", "13 letters touch two loops", [] {
    auto ls = all_letters();
    auto n = std::count_if(ls.begin(), ls.end(), [](const Letter& l) { return l.is_pivot(); });
    return n == 13 ? pass("13") : fail(std::to_string(n));
  });
  r.check("basis-sizes", "the degree-p basis of the reduced complex has 4 * 13^(p-1) elements", [&] {
    ComplexSpec s;
    s.max_degree = o.max_degree;
    std::size_t expect = 4;
    for (int p = 1; p <= o.max_degree; ++p, expect *= 13)
      if (count_graffiti(s, p) != expect) return fail("degree " + std::to_string(p));
    return pass("p = 1.." + std::to_string(o.max_degree));
  });
  return r.finish();
}

SuiteReport suite_word_complex(const VerifyOptions& o) {
  Runner r("word-complex");
  int top = o.max_degree - 1;
  for (const PointedRing& ring : rings_or(o, {"z", "q", "f2"}))
    for (int k = 1; k <= 4; ++k)
      r.check("alphabet-" + std::to_string(k) + "-" + ring.domain().name(),
              "words in a nonempty alphabet: homology R in degree 1, zero above", [&, ring, k] {
                auto h = homology(build_word_complex(k, o.max_degree, ring), 1, top, {false, o.threads});
                std::string d = describe(h, ring.domain());
                return single_copy(h, 1) ? pass(d) : fail(d);
              });
  r.check("four-letters-vs-open", "four-letter words have the dimensions and homology of the two-sided open complex",
          [&] {
            const PointedRing z = zero_a(Domain::integers());
            ChainComplexData words = build_word_complex(4, o.max_degree, z);
            ChainComplexData open = build_complex(subquotient(z, 1, 0, o.max_degree, "oo"), o.threads);
            for (int p = 1; p <= o.max_degree; ++p)
              if (words.dim(p) != open.dim(p)) return fail("dimension differs in degree " + std::to_string(p));
            auto hw = homology(words, 1, top), ho = homology(open, 1, top);
            return hw == ho ? pass(describe(ho, z.domain())) : fail(describe(hw, z.domain()) + " vs " + describe(ho, z.domain()));
          });
  return r.finish();
}

SuiteReport suite_model_d_squared(const VerifyOptions& o) {
  Runner r("model-d-squared");
  const PointedRing za = PointedRing::universal();
  for (int n = 2; n <= 12; n += 2)
    r.check("minimal-" + std::to_string(n), "d^2 = 0 on the generators of the minimal model and on its truncation",
            [&, n] {
              FreeDGA m = minimal_model(n, za);
              m.verify_d_squared();
              DSquaredReport d = validate_d_squared(truncated_complex(m, std::max(o.max_degree, 6), true));
              return d.ok ? pass() : fail(d.str());
            });
  r.check("four-model", "d^2 = 0 on the four-generator model", [&] {
    FreeDGA f = four_model(za);
    f.verify_d_squared();
    DSquaredReport d = validate_d_squared(truncated_complex(f, std::max(o.max_degree, 6), false));
    return d.ok ? pass() : fail(d.str());
  });
  return r.finish();
}

SuiteReport suite_psi(const VerifyOptions&) {
  Runner r("psi-chain-map");
  r.check("universal", "psi: x1 -> x, x3 -> y + 2 x r commutes with d over Z[a]", [] {
    PolyMorphism s = psi(PointedRing::universal());
    ChainMapReport rep = s.check_chain_map();
    if (!rep.ok) return fail(rep.defects.front().generator + ": " + rep.defects.front().defect);
    NCPoly dx3 = s.target().d(s.image(1));
    return dx3 == s.apply(s.source().d_of(1)) ? pass("d psi(x3) = " + dx3.str()) : fail("x3");
  });
  r.check("specialized", "psi is a chain map over (Z,0), (Q,0), (F2,0), (Z,3)", [] {
    for (const PointedRing& ring : {zero_a(Domain::integers()), zero_a(Domain::rationals()),
                                    zero_a(Domain::prime_field(2)), PointedRing::with_a(Domain::integers(), 3)})
      if (!psi(ring).check_chain_map().ok) return fail(ring.name());
    return pass();
  });
  return r.finish();
}

SuiteReport suite_phi(const VerifyOptions&) {
  Runner r("phi-chain-map");
  const PointedRing za = PointedRing::universal();
  r.check("generators", "phi commutes with d on x, xh, r and y over Z[a]", [&] {
    ChainMapReport rep = phi(za).check_chain_map();
    return rep.ok ? pass("x, xh, r, y") : fail(rep.defects.front().generator + ": " + rep.defects.front().defect);
  });
  r.check("y-boundary", "d(phi(y)) = 2 phi(x) phi(xh) - 2a phi(r)", [&] {
    LoopsMorphism f = phi(za);
    Chain rhs = product(f.image(0), f.image(1)).scaled(za.from_int(2)) - f.image(2).scaled(za.a() * za.from_int(2));
    return differential(f.image(3)) == rhs ? pass() : fail(differential(f.image(3)).str());
  });
  r.check("detects-corruption", "negating phi(r) breaks the chain map at r", [&] {
    LoopsMorphism bad = phi(za);
    bad.set_image("r", bad.image(2).scaled(za.from_int(-1)));
    ChainMapReport rep = bad.check_chain_map();
    return !rep.ok && rep.defects.front().generator == "r" ? pass() : fail("corruption not reported");
  });
  r.check("specialized", "phi is a chain map over (Z,0), (F2,0), (Z,3)", [] {
    for (const PointedRing& ring : {zero_a(Domain::integers()), zero_a(Domain::prime_field(2)),
                                    PointedRing::with_a(Domain::integers(), 3)})
      if (!phi(ring).check_chain_map().ok) return fail(ring.name());
    return pass();
  });
  return r.finish();
}

SuiteReport suite_alpha(const VerifyOptions&) {
  Runner r("alpha-boundary");
  for (const PointedRing& ring :
       {zero_a(Domain::integers()), zero_a(Domain::rationals()), zero_a(Domain::prime_field(2))})
    r.check("identity-" + ring.domain().name(),
            "lr psi(alpha) - psi(alpha) = d(r y - y r + 2 r r xh - 2 x r r) with alpha = x1 x3 + x3 x1", [ring] {
              NCPoly defect = alpha_boundary_defect(ring);
              return defect.is_zero() ? pass() : fail(defect.str());
            });
  r.check("wrong-witness", "a perturbed witness leaves a nonzero defect", [] {
    return alpha_boundary_defect(zero_a(Domain::integers()), "r.y - y.r - 2*x.r.r").is_zero() ? fail("defect vanished")
                                                                                                : pass();
  });
  return r.finish();
}

SuiteReport suite_main_technical(const VerifyOptions& o) {
  Runner r("main-technical");
  int top = o.max_degree - 1;
  for (const PointedRing& ring : rings_or(o, {"z", "f2"})) {
    const Domain& dom = ring.domain();
    std::string tag = dom.name();
    r.check("one-loop-" + tag, "C[1,0]: R in degree 1 only, generated by the class of phi(x)", [&, ring] {
      ChainComplexData c = build_complex(subquotient(ring, 1, 0, o.max_degree), o.threads);
      auto h = homology(c, 1, top, {true, o.threads});
      std::string d = describe(h, ring.domain());
      if (!single_copy(h, 1)) return fail(d);
      std::vector<Scalar> x = to_vector(phi(ring).image(0), c, 1);
      if (!is_cycle(c, x, 1) || is_boundary(c, x, 1)) return fail(d + "; phi(x) is not a nonzero class");
      if (!generates(c, x, h[0].representatives.at(0), 1)) return fail(d + "; phi(x) does not generate");
      return pass(d);
    });
    r.check("two-loops-" + tag, "C[2,0]: R in degree 3 only; phi(y) is a cycle and not a boundary", [&, ring] {
      ChainComplexData c = build_complex(subquotient(ring, 2, 0, o.max_degree), o.threads);
      auto h = homology(c, 1, top, {true, o.threads});
      std::string d = describe(h, ring.domain());
      if (!single_copy(h, 3)) return fail(d);
      std::vector<Scalar> y = to_vector(phi(ring).image(3), c, 3);
      if (!is_cycle(c, y, 3)) return fail(d + "; phi(y) is not a cycle");
      if (is_boundary(c, y, 3)) return fail(d + "; phi(y) is a boundary");
      bool gen = generates(c, y, h[2].representatives.at(0), 3);
      return pass(d + (gen ? "; phi(y) generates" : "; phi(y) is a proper multiple of the generator"));
    });
    for (int w : {3, 4})
      r.check("loops-" + std::to_string(w) + "-" + tag, "C[w,0] is acyclic for w >= 3", [&, ring, w] {
        ChainComplexData c = build_complex(subquotient(ring, w, 0, o.max_degree), o.threads);
        auto h = homology(c, 1, top, {false, o.threads});
        std::string d = describe(h, ring.domain());
        return single_copy(h, -1) ? pass(d) : fail(d);
      });
  }
  return r.finish();
}

SuiteReport suite_open(const VerifyOptions& o) {
  Runner r("open-contractibility");
  int top = o.max_degree - 1;
  for (const PointedRing& ring : rings_or(o, {"z", "f2"}))
    for (const char* ends : {"oo", "oc", "co"})
      r.check(std::string("one-loop-") + ends + "-" + ring.domain().name(),
              "one-loop open complexes: R in degree 1 only", [&, ring, ends] {
                auto h = homology(build_complex(subquotient(ring, 1, 0, o.max_degree, ends), o.threads), 1, top,
                                  {false, o.threads});
                std::string d = describe(h, ring.domain());
                return single_copy(h, 1) ? pass(d) : fail(d);
              });
  return r.finish();
}

bool left_end_pivot(const Letter& l) { return l.is_pivot() && l.left_stubs() == 0; }
bool right_end_pivot(const Letter& l) { return l.is_pivot() && l.right_stubs() == 0; }

std::string letters_text(const std::vector<Letter>& ls) {
  std::string s;
  for (const auto& l : ls) s += (s.empty() ? "" : " ") + l.encode();
  return s;
}

/// Faces that stay in C[w,0] keep the interior pivots and may only turn the
/// first (last) pivot into a left (right) end pivot.
void pivot_stability(const Graffito& g, Tally& t) {
  const PointedRing z = zero_a(Domain::integers());
  std::vector<Letter> before = pivot_sequence(g);
  std::size_t n = before.size();
  for (int i = 0; i < g.degree(); ++i) {
    Chain f = face(g, i, z);
    for (const auto& [h, c] : f.terms()) {
      if (h.divider_count() != 0) continue;
      t.count();
      std::vector<Letter> after = pivot_sequence(h);
      std::string where = g.encode() + " face " + std::to_string(i);
      if (after.size() != n) {
        t.bad(where + ": length");
        continue;
      }
      for (std::size_t k = 1; k + 1 < n; ++k)
        if (!(after[k] == before[k])) t.bad(where + ": interior pivot " + std::to_string(k));
      if (!(after.front() == before.front()) && !(left_end_pivot(after.front()) && !left_end_pivot(before.front())))
        t.bad(where + ": first pivot");
      if (!(after.back() == before.back()) && !(right_end_pivot(after.back()) && !right_end_pivot(before.back())))
        t.bad(where + ": last pivot");
    }
  }
}

void pivot_shape(const Graffito& g, Tally& t) {
  t.count();
  std::vector<Letter> word = to_word(g), piv = pivot_sequence(g);
  if (static_cast<int>(piv.size()) != g.loop_count() - 1) t.bad(g.encode() + ": " + letters_text(piv));
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0 && left_end_pivot(word[k])) t.bad(g.encode() + ": left end pivot inside");
    if (k + 1 < word.size() && right_end_pivot(word[k])) t.bad(g.encode() + ": right end pivot inside");
  }
  if (g.loop_count() == 2) {
    auto n = std::count(word.begin(), word.end(), piv.at(0));
    if (n != 1) t.bad(g.encode() + ": pivot repeats");
  }
}

SuiteReport suite_pivots(const VerifyOptions& o) {
  Runner r("pivot-properties");
  const PointedRing z = zero_a(Domain::integers());
  int top = std::min(o.max_degree - 1, 4);
  r.check("uniqueness", "a two-loop graffito without dividers has exactly one pivot, occurring once", [&] {
    Tally t;
    for (int p = 1; p <= top; ++p)
      for (const Graffito& g : enumerate_graffiti(subquotient(z, 2, 0, top), p)) pivot_shape(g, t);
    return t.outcome();
  });
  r.check("sequence-length", "with i >= 3 loops there are i - 1 pivots; end pivots sit only at the ends", [&] {
    Tally t;
    for (int w : {3, 4})
      for (int p = 1; p <= top; ++p)
        for (const Graffito& g : enumerate_graffiti(subquotient(z, w, 0, top), p)) pivot_shape(g, t);
    return t.outcome();
  });
  r.check("stability", "faces within C[i,0] change only the first and last pivots, and only into end pivots", [&] {
    Tally t;
    for (int w : {3, 4})
      for (int p = 2; p <= top; ++p)
        for (const Graffito& g : enumerate_graffiti(subquotient(z, w, 0, top), p)) pivot_stability(g, t);
    return t.outcome();
  });
  r.check("delete-pivot", "in C[2,0] deleting the bar at the pivot gives zero", [&] {
    Tally t;
    for (int p = 2; p <= top; ++p)
      for (const Graffito& g : enumerate_graffiti(subquotient(z, 2, 0, top), p)) {
        std::vector<Letter> word = to_word(g), piv = pivot_sequence(g);
        for (int j = 0; j < g.degree(); ++j) {
          if (!(word[static_cast<std::size_t>(j)] == piv.at(0))) continue;
          // bar j sits between factors j and j + 1, so its face is face j
          t.count();
          Chain f = face(g, j, z);
          for (const auto& [h, c] : f.terms())
            if (h.divider_count() == 0) t.bad(g.encode());
        }
      }
    return t.outcome();
  });
  return r.finish();
}

std::map<std::tuple<int, int, int>, std::size_t> tensor_dims_mismatch(int max_p, int max_w, int max_j, std::string& detail) {
  const PointedRing z = zero_a(Domain::integers());
  std::map<std::pair<int, int>, std::size_t> base;
  for (int p = 1; p <= max_p; ++p)
    for (int w = 1; w <= max_w; ++w) base[{p, w}] = count_graffiti(subquotient(z, w, 0, max_p), p);
  std::function<std::size_t(int, int, int)> conv = [&](int p, int w, int parts) -> std::size_t {
    if (parts == 1) return p >= 1 && w >= 1 ? base[{p, w}] : 0;
    std::size_t sum = 0;
    for (int p1 = 1; p1 < p; ++p1)
      for (int w1 = 1; w1 < w; ++w1) sum += base[{p1, w1}] * conv(p - p1, w - w1, parts - 1);
    return sum;
  };
  std::map<std::tuple<int, int, int>, std::size_t> bad;
  std::size_t cases = 0;
  for (int p = 1; p <= max_p; ++p)
    for (int w = 1; w <= max_w; ++w)
      for (int j = 0; j <= max_j; ++j) {
        ++cases;
        std::size_t got = count_graffiti(subquotient(z, w, j, max_p), p);
        if (got != conv(p, w, j + 1)) bad[{p, w, j}] = got;
      }
  detail = std::to_string(cases) + " (p, w, j) triples";
  return bad;
}

Outcome tensor_dims(int max_p) {
  std::string detail;
  auto bad = tensor_dims_mismatch(max_p, 3, 2, detail);
  if (bad.empty()) return pass(detail);
  auto [k, v] = *bad.begin();
  auto [p, w, j] = k;
  return fail(detail + "; first mismatch at p=" + std::to_string(p) + " w=" + std::to_string(w) +
              " j=" + std::to_string(j));
}

SuiteReport suite_filtration(const VerifyOptions& o) {
  Runner r("filtration-properties");
  const PointedRing z = zero_a(Domain::integers());
  const PointedRing za = PointedRing::universal();
  r.check("divider-monotonicity", "with a = 0 a nonzero face keeps the divider count or raises it by one", [&] {
    std::mt19937_64 rng(o.seed + 21);
    Tally t;
    for (int k = 0; k < o.samples; ++k) {
      Graffito g = random_graffito(4, EndSpec{}, 2 + k % 3, rng);
      for (int i = 0; i < g.degree(); ++i) {
        Chain f = face(g, i, z);
        for (const auto& [h, c] : f.terms()) {
          t.count();
          int j = h.divider_count();
          if (j != g.divider_count() && j != g.divider_count() + 1) t.bad(g.encode() + " face " + std::to_string(i));
        }
      }
    }
    return t.outcome();
  });
  r.check("nondividers-of-d", "every term of d(x) has one or two fewer non-dividers than x", [&] {
    std::mt19937_64 rng(o.seed + 22);
    Tally t;
    for (int k = 0; k < o.samples; ++k) {
      Graffito g = random_graffito(4, EndSpec{}, 2 + k % 3, rng);
      Chain dg = differential(Chain::of(g, z));
      for (const auto& [h, c] : dg.terms()) {
        t.count();
        int n = h.nondivider_count();
        if (n != g.nondivider_count() - 1 && n != g.nondivider_count() - 2) t.bad(g.encode());
      }
    }
    return t.outcome();
  });
  r.check("product-formulas", "dividers(xy) = dividers(x) + dividers(y) + 1; non-dividers add", [&] {
    std::mt19937_64 rng(o.seed + 23);
    Tally t;
    for (int k = 0; k < o.samples; ++k) {
      Graffito x = random_graffito(4, EndSpec{}, 1 + k % 3, rng), y = random_graffito(4, EndSpec{}, 1 + (k / 3) % 3, rng);
      Graffito xy = product(x, y);
      t.count();
      if (xy.divider_count() != x.divider_count() + y.divider_count() + 1 ||
          xy.nondivider_count() != x.nondivider_count() + y.nondivider_count() || xy.degree() != x.degree() + y.degree())
        t.bad(x.encode() + " * " + y.encode());
    }
    return t.outcome();
  });
  r.check("weight-additivity", "loops add under products; faces trade loops for powers of a", [&] {
    std::mt19937_64 rng(o.seed + 24);
    Tally t;
    for (int k = 0; k < o.samples; ++k) {
      Graffito x = random_graffito(4, EndSpec{}, 1 + k % 4, rng), y = random_graffito(4, EndSpec{}, 1 + (k / 4) % 3, rng);
      t.count();
      if (product(x, y).loop_count() != x.loop_count() + y.loop_count()) t.bad("product " + x.encode());
      for (int i = 0; i < x.degree(); ++i) {
        Chain fa = face(x, i, za, true), f0 = face(x, i, z);
        for (const auto& [h, c] : fa.terms())
          if (h.loop_count() + c.weight() != x.loop_count()) t.bad("face " + x.encode());
        for (const auto& [h, c] : f0.terms())
          if (h.loop_count() != x.loop_count()) t.bad("face at a = 0 " + x.encode());
      }
    }
    return t.outcome();
  });
  auto sample_from = [&](int w, std::uint64_t salt) {
    std::vector<Graffito> pool;
    for (int p = 1; p <= 4; ++p)
      for (const Graffito& g : enumerate_graffiti(subquotient(z, w, 0, 4), p)) pool.push_back(g);
    std::mt19937_64 rng(o.seed + salt);
    std::vector<Graffito> out;
    for (int k = 0; k < o.samples && !pool.empty(); ++k) out.push_back(pool[rng() % pool.size()]);
    return out;
  };
  r.check("pivot-uniqueness", "random two-loop graffiti without dividers have a unique pivot", [&] {
    Tally t;
    for (const Graffito& g : sample_from(2, 25)) pivot_shape(g, t);
    return t.outcome();
  });
  r.check("pivot-stability", "random graffiti with 3 or 4 loops: pivot sequences are stable under faces", [&] {
    Tally t;
    for (int w : {3, 4})
      for (const Graffito& g : sample_from(w, 26 + static_cast<std::uint64_t>(w))) pivot_stability(g, t);
    return t.outcome();
  });
  r.check("tensor-dimensions", "dim C_p[w,j] is the (j+1)-fold convolution of the dims of C[*,0]; p <= 4, w <= 3, j <= 2",
          [] { return tensor_dims(4); });
  return r.finish();
}

struct ModelExpectation {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<long>> torsion;
};

SuiteReport suite_model_vs_complex(const VerifyOptions& o) {
  Runner r("model-vs-complex");
  int top = o.max_degree - 1;
  const std::map<std::string, ModelExpectation> expected{
      {"Q", {{1, 0, 0, 1}, {{}, {}, {}, {}}}},
      {"F2", {{1, 1, 2, 3}, {{}, {}, {}, {}}}},
      {"Z", {{1, 0, 0, 1}, {{}, {2}, {2}, {2}}}},
  };
  for (const PointedRing& ring : rings_or(o, {"z", "q", "f2", "f3"})) {
    std::string tag = ring.domain().name();
    r.check("agreement-" + tag, "H_p of the reduced loop complex equals H_p of the reduced minimal model", [&, ring, tag] {
      ComplexSpec s;
      s.ring = ring;
      s.max_degree = o.max_degree;
      auto hl = homology_by_weight(build_complex(s, o.threads), 1, top, {false, o.threads});
      auto hm = homology(truncated_complex(minimal_model(4, ring), o.max_degree, true), 1, top, {false, o.threads});
      std::string d = "loops " + describe(hl, ring.domain()) + ", model " + describe(hm, ring.domain());
      if (!(hl == hm)) return fail(d);
      auto it = expected.find(tag);
      if (it != expected.end())
        for (std::size_t i = 0; i < hm.size() && i < it->second.ranks.size(); ++i) {
          std::vector<mpz_class> tor;
          for (long v : it->second.torsion[i]) tor.emplace_back(v);
          if (hm[i].rank != it->second.ranks[i] || hm[i].torsion != tor) return fail(d + "; differs from the table");
        }
      return pass(d);
    });
  }
  return r.finish();
}

SuiteReport suite_e1(const VerifyOptions& o) {
  Runner r("e1-tensor-dims");
  r.check("dimensions", "dim C_p[w,j] is the (j+1)-fold convolution of the dims of C[*,0]; p <= 4, w <= 3, j <= 2",
          [] { return tensor_dims(4); });
  r.check("dimensions-extended", "the same identity for p <= 5, w <= 4, j <= 3", [&] {
    std::string detail;
    auto bad = tensor_dims_mismatch(std::min(o.max_degree, 5), 4, 3, detail);
    return bad.empty() ? pass(detail) : fail(detail + ", " + std::to_string(bad.size()) + " mismatches");
  });
  int top = o.max_degree - 1;
  for (const PointedRing& ring : rings_or(o, {"q", "f2"})) {
    if (!ring.domain().is_field()) continue;
    r.check("kunneth-" + ring.domain().name(),
            "over a field, H(C[w,j]) has the ranks of the tensor product of the H(C[w_t,0])", [&, ring] {
              std::map<std::pair<int, int>, std::size_t> h0;
              for (int w = 1; w <= 3; ++w) {
                auto h = homology(build_complex(subquotient(ring, w, 0, o.max_degree), o.threads), 1, top,
                                  {false, o.threads});
                for (const auto& g : h) h0[{w, g.degree}] = g.rank;
              }
              std::function<std::size_t(int, int, int)> conv = [&](int p, int w, int parts) -> std::size_t {
                if (parts == 1) return p >= 1 && w >= 1 && w <= 3 && p <= top ? h0[{w, p}] : 0;
                std::size_t sum = 0;
                for (int p1 = 1; p1 < p; ++p1)
                  for (int w1 = 1; w1 < w; ++w1) sum += h0[{w1, p1}] * conv(p - p1, w - w1, parts - 1);
                return sum;
              };
              std::string d;
              for (int w = 2; w <= 3; ++w)
                for (int j = 1; j < w; ++j) {
                  auto h = homology(build_complex(subquotient(ring, w, j, o.max_degree), o.threads), 1, top,
                                    {false, o.threads});
                  for (const auto& g : h)
                    if (g.rank != conv(g.degree, w, j + 1))
                      return fail("C[" + std::to_string(w) + "," + std::to_string(j) + "] degree " +
                                  std::to_string(g.degree) + ": rank " + std::to_string(g.rank) + ", expected " +
                                  std::to_string(conv(g.degree, w, j + 1)));
                  d += (d.empty() ? "" : "; ") + std::string("C[") + std::to_string(w) + "," + std::to_string(j) +
                       "] " + describe(h, ring.domain());
                }
              return pass(d);
            });
  }
  return r.finish();
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"d-squared", suite_d_squared},
      {"leibniz", suite_leibniz},
      {"involutions", suite_involutions},
      {"slicing", suite_slicing},
      {"letters", suite_letters},
      {"word-complex", suite_word_complex},
      {"model-d-squared", suite_model_d_squared},
      {"psi-chain-map", suite_psi},
      {"phi-chain-map", suite_phi},
      {"alpha-boundary", suite_alpha},
      {"main-technical", suite_main_technical},
      {"open-contractibility", suite_open},
      {"pivot-properties", suite_pivots},
      {"filtration-properties", suite_filtration},
      {"model-vs-complex", suite_model_vs_complex},
      {"e1-tensor-dims", suite_e1},
  };
  return r;
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << s << "s";
  return os.str();
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double SuiteReport::seconds() const {
  double s = 0;
  for (const auto& c : checks) s += c.seconds;
  return s;
}

std::string SuiteReport::str() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks.size() << " checks, "
     << format_seconds(seconds()) << ")\n";
  for (const auto& c : checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << "  " << format_seconds(c.seconds) << "  "
       << c.claim << "\n";
    if (!c.detail.empty()) os << "         " << c.detail << "\n";
  }
  return os.str();
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"passed", c.passed}, {"claim", c.claim}, {"detail", c.detail}, {"seconds", c.seconds}});
  return {{"suite", suite}, {"passed", passed()}, {"seconds", seconds()}, {"checks", cs}};
}

PointedRing parse_ring(std::string_view name, long a) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "za" || s == "z[a]") return PointedRing::universal();
  return PointedRing::with_a(Domain::parse(s), a);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& opts) {
  if (opts.max_degree < 2) throw std::invalid_argument("max degree must be at least 2");
  for (const auto& [n, f] : registry())
    if (n == name) return f(opts);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace tlloops
