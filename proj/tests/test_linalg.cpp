#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tlloops/linalg.hpp"

using namespace tlloops;

namespace {

SparseMatrix random_int(std::mt19937_64& rng, std::size_t r, std::size_t c, double density, long bound) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<long> v(-bound, bound);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (u(rng) < density) t.push_back({i, j, Scalar::from_int(Domain::integers(), v(rng))});
  return SparseMatrix::from_triplets(r, c, Domain::integers(), std::move(t));
}

SparseMatrix to_sparse(const DenseIntMatrix& m, std::size_t cols) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] != 0) t.push_back({i, j, Scalar::from_int(Domain::integers(), m[i][j])});
  return SparseMatrix::from_triplets(m.size(), cols, Domain::integers(), std::move(t));
}

// Random unimodular matrix: product of elementary operations.
SparseMatrix unimodular(std::mt19937_64& rng, std::size_t n) {
  DenseIntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> f(-2, 2);
  for (int s = 0; s < 3 * static_cast<int>(n); ++s) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    long k = f(rng);
    for (std::size_t j = 0; j < n; ++j) m[a][j] += k * m[b][j];
  }
  return to_sparse(m, n);
}

std::vector<long> as_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  const Domain z = Domain::integers();
  CHECK(as_longs(smith_normal_form(SparseMatrix::from_dense({{2}}, z)).invariants) == std::vector<long>{2});
  SmithForm s = smith_normal_form(SparseMatrix::from_dense({{2, 4}, {6, 8}}, z));
  CHECK(as_longs(s.invariants) == std::vector<long>{2, 4});
  CHECK(s.rank == 2);
  CHECK(as_longs(s.torsion()) == std::vector<long>{2, 4});
  SmithForm zero = smith_normal_form(SparseMatrix(3, 4, z));
  CHECK(zero.invariants.empty());
  CHECK(zero.rank == 0);
  CHECK(as_longs(smith_normal_form(SparseMatrix::from_dense({{6, 0}, {0, 4}}, z)).invariants) ==
        std::vector<long>{2, 12});
  CHECK_THROWS_AS(smith_normal_form(SparseMatrix::from_dense({{1}}, Domain::rationals())), DomainMismatch);
}

TEST_CASE("normalized invariants form a divisibility chain") {
  CHECK(as_longs(normalize_invariants({mpz_class(4), mpz_class(-6), mpz_class(1)})) == std::vector<long>{1, 2, 12});
  CHECK(as_longs(normalize_invariants({mpz_class(0), mpz_class(3)})) == std::vector<long>{3});
}

TEST_CASE("sparse and dense smith forms agree; transforms check out") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    SparseMatrix a = random_int(rng, r, c, 0.4, 6);
    SmithForm sparse = smith_normal_form(a);
    SmithForm dense = smith_normal_form_dense(a, true);
    CHECK(sparse.invariants == dense.invariants);
    CHECK(sparse.rank == dense.rank);
    SparseMatrix u = to_sparse(*dense.U, r), v = to_sparse(*dense.V, c), s = to_sparse(*dense.S, c);
    CHECK(u * a * v == s);
    for (std::size_t i = 0; i + 1 < sparse.invariants.size(); ++i)
      CHECK(sparse.invariants[i + 1] % sparse.invariants[i] == 0);
  }
}

TEST_CASE("invariants are stable under unimodular changes of basis") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 2 + rng() % 6, c = 2 + rng() % 6;
    SparseMatrix a = random_int(rng, r, c, 0.5, 5);
    SparseMatrix b = unimodular(rng, r) * a * unimodular(rng, c);
    CHECK(smith_normal_form(a).invariants == smith_normal_form(b).invariants);
  }
}

TEST_CASE("field ranks") {
  const Domain z = Domain::integers();
  SparseMatrix two = SparseMatrix::from_dense({{2}}, z);
  CHECK(rank_mod(two, 2) == 0);
  CHECK(rank_mod(two, 0) == 1);
  CHECK(rank_over_field(two.change_domain(Domain::prime_field(2))) == 0);
  CHECK(rank_over_field(two.change_domain(Domain::rationals())) == 1);
  std::vector<std::vector<long>> id(5, std::vector<long>(5, 0));
  for (int i = 0; i < 5; ++i) id[i][i] = 1;
  CHECK(rank_over_field(SparseMatrix::from_dense(id, Domain::rationals())) == 5);
  CHECK_THROWS_AS(rank_over_field(two), DomainMismatch);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    SparseMatrix a = random_int(rng, 1 + rng() % 10, 1 + rng() % 10, 0.35, 9);
    SmithForm s = smith_normal_form(a);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      std::size_t expected = 0;
      for (const auto& d : s.invariants)
        if (d % p != 0) ++expected;
      CHECK(rank_mod(a, p) == expected);
      SparseMatrix ap = a.change_domain(Domain::prime_field(p));
      CHECK(rank_over_field(ap) == rank_over_field_dense(ap));
    }
    SparseMatrix aq = a.change_domain(Domain::rationals());
    CHECK(rank_over_field(aq) == s.rank);
    CHECK(rank_over_field_dense(aq) == s.rank);
  }
}

TEST_CASE("solvability") {
  const Domain z = Domain::integers();
  SparseMatrix a = SparseMatrix::from_dense({{2, 0}, {0, 3}, {0, 0}}, z);
  auto v = [&](long x, long y, long w) {
    return std::vector<Scalar>{Scalar::from_int(z, x), Scalar::from_int(z, y), Scalar::from_int(z, w)};
  };
  CHECK(solvable(a, {v(2, 3, 0), v(1, 0, 0), v(0, 0, 1), v(0, 0, 0), v(4, -6, 0)}) ==
        std::vector<bool>{true, false, false, true, true});
  SparseMatrix aq = a.change_domain(Domain::rationals());
  auto q = [&](long x, long y, long w) {
    const Domain d = Domain::rationals();
    return std::vector<Scalar>{Scalar::from_int(d, x), Scalar::from_int(d, y), Scalar::from_int(d, w)};
  };
  CHECK(solvable(aq, {q(1, 0, 0), q(0, 0, 1)}) == std::vector<bool>{true, false});

  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 2 + rng() % 6, c = 1 + rng() % 6;
    SparseMatrix m = random_int(rng, r, c, 0.5, 4);
    std::vector<Scalar> w;
    for (std::size_t j = 0; j < c; ++j) w.push_back(Scalar::from_int(z, static_cast<long>(rng() % 7) - 3));
    CHECK(solvable(m, {m.apply(w)}).front());
  }
  CHECK_THROWS(solvable(a, {std::vector<Scalar>(2, Scalar::zero(z))}));
}

TEST_CASE("matrix plumbing") {
  const Domain z = Domain::integers();
  SparseMatrix a = SparseMatrix::from_triplets(
      2, 2, z, {{0, 0, Scalar::from_int(z, 1)}, {0, 0, Scalar::from_int(z, -1)}, {1, 0, Scalar::from_int(z, 5)}});
  CHECK(a.nnz() == 1);
  CHECK(a.at(1, 0) == Scalar::from_int(z, 5));
  CHECK(a.transpose().at(0, 1) == Scalar::from_int(z, 5));
  CHECK(a.submatrix({1}, {0}).at(0, 0) == Scalar::from_int(z, 5));
  CHECK(a.to_json()["entries"].size() == 1);
  CHECK_THROWS(SparseMatrix::from_triplets(1, 1, z, {{2, 0, Scalar::from_int(z, 1)}}));
  SparseMatrix p = SparseMatrix::from_triplets(1, 1, Domain::int_poly_a(), {{0, 0, Scalar::a_power(2)}});
  CHECK(p.specialize(PointedRing::with_a(z, 3)).at(0, 0) == Scalar::from_int(z, 9));
  CHECK(p.specialize(PointedRing::with_a(z, 0)).is_zero());
}
