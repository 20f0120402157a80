// Sparse exact matrices, Smith normal form over Z, ranks over fields and
// solvability of A w = b.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "tlloops/coeff.hpp"

namespace tlloops {

class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

class SparseMatrix {
 public:
  SparseMatrix() : SparseMatrix(0, 0, Domain::integers()) {}
  SparseMatrix(std::size_t rows, std::size_t cols, Domain domain);
  /// Sums duplicates, drops zeros, sorts row-major.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, Domain domain, std::vector<Triplet> entries);
  static SparseMatrix from_dense(const std::vector<std::vector<long>>& rows, Domain domain);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Domain& domain() const { return domain_; }
  const std::vector<Triplet>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  Scalar at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  /// Entrywise image under a ring map into `target`.
  template <class F>
  SparseMatrix map(const Domain& target, F&& f) const {
    std::vector<Triplet> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.row, e.col, f(e.value)});
    return from_triplets(rows_, cols_, target, std::move(t));
  }
  SparseMatrix specialize(const PointedRing& target) const;
  /// Reduction of an integer matrix into Q or F_p.
  SparseMatrix change_domain(const Domain& target) const;
  SparseMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  nlohmann::json to_json() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  Domain domain_;
  std::vector<Triplet> entries_;
};

using DenseIntMatrix = std::vector<std::vector<mpz_class>>;

struct SmithForm {
  /// Nonzero invariant factors d_1 | d_2 | ... (units included).
  std::vector<mpz_class> invariants;
  std::size_t rank = 0;
  /// Present only when requested: U * A * V = S.
  std::optional<DenseIntMatrix> U;
  std::optional<DenseIntMatrix> V;
  std::optional<DenseIntMatrix> S;
  /// Invariants greater than one.
  std::vector<mpz_class> torsion() const;
};

/// Diagonal entries -> invariant factors d_1 | d_2 | ... (absolute values).
std::vector<mpz_class> normalize_invariants(std::vector<mpz_class> diagonal);

/// Sparse elimination (unit pivots by Markowitz cost, then gcd reduction).
SmithForm smith_normal_form(const SparseMatrix& a);
/// Dense reference algorithm; records transforms when asked.
SmithForm smith_normal_form_dense(const SparseMatrix& a, bool with_transforms);

/// Rank over Q or F_p, by sparse elimination.
std::size_t rank_over_field(const SparseMatrix& a);
/// Dense reference elimination.
std::size_t rank_over_field_dense(const SparseMatrix& a);

/// For each right-hand side b, whether a w = b has a solution over the matrix
/// domain (Z, Q or F_p).
std::vector<bool> solvable(const SparseMatrix& a, const std::vector<std::vector<Scalar>>& rhs);

/// Rank of the integer matrix reduced mod p, or over Q for p = 0.
std::size_t rank_mod(const SparseMatrix& integer_matrix, std::uint32_t p);

}  // namespace tlloops
