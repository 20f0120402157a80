// Exact coefficient domains: Z, Q, F_p and the graded polynomial ring Z[a].
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tlloops/errors.hpp"

namespace tlloops {

class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Domain {
 public:
  enum class Kind : std::uint8_t { integers, rationals, prime_field, int_poly_a };

  static Domain integers() { return Domain(Kind::integers, 0); }
  static Domain rationals() { return Domain(Kind::rationals, 0); }
  /// Throws std::invalid_argument unless p is prime and fits in 31 bits.
  static Domain prime_field(std::uint32_t p);
  static Domain int_poly_a() { return Domain(Kind::int_poly_a, 0); }

  /// Accepts z, q, zq (Z[a]), fP / FP (e.g. f2, F5).
  static Domain parse(std::string_view name);

  Kind kind() const { return kind_; }
  std::uint32_t modulus() const { return p_; }
  bool is_field() const { return kind_ == Kind::rationals || kind_ == Kind::prime_field; }
  std::string name() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Sparse element of Z[a]: strictly increasing exponents, nonzero coefficients.
struct PolyTerm {
  std::uint32_t exp;
  mpz_class coeff;
  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};
using IntPoly = std::vector<PolyTerm>;

class Scalar {
 public:
  Scalar() : Scalar(Domain::integers()) {}
  explicit Scalar(Domain domain);  // zero of the domain

  static Scalar zero(Domain d) { return Scalar(d); }
  static Scalar one(Domain d) { return from_int(d, 1); }
  static Scalar from_int(Domain d, long v);
  static Scalar from_int(Domain d, const mpz_class& v);
  static Scalar rational(const mpq_class& q);
  /// The generator a of Z[a], or a^k.
  static Scalar a_power(std::uint32_t k);
  static Scalar from_poly(IntPoly terms);

  /// Parses the canonical text form for the given domain.
  static Scalar parse(std::string_view text, Domain d);

  const Domain& domain() const { return domain_; }
  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

  const mpz_class& as_integer() const;
  const mpq_class& as_rational() const;
  std::uint32_t as_residue() const;
  const IntPoly& as_poly() const;

  /// Degree in a of a homogeneous Z[a] element (the weight); -1 for zero or
  /// non-homogeneous values. Other domains report 0.
  int weight() const;

  Scalar operator-() const;
  /// Multiplicative inverse in Q or F_p; throws for zero or non-field domains.
  Scalar inverse() const;
  friend Scalar operator+(const Scalar& s, const Scalar& t);
  friend Scalar operator-(const Scalar& s, const Scalar& t);
  friend Scalar operator*(const Scalar& s, const Scalar& t);
  Scalar& operator+=(const Scalar& t) { return *this = *this + t; }
  Scalar& operator-=(const Scalar& t) { return *this = *this - t; }
  Scalar& operator*=(const Scalar& t) { return *this = *this * t; }
  friend bool operator==(const Scalar& s, const Scalar& t);

 private:
  Domain domain_;
  std::variant<mpz_class, mpq_class, std::uint32_t, IntPoly> value_;
};

enum class ArithOp { add, mul, neg, eq, is_zero };

/// Uniform entry point; eq and is_zero yield booleans, the rest scalars.
std::variant<Scalar, bool> arith(ArithOp op, const Scalar& s, const Scalar& t);

/// A commutative ring R with a chosen element a.
class PointedRing {
 public:
  PointedRing(Domain domain, Scalar a_value);

  /// (Z[a], a), the universal pointed ring.
  static PointedRing universal();
  static PointedRing with_a(Domain domain, long a);

  const Domain& domain() const { return domain_; }
  const Scalar& a() const { return a_; }
  bool a_is_zero() const { return a_.is_zero(); }
  Scalar a_power(std::uint32_t k) const;
  Scalar from_int(long v) const { return Scalar::from_int(domain_, v); }
  std::string name() const;

  friend bool operator==(const PointedRing& x, const PointedRing& y) {
    return x.domain_ == y.domain_ && x.a_ == y.a_;
  }

 private:
  Domain domain_;
  Scalar a_;
};

/// Maps an integer into the target domain.
Scalar embed_integer(const mpz_class& v, const Domain& target);

/// Evaluates a Z[a] scalar at target.a() (the base change Z[a] -> R).
Scalar specialize(const Scalar& s, const PointedRing& target);

bool is_prime(std::uint64_t p);

}  // namespace tlloops
