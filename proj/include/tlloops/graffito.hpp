// Graffiti (basis elements of the complex of planar loops) and chains of them.
#pragma once

#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tlloops/coeff.hpp"
#include "tlloops/diagram.hpp"

namespace tlloops {

class GraffitoError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EndSpec {
  bool left_open = false;
  bool right_open = false;
  /// Adds span{empty} in degree 0 and the final merge face (closed ends only).
  bool augmented = false;

  int left_stubs() const { return left_open ? 2 : 0; }
  int right_stubs() const { return right_open ? 2 : 0; }
  bool closed() const { return !left_open && !right_open; }
  /// "cc", "oc", "co" or "oo" (left letter first).
  std::string code() const;
  static EndSpec from_code(std::string_view code);
  friend bool operator==(const EndSpec&, const EndSpec&) = default;
};

/// beta_0 | beta_1 | ... | beta_p. Degree 0 is the empty graffito of the
/// augmented complex, stored as the single factor TL(0,0).
class Graffito {
 public:
  /// Validates shapes, cell conditions and non-identity internal factors.
  /// The augmented flag of `ends` is not part of a graffito and is cleared.
  Graffito(int two_n, EndSpec ends, std::vector<TLDiagram> factors);
  static Graffito empty(int two_n);
  /// `G(cc)[TL(0,4){...} | TL(4,0){...}]`; two_n is read from the factors.
  static Graffito parse(std::string_view text, int two_n_for_empty = 4);

  int two_n() const { return two_n_; }
  int degree() const { return static_cast<int>(factors_.size()) - 1; }
  const EndSpec& ends() const { return ends_; }
  const std::vector<TLDiagram>& factors() const { return factors_; }
  const TLDiagram& factor(int i) const { return factors_[i]; }

  /// Loops of the closed-up picture.
  int loop_count() const { return loops_; }
  int divider_count() const { return dividers_; }
  int nondivider_count() const { return degree() - 1 - dividers_; }

  const std::string& encode() const { return text_; }

  friend bool operator==(const Graffito& x, const Graffito& y) { return x.text_ == y.text_; }
  friend auto operator<=>(const Graffito& x, const Graffito& y) { return x.text_ <=> y.text_; }

 private:
  int two_n_ = 0;
  EndSpec ends_;
  std::vector<TLDiagram> factors_;
  int loops_ = 0;
  int dividers_ = 0;
  std::string text_;
};

/// Finite R-linear combination of graffiti of one degree and one end type.
class Chain {
 public:
  Chain(PointedRing ring, EndSpec ends, int two_n, int degree);
  static Chain of(const Graffito& g, const PointedRing& ring, bool augmented = false);
  /// `c*G(..) + c*G(..)`; scalars containing + or - inside are parenthesized.
  static Chain parse(std::string_view text, const PointedRing& ring, bool augmented = false);

  const PointedRing& ring() const { return ring_; }
  const EndSpec& ends() const { return ends_; }
  int two_n() const { return two_n_; }
  int degree() const { return degree_; }
  const std::map<Graffito, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Graffito& g) const;

  void add(const Graffito& g, const Scalar& c);
  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain scaled(const Scalar& c) const;
  friend Chain operator+(Chain x, const Chain& y) { return x += y; }
  friend Chain operator-(Chain x, const Chain& y) { return x -= y; }
  friend bool operator==(const Chain& x, const Chain& y) {
    return x.degree_ == y.degree_ && x.terms_ == y.terms_;
  }

  std::string str() const;

 private:
  void check_compatible(const Chain& other) const;
  PointedRing ring_;
  EndSpec ends_;
  int two_n_;
  int degree_;
  std::map<Graffito, Scalar> terms_;
};

/// Merges beta_i and beta_{i+1} (0-based). Loops become powers of a; a
/// composite with a forbidden same-side pair at an open end is zero. In the
/// non-augmented complex the degree-1 face is zero.
Chain face(const Graffito& x, int i, const PointedRing& ring, bool augmented = false);
/// d = sum_i (-1)^i face_i.
Chain differential(const Chain& c);

/// Juxtaposition; the facing closed ends merge into one I_0 factor.
Graffito product(const Graffito& x, const Graffito& y);
Chain product(const Chain& x, const Chain& y);

Graffito close_ends(const Graffito& x);

Graffito involution_tb(const Graffito& x);
Graffito involution_lr(const Graffito& x);
Chain involution_tb(const Chain& c);
Chain involution_lr(const Chain& c);

/// Each factor drawn uniformly from its admissible set (so the graffito is
/// uniform in its degree).
Graffito random_graffito(int two_n, EndSpec ends, int degree, std::mt19937_64& rng);

/// Letter j reads the right half of beta_{j-1} and the left half of beta_j.
/// Requires 2n = 4.
std::vector<Letter> to_word(const Graffito& x);
Graffito from_word(const std::vector<Letter>& word);

/// Letters touching two distinct loops, in order. Requires 2n = 4, closed
/// ends and no dividers.
std::vector<Letter> pivot_sequence(const Graffito& x);

}  // namespace tlloops
