// Free graded tensor algebras with a differential given on generators, the
// minimal and four-generator models, the comparison maps psi and phi, and
// word-basis truncations.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlloops/chain_complex.hpp"
#include "tlloops/coeff.hpp"
#include "tlloops/graffito.hpp"

namespace tlloops {

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GradedGenerator {
  std::string name;
  int degree;  // homological, >= 1
  int weight;
  friend bool operator==(const GradedGenerator&, const GradedGenerator&) = default;
};

/// Generator indices. Words compare length first, then lexicographically.
using Word = std::vector<int>;

struct WordLess {
  bool operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
  }
};

struct Signature {
  std::string name;
  std::vector<GradedGenerator> generators;
  int index(std::string_view name) const;  // -1 when absent
  int degree(const Word& w) const;
  int weight(const Word& w) const;
  std::string word_text(const Word& w) const;  // "x.xh.r"; "1" for the empty word
  friend bool operator==(const Signature&, const Signature&) = default;
};

inline bool same_algebra(const std::shared_ptr<const Signature>& a, const std::shared_ptr<const Signature>& b) {
  return a == b || *a == *b;
}

class NCPoly {
 public:
  NCPoly(std::shared_ptr<const Signature> sig, PointedRing ring);

  const Signature& signature() const { return *sig_; }
  const std::shared_ptr<const Signature>& signature_ptr() const { return sig_; }
  const PointedRing& ring() const { return ring_; }
  const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  void add(const Word& w, const Scalar& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly scaled(const Scalar& c) const;
  friend NCPoly operator+(NCPoly p, const NCPoly& q) { return p += q; }
  friend NCPoly operator-(NCPoly p, const NCPoly& q) { return p -= q; }
  friend NCPoly operator*(const NCPoly& p, const NCPoly& q);
  friend bool operator==(const NCPoly& p, const NCPoly& q) {
    return same_algebra(p.sig_, q.sig_) && p.terms_ == q.terms_;
  }

  /// Homological degree if homogeneous (nullopt for zero or mixed degrees).
  std::optional<int> degree() const;
  /// `2*x.xh.r - a*y`
  std::string str() const;

 private:
  void check_compatible(const NCPoly& o) const;
  std::shared_ptr<const Signature> sig_;
  PointedRing ring_;
  std::map<Word, Scalar, WordLess> terms_;
};

class FreeDGA {
 public:
  /// `lr_swap[i]` is the generator sigma_lr sends generator i to.
  FreeDGA(std::string name, PointedRing ring, std::vector<GradedGenerator> generators, std::vector<int> lr_swap = {});

  const Signature& signature() const { return *sig_; }
  const std::shared_ptr<const Signature>& signature_ptr() const { return sig_; }
  const std::vector<GradedGenerator>& generators() const { return sig_->generators; }
  const PointedRing& ring() const { return ring_; }
  int index(std::string_view name) const;

  NCPoly zero() const { return NCPoly(sig_, ring_); }
  NCPoly constant(const Scalar& c) const;
  NCPoly gen(std::string_view name) const;
  NCPoly word(const Word& w, const Scalar& c) const;
  /// Accepts the `2*x.xh.r - a*y` form; `x̂` is an alias for `xh`.
  NCPoly parse(std::string_view text) const;

  /// Checks degree and weight on each term (a counts as weight 1).
  void set_d(std::string_view generator, const NCPoly& image);
  const NCPoly& d_of(int generator) const { return d_.at(static_cast<std::size_t>(generator)); }
  /// d(uv) = d(u) v + (-1)^{|u|} u d(v).
  NCPoly d(const NCPoly& p) const;
  /// Throws AlgebraError unless d(d(g)) = 0 on every generator.
  void verify_d_squared() const;

  NCPoly sigma_tb(const NCPoly& p) const;
  NCPoly sigma_lr(const NCPoly& p) const;

  /// Words of homological degree p, in canonical order.
  std::vector<Word> words_of_degree(int p) const;

  FreeDGA specialize(const PointedRing& target) const;

 private:
  NCPoly convert(const NCPoly& p) const;
  std::shared_ptr<const Signature> sig_;
  PointedRing ring_;
  std::vector<NCPoly> d_;
  std::vector<int> lr_swap_;
};

/// Generators x1, x3, ..., x_{2n-1}; d(x1) = a and
/// d(x_{2i-1}) = sum_{j+k=i} binom(i,j) x_{2j-1} x_{2k-1}.
FreeDGA minimal_model(int two_n, const PointedRing& ring);
/// Generators x, xh, r, y with d(x) = d(xh) = a, d(r) = xh - x, d(y) = 2 x xh - 2 a r.
FreeDGA four_model(const PointedRing& ring);

struct MapDefect {
  std::string generator;
  std::string defect;
};

struct ChainMapReport {
  bool ok = true;
  std::vector<MapDefect> defects;
};

/// Algebra map given on generators.
class PolyMorphism {
 public:
  PolyMorphism(FreeDGA source, FreeDGA target, std::vector<NCPoly> images);
  const FreeDGA& source() const { return source_; }
  const FreeDGA& target() const { return target_; }
  const NCPoly& image(int generator) const { return images_.at(static_cast<std::size_t>(generator)); }
  NCPoly apply(const NCPoly& p) const;
  ChainMapReport check_chain_map() const;

 private:
  FreeDGA source_;
  FreeDGA target_;
  std::vector<NCPoly> images_;
};

/// Algebra map into the augmented closed complex of planar loops (2n = 4),
/// sending the unit to the empty graffito.
class LoopsMorphism {
 public:
  LoopsMorphism(FreeDGA source, std::vector<Chain> images);
  const FreeDGA& source() const { return source_; }
  const Chain& image(int generator) const { return images_.at(static_cast<std::size_t>(generator)); }
  void set_image(std::string_view generator, Chain c);
  /// p must be homogeneous of the given degree (or zero).
  Chain apply(const NCPoly& p, int degree) const;
  ChainMapReport check_chain_map() const;

 private:
  FreeDGA source_;
  std::vector<Chain> images_;
};

/// x1 -> x, x3 -> y + 2 x r.
PolyMorphism psi(const PointedRing& ring);
/// The single-loop, two-bar and four-term pictures.
LoopsMorphism phi(const PointedRing& ring);

/// Generator and random-word checks of d sigma_tb = sigma_tb d and
/// d sigma_lr = (-1)^{deg+1} sigma_lr d, plus the (anti)homomorphism laws.
ChainMapReport check_involution_relations(const FreeDGA& a, int samples, std::uint64_t seed);

/// sigma_lr psi(alpha) - psi(alpha) - d(witness) with alpha = x1 x3 + x3 x1.
/// The default witness is r y - y r + 2 r r xh - 2 x r r. Needs a = 0.
NCPoly alpha_boundary_defect(const PointedRing& ring, std::optional<std::string> witness = std::nullopt);

/// Word bases by homological degree up to max_degree. The unital version has
/// the empty word in degree 0. Weights label each word.
ChainComplexData truncated_complex(const FreeDGA& a, int max_degree, bool nonunital);

}  // namespace tlloops
