// Assembly of the complexes of planar loops (and their subquotients) into
// bases and boundary matrices.
#pragma once

#include <optional>
#include <vector>

#include "tlloops/chain_complex.hpp"
#include "tlloops/graffito.hpp"

namespace tlloops {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ComplexSpec {
  int two_n = 4;
  PointedRing ring = PointedRing::universal();
  EndSpec ends;
  int max_degree = 3;
  /// Keep only graffiti with exactly this many loops (needs a = 0).
  std::optional<int> weight;
  /// Keep only graffiti with exactly this many dividers (needs subquotient).
  std::optional<int> dividers;
  /// C[w,j] semantics: faces that raise the divider count are dropped.
  bool subquotient = false;

  int min_degree() const { return ends.augmented ? 0 : 1; }
  /// Throws SpecError on an invalid combination.
  void validate() const;
};

/// Table-driven OpenMP assembly. threads <= 0 uses the OpenMP default.
ChainComplexData build_complex(const ComplexSpec& spec, int threads = 0);
/// Serial assembly through Graffito/Chain values; kept as a test oracle.
ChainComplexData build_complex_reference(const ComplexSpec& spec);

/// Basis of one degree, canonical order.
std::vector<Graffito> enumerate_graffiti(const ComplexSpec& spec, int degree);
/// Size of that basis without materializing it.
std::size_t count_graffiti(const ComplexSpec& spec, int degree);

}  // namespace tlloops
