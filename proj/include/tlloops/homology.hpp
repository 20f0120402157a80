// Homology of ChainComplexData over Z, Q and F_p.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tlloops/chain_complex.hpp"

namespace tlloops {

class HomologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  /// Invariants > 1, each dividing the next. Empty over a field.
  std::vector<mpz_class> torsion;
  std::size_t basis_size = 0;
  /// Cycle vectors spanning the free part, when requested.
  std::vector<std::vector<Scalar>> representatives;

  /// e.g. "Z^2 + Z/2", "F2^3", "0".
  std::string str(const Domain& d) const;
  nlohmann::json to_json() const;
  friend bool operator==(const HomologyGroup& x, const HomologyGroup& y) {
    return x.degree == y.degree && x.rank == y.rank && x.torsion == y.torsion;
  }
};

struct DSquaredReport {
  bool ok = true;
  int degree = -1;  // p with d_{p-1} d_p != 0
  std::size_t row = 0;
  std::size_t col = 0;
  std::string value;
  std::string str() const;
};

DSquaredReport validate_d_squared(const ChainComplexData& c);

struct HomologyOptions {
  bool representatives = false;
  int threads = 0;
};

/// Degrees lo..hi; each must satisfy min_degree <= p < max_degree.
std::vector<HomologyGroup> homology(const ChainComplexData& c, int lo, int hi, const HomologyOptions& opts = {});

bool is_cycle(const ChainComplexData& c, const std::vector<Scalar>& v, int p);
/// Exact solve of d_{p+1} w = v over the complex's ring.
bool is_boundary(const ChainComplexData& c, const std::vector<Scalar>& v, int p);

struct WeightBlock {
  int weight;
  ChainComplexData complex;
  /// Position of each block basis element in the original basis, per degree.
  std::vector<std::vector<std::size_t>> origin;
};

/// Splits a weight-labeled complex with a = 0 into its weight summands.
std::vector<WeightBlock> weight_decompose(const ChainComplexData& c);

/// Homology of the direct sum computed block by block (blocks in parallel).
std::vector<HomologyGroup> homology_by_weight(const ChainComplexData& c, int lo, int hi,
                                              const HomologyOptions& opts = {});

/// Nonempty words in `alphabet` letters, d = sum_i (-1)^{i+1} (delete letter i).
ChainComplexData build_word_complex(int alphabet, int max_degree, const PointedRing& ring);

}  // namespace tlloops
