// Ring-agnostic chain complex: ordered bases and sparse boundary matrices.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tlloops/coeff.hpp"
#include "tlloops/linalg.hpp"

namespace tlloops {

struct ChainComplexData {
  PointedRing ring = PointedRing::universal();
  int min_degree = 0;
  int max_degree = -1;
  /// basis[p] lists the encodings of degree-p basis elements (empty below min_degree).
  std::vector<std::vector<std::string>> basis;
  /// Optional weight label per basis element; empty when unlabeled.
  std::vector<std::vector<int>> weights;
  /// boundary[p]: degree p -> degree p-1 (zero rows at min_degree).
  std::vector<SparseMatrix> boundary;

  std::size_t dim(int p) const {
    return p < 0 || p > max_degree ? 0 : basis[static_cast<std::size_t>(p)].size();
  }
  const SparseMatrix& d(int p) const { return boundary.at(static_cast<std::size_t>(p)); }
  bool labeled() const;
  /// Same bases, boundary matrices pushed through Z[a] -> R.
  ChainComplexData specialize(const PointedRing& target) const;
  nlohmann::json to_json() const;
};

}  // namespace tlloops
