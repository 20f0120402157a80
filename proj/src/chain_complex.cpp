#include "tlloops/chain_complex.hpp"

namespace tlloops {

bool ChainComplexData::labeled() const {
  for (int p = min_degree; p <= max_degree; ++p)
    if (weights.size() <= static_cast<std::size_t>(p) || weights[p].size() != basis[p].size()) return false;
  return true;
}

ChainComplexData ChainComplexData::specialize(const PointedRing& target) const {
  ChainComplexData out = *this;
  out.ring = target;
  for (auto& m : out.boundary) m = m.specialize(target);
  return out;
}

nlohmann::json ChainComplexData::to_json() const {
  nlohmann::json degrees = nlohmann::json::array();
  for (int p = min_degree; p <= max_degree; ++p) {
    nlohmann::json triples = nlohmann::json::array();
    for (const auto& e : boundary[p].entries()) triples.push_back({e.row, e.col, e.value.str()});
    nlohmann::json entry = {{"degree", p}, {"basis", basis[p]}, {"boundary", triples}};
    if (labeled()) entry["weights"] = weights[p];
    degrees.push_back(entry);
  }
  return {{"ring", ring.name()}, {"min_degree", min_degree}, {"max_degree", max_degree}, {"degrees", degrees}};
}

}  // namespace tlloops
