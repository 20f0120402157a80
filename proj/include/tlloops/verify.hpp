// Named verification suites. Each suite is a list of exact checks with timing.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tlloops/coeff.hpp"

namespace tlloops {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string claim;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by name
  bool passed() const;
  double seconds() const;
  std::string str() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  int max_degree = 5;
  /// Ring names ("z", "q", "f2", ...); empty picks the suite default.
  std::vector<std::string> rings;
  int samples = 200;
  std::uint64_t seed = 0;
  int threads = 0;
};

/// "za" (or "z[a]") is the universal ring; anything else is Domain::parse with the given a.
PointedRing parse_ring(std::string_view name, long a = 0);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opts = {});

}  // namespace tlloops
