#pragma once

#include <stdexcept>

namespace tlloops {

/// Malformed text input (scalars, diagrams, graffiti, polynomials).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tlloops
