#pragma once

#include <stdexcept>
#include <string>

namespace lambent {

/// Raised when values from Q(sqrt 3) and Q(sqrt 5) meet in one operation.
class DiscriminantMismatch : public std::invalid_argument {
 public:
  DiscriminantMismatch(int lhs, int rhs)
      : std::invalid_argument("discriminant mismatch: sqrt(" + std::to_string(lhs) +
                              ") vs sqrt(" + std::to_string(rhs) + ")") {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lambent
