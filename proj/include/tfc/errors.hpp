#pragma once

#include <stdexcept>
#include <string>

namespace tfc {

// Malformed input: dangling ids, dimension mismatches, unknown JSON keys.
// A well-formed complex that fails a check is not an InputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An explicit enumeration cap was exceeded; partial results are discarded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BoundaryMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The hypothesis of a checked statement does not hold for the given input.
class HypothesisNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tfc
