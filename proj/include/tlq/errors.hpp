#pragma once

#include <stdexcept>

namespace tlq {

// An operator failed a structural guarantee (positivity, Hermiticity,
// planarity) beyond tolerance.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Gram matrix could not reach full sector rank: r is non-generic.
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A quantity that must be real carries an imaginary part above tolerance,
// or a denominator degenerated.
struct NumericConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tlq
