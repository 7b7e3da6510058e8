#pragma once

#include <stdexcept>

namespace fingap {

// Invalid user input: bad endpoint lists, malformed configs, empty samples.
class ValidationError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A request outside the mathematical domain of an operation
// (evaluation inside the essential spectrum, negative weight, ...).
class DomainError : public std::domain_error {
  using std::domain_error::domain_error;
};

// An algorithm failed to meet its accuracy contract
// (quadrature non-convergence, Newton divergence, eigensolver stall).
class NumericalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Geometric degeneracy: overlapping orthocircles, closed gaps on a
// continuation path, rank-deficient matching systems.
class GeometryError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace fingap
