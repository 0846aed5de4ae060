#pragma once

#include <stdexcept>

namespace beamform {

// Dimension mismatch between operands.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input outside a function's mathematical domain (e.g. log2 of w <= 0).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// An iterative method failed; the message carries diagnostics.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// API misuse: wrong call order or missing state.
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

// Non-finite value where a finite one is required.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace beamform
