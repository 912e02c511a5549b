#pragma once

#include <stdexcept>
#include <string>

namespace hb {

// Invalid symbol data (off-circle poles, duplicate terms, bad order).
struct InvalidSymbol : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Pivot collapse or loss of positivity; retrying in higher precision may help.
struct NumericalBreakdown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The Gram matrix was not positive definite. Never happens for a valid
// symbol, so seeing it means an upstream invariant was broken.
struct DegenerateSystem : std::logic_error {
  using std::logic_error::logic_error;
};

// Characteristic roots too close to coalescing for the closed form.
struct CaseBoundary : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularBorder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StructureRefuted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hb
