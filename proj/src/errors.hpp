#pragma once

#include <stdexcept>
#include <string>

namespace tightcount {

// Input violates a precondition or a type invariant.
// (std::domain_error is used directly for these.)

// A computation was refused because it would exceed a tractability guard.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested operation is outside the supported range of the model
// (e.g. a bypass on a two-point multicurve).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested dividing-set data with p = 0, which supports no tight structure.
struct no_tight_structures_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed.  This is never silenced: it means a
// combinatorial statement the library relies on broke on concrete input.
struct invariant_violation_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace tightcount
