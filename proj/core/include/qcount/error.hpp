#pragma once

#include <stdexcept>
#include <string>

namespace qcount {

/// A caller supplied parameters outside a documented precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Intermediate results violated a numerical invariant (e.g. a negative
/// two-mode probability). Signals a bug in the caller's coefficients.
class NumericalInconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qcount
