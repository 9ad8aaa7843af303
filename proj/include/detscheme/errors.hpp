#pragma once

#include <stdexcept>
#include <string>

namespace detscheme {

/// Malformed input: bad polynomial text, unknown variable, ring mismatch,
/// inhomogeneous matrix, violated precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation finished but one of its certified invariants did not hold.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace detscheme
