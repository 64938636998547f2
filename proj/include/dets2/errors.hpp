#pragma once

#include <stdexcept>
#include <string>

namespace dets2 {

// Misuse of field arithmetic: operands from different fields, inverse of zero.
// These always indicate a caller bug, never bad user input.
struct FieldError : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed user input (JSON instances, scalar strings, non-prime moduli).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A property the library guarantees failed to hold. The message carries
// enough context to reproduce the instance.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dets2
