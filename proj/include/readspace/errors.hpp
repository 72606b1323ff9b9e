#pragma once

#include <stdexcept>
#include <string>

namespace readspace {

// Exact values only: a RangeError means a quantity (typically a_n^2 as a
// power-of-two exponent) left the representable window, never that rounding
// occurred.
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violation of the admissibility constraints on (a_n); the message names the
// violated constraint.
struct AdmissibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certified check failed or a witness search exhausted its budget; the
// message names the failing check. Maps to exit code 1 in the CLI.
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure (e.g. a solver produced a certificate that does
// not verify). Always a bug, never an input problem.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace readspace
