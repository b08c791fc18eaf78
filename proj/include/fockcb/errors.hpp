#pragma once

#include <stdexcept>
#include <string>

namespace fockcb {

// Malformed or out-of-range user input. CLI exit code 2.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters outside the implemented regime (non-integral m-vector). Exit code 3.
struct UnsupportedRegime : std::domain_error {
    using std::domain_error::domain_error;
};

// A mathematical invariant failed at runtime: bar cycle, non-antisymmetric
// correction, exhausted straightening fuel. Exit code 4.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace fockcb
