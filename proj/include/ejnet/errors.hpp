#pragma once

#include <stdexcept>

namespace ejnet {

// Invalid modulus / dimensions / experiment parameters.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation refused because it would exceed the explicit-enumeration or
// simulation memory budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed (duplicate delivery, broken sector
// partition, ...). Should never fire on valid inputs.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// 64-bit signed arithmetic would wrap.
struct ArithmeticOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

} // namespace ejnet
