#pragma once

#include <stdexcept>

namespace ternary {

// Thrown when an exhaustive search would exceed its iteration budget.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when two independent decision routes disagree or a witness fails
// verification. Signals an implementation bug, never expected input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace ternary
