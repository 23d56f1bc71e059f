#pragma once

#include <stdexcept>
#include <string>

namespace melon {

// Invalid argument values (t <= 0, pole arguments, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation exactly at the pole of a meromorphic function.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A series or quadrature failed to reach the requested tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds the configured work budget.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace melon
