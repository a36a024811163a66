#pragma once

#include <stdexcept>
#include <string>

namespace volgap {

// Argument outside the mathematical domain of an operation (n < 2, t <= 0, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Argument inside the domain but outside the range where a stated bound holds.
struct PreconditionError : DomainError {
    using DomainError::DomainError;
};

// No sign change across a bracket, or bracket expansion gave up.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Objective returned NaN during root finding.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration or command-line input; the CLI maps this to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace volgap
