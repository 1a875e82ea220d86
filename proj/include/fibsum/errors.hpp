#pragma once

#include <stdexcept>
#include <string>

namespace fibsum {

// Arithmetic failures inside the golden ring. These mean an exact value could
// not be carried into the requested domain; callers that evaluate printed
// formulas catch them and record the outcome instead of aborting.
struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotDivisible : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

struct NotRational : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

struct NotIntegral : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace fibsum
