#ifndef REPEATERLAB_ERRORS_HPP
#define REPEATERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace repeaterlab {

// Configuration / input errors (CLI exit code 1).
struct InvalidParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + std::move(msg)),
          line(line_number) {}
    int line;
};

// Numerical failures (CLI exit code 2).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroProbabilityError : NumericalError {
    using NumericalError::NumericalError;
};

struct NonConvergenceError : NumericalError {
    using NumericalError::NumericalError;
};

struct TrialBudgetError : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace repeaterlab

#endif
