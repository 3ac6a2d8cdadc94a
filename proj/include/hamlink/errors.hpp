#pragma once

#include <stdexcept>
#include <string>

namespace hamlink {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph input; carries a 1-based line number when known.
struct ParseError : Error {
    ParseError(std::string msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(msg)
                         : std::move(msg)),
          line_number(line) {}
    int line_number;
};

// A solver was promised an independence bound that the input violates.
struct PromiseError : Error {
    using Error::Error;
};

// An exact search was refused because the instance exceeds its size guard.
struct SizeGuardError : Error {
    using Error::Error;
};

// Caller broke a documented precondition (bad vertex id, u == v, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Internal consistency check failed; indicates a bug or a false precondition
// that could not be detected up front. Never a silent wrong answer.
struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace hamlink
