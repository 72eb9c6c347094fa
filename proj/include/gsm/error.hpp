#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands built over different algebra contexts or variable sets.
struct ContextMismatch : Error {
    using Error::Error;
};

// Exact division by r requested on a polynomial with an r-free term.
struct NotDivisible : Error {
    using Error::Error;
};

// r^2 -> |x_q|^2 substitution applied to a polynomial with odd r-powers.
struct OddPowerPresent : Error {
    using Error::Error;
};

// Operation requires a pair solving the generalized Cauchy-Riemann system.
struct NotGSR : Error {
    using Error::Error;
};

// The Fueter-Sce construction needs odd q.
struct EvenQ : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

}  // namespace gsm
