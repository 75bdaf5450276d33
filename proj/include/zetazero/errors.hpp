#pragma once

#include <stdexcept>
#include <string>

namespace zetazero {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation requested exactly at a pole.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A computation would exceed a configured resource cap.
struct ResourceError : Error {
    using Error::Error;
};

// An iterative method failed to converge within its budget.
struct ConvergenceError : Error {
    using Error::Error;
};

// No sign change found while bracketing a root.
struct BracketError : ConvergenceError {
    using ConvergenceError::ConvergenceError;
};

// Malformed or inconsistent cache/input file.
struct CacheError : Error {
    using Error::Error;
};

// A required range of zeros is not available.
struct MissingZerosError : Error {
    MissingZerosError(const std::string& msg, long lo, long hi)
        : Error(msg), missing_lo(lo), missing_hi(hi) {}
    long missing_lo;
    long missing_hi;
};

// Bad command-line or configuration input (CLI exit code 2).
struct UsageError : Error {
    using Error::Error;
};

}  // namespace zetazero
