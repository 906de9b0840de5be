#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsqfit {

/// Base class for failures caused by malformed or unusable input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CSV ingestion failure. Line numbers are 1-based and point at the
/// offending input line; column is the 1-based field index.
class CsvParseError : public InputError {
public:
    CsvParseError(std::size_t line, std::size_t column, const std::string& message)
        : InputError("line " + std::to_string(line) + ", field " + std::to_string(column) +
                     ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Fewer than two usable data rows.
class EmptyDatasetError : public InputError {
public:
    using InputError::InputError;
};

/// Base class for failures of the numerical procedures themselves.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A power, partial sum, or derived quantity left the finite double range.
class OverflowError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Gaussian elimination found no usable pivot: fewer than degree+1 distinct
/// x values, or hopeless conditioning.
class SingularSystemError : public NumericError {
public:
    using NumericError::NumericError;
};

/// QR factorization met a negligible diagonal entry.
class RankDeficientError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Requested polynomial degree above the supported cap.
class DegreeTooHighError : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace lsqfit
