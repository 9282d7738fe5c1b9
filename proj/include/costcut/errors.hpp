#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace costcut {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (tables, labels, probabilities).
class DataError : public Error {
public:
    using Error::Error;
};

// Encoding-plan problems: unknown variables, duplicate columns, bad thresholds.
class EncodingError : public Error {
public:
    using Error::Error;
};

// Model fitting failures (degenerate outcome, arity mismatches, ...).
class FitError : public Error {
public:
    using Error::Error;
};

// Rank-deficient design or covariance; carries the offending column names.
class SingularError : public FitError {
public:
    SingularError(const std::string& message, std::vector<std::string> columns)
        : FitError(message), columns_(std::move(columns)) {}

    const std::vector<std::string>& columns() const { return columns_; }

private:
    std::vector<std::string> columns_;
};

// Command-line misuse; mapped to exit code 2 by the CLI.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace costcut
