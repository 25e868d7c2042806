#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsa {

/// Too few observations for the requested computation.
class InsufficientData : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input has no spread (constant series, all-equal sample).
class ZeroVariance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Model outside the region where the operation is defined (e.g. non-stationary AR).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Estimation broke down numerically (rank deficiency, |reflection| >= 1).
class DegenerateFit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class IngestErrorCode {
    missing_file,
    missing_column,
    malformed_row,
    month_gap,
    duplicate_month,
    insufficient_data,
};

[[nodiscard]] const char* to_string(IngestErrorCode code) noexcept;

/// CSV ingestion failure. `line()` is 1-based, 0 when not tied to a row.
class IngestError : public std::runtime_error {
public:
    IngestError(IngestErrorCode code, std::size_t line, const std::string& what)
        : std::runtime_error(what), code_(code), line_(line) {}

    [[nodiscard]] IngestErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    IngestErrorCode code_;
    std::size_t line_;
};

}  // namespace tsa
