// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace entrovol {

/// Every failure mode the library reports. Codes are stable so callers can
/// branch on them instead of parsing messages.
enum class ErrorCode {
  // CSV ingestion
  MissingColumn,
  UnparsableDate,
  NonPositivePrice,
  DuplicateDate,
  TooFewRows,
  // descriptive statistics
  SeriesTooShort,
  ZeroVariance,
  ZeroMean,
  // histogram estimation
  EmptySeries,
  OutOfRange,
  // entropy functionals
  SupportMismatch,
  DomainError,
  // precondition violations not covered above
  InvalidArgument,
};

[[nodiscard]] const char* to_string(ErrorCode code) noexcept;

/// Library-wide exception. Carries a code and, for file-sourced errors,
/// the 1-based line number of the offending row.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Error(ErrorCode code, const std::string& message, std::size_t row)
      : std::runtime_error(message), code_(code), row_(row) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] std::optional<std::size_t> row() const noexcept { return row_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> row_;
};

}  // namespace entrovol
