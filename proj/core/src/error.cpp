// SPDX-License-Identifier: Apache-2.0
#include "entrovol/error.hpp"

namespace entrovol {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::UnparsableDate: return "UnparsableDate";
    case ErrorCode::NonPositivePrice: return "NonPositivePrice";
    case ErrorCode::DuplicateDate: return "DuplicateDate";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::ZeroMean: return "ZeroMean";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace entrovol
