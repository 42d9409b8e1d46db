// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace entrovol {

using Date = std::chrono::year_month_day;

/// Parses a strict ISO-8601 calendar date (`YYYY-MM-DD`). Returns nullopt on
/// anything else, including syntactically valid but nonexistent dates.
[[nodiscard]] std::optional<Date> parse_date(std::string_view text);

/// Formats as `YYYY-MM-DD`.
[[nodiscard]] std::string format_date(Date date);

/// One dated closing price.
struct Observation {
  Date date;
  double close;

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// An ordered, dated closing-price series for one instrument.
///
/// Invariants, enforced at construction:
///   - at least two observations,
///   - dates strictly increasing (no duplicates),
///   - every close strictly positive, so log returns are defined.
class PriceSeries {
 public:
  /// Throws Error (TooFewRows, DuplicateDate, NonPositivePrice) when the
  /// observations violate an invariant. Input must already be date-sorted.
  PriceSeries(std::string label, std::vector<Observation> observations);

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] const std::vector<Observation>& observations() const noexcept {
    return observations_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return observations_.size(); }

  friend bool operator==(const PriceSeries&, const PriceSeries&) = default;

 private:
  std::string label_;
  std::vector<Observation> observations_;
};

}  // namespace entrovol
