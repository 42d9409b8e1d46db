// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "entrovol/price_series.hpp"

namespace entrovol {

/// Daily log returns of one price series: r[t] = ln P[t+1] - ln P[t].
/// One element shorter than its source series; all values finite.
class ReturnSeries {
 public:
  /// Throws Error(InvalidArgument) on an empty or non-finite input.
  ReturnSeries(std::string label, std::vector<double> returns);

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return returns_; }
  [[nodiscard]] std::size_t size() const noexcept { return returns_.size(); }

 private:
  std::string label_;
  std::vector<double> returns_;
};

/// Continuously compounded one-period returns of `prices`, in date order.
[[nodiscard]] ReturnSeries log_returns(const PriceSeries& prices);

/// The descriptive-statistics bundle reported per return series.
///
/// Conventions: central moments use the biased divisor n; kurtosis is raw
/// (a normal sample tends to 3, not 0); jarque_bera is
/// (n/6)(skewness^2 + (kurtosis-3)^2/4) and jb_p_value its chi-square(2)
/// survival value exp(-jarque_bera/2).
struct SummaryStats {
  double mean = 0;
  double median = 0;
  double maximum = 0;
  double minimum = 0;
  double skewness = 0;
  double kurtosis = 0;
  double jarque_bera = 0;
  double jb_p_value = 0;
  std::size_t n = 0;
};

/// Computes SummaryStats over raw return values.
///
/// Throws Error(SeriesTooShort) for fewer than 4 values and
/// Error(ZeroVariance) for a constant series, where the standardized
/// moments are undefined.
[[nodiscard]] SummaryStats summary_stats(std::span<const double> returns);

[[nodiscard]] inline SummaryStats summary_stats(const ReturnSeries& r) {
  return summary_stats(std::span<const double>(r.values()));
}

}  // namespace entrovol
