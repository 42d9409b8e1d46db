// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>

#include "entrovol/returns_stats.hpp"

namespace entrovol {

/// Linear volatility bundle. `rsd` is empty when the mean is too close to
/// zero for the ratio to be meaningful.
struct DispersionReport {
  double std_dev = 0;
  std::optional<double> rsd;
};

/// Sample standard deviation with the T-1 divisor:
/// sqrt(sum((r - mean)^2) / (T - 1)). Requires T >= 2.
///
/// Throws Error(SeriesTooShort).
[[nodiscard]] double std_dev(std::span<const double> returns);

/// Relative Standard Deviation: |std_dev / mean| * 100, a dimensionless
/// percentage. Undefined when |mean| < 1e-12 * std_dev (or mean == 0),
/// where the ratio is numerically meaningless.
///
/// Throws Error(ZeroMean) in the undefined case, Error(SeriesTooShort)
/// for T < 2.
[[nodiscard]] double relative_std_dev(std::span<const double> returns);

/// Both measures at once; the undefined-RSD case becomes an empty optional
/// instead of an error.
[[nodiscard]] DispersionReport dispersion_report(std::span<const double> returns);

[[nodiscard]] inline double std_dev(const ReturnSeries& r) {
  return std_dev(std::span<const double>(r.values()));
}
[[nodiscard]] inline double relative_std_dev(const ReturnSeries& r) {
  return relative_std_dev(std::span<const double>(r.values()));
}
[[nodiscard]] inline DispersionReport dispersion_report(const ReturnSeries& r) {
  return dispersion_report(std::span<const double>(r.values()));
}

}  // namespace entrovol
