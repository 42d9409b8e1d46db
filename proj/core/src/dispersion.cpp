// SPDX-License-Identifier: Apache-2.0
#include "entrovol/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entrovol/error.hpp"

namespace entrovol {

namespace {

// RSD is reported as undefined once |mean| drops below this multiple of
// sigma: the ratio is pure noise there.
constexpr double kMeanToSigmaFloor = 1e-12;

struct MeanSigma {
  double mean;
  double sigma;
};

MeanSigma mean_and_sigma(std::span<const double> returns) {
  const std::size_t t = returns.size();
  if (t < 2) {
    throw Error(ErrorCode::SeriesTooShort,
                "standard deviation needs at least 2 returns, got " + std::to_string(t));
  }
  double sum = 0;
  double lo = returns[0], hi = returns[0];
  for (double r : returns) {
    sum += r;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  const double mean = sum / double(t);
  if (lo == hi) return {lo, 0.0};  // constant series: exact zero, no mean-rounding noise
  double ss = 0;
  for (double r : returns) {
    const double d = r - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / double(t - 1))};
}

bool rsd_defined(const MeanSigma& ms) {
  return ms.mean != 0.0 && std::abs(ms.mean) >= kMeanToSigmaFloor * ms.sigma;
}

}  // namespace

double std_dev(std::span<const double> returns) {
  return mean_and_sigma(returns).sigma;
}

double relative_std_dev(std::span<const double> returns) {
  const auto ms = mean_and_sigma(returns);
  if (!rsd_defined(ms)) {
    throw Error(ErrorCode::ZeroMean,
                "relative standard deviation is undefined for a (near-)zero mean");
  }
  return std::abs(ms.sigma / ms.mean) * 100.0;
}

DispersionReport dispersion_report(std::span<const double> returns) {
  const auto ms = mean_and_sigma(returns);
  DispersionReport report;
  report.std_dev = ms.sigma;
  if (rsd_defined(ms)) {
    report.rsd = std::abs(ms.sigma / ms.mean) * 100.0;
  }
  return report;
}

}  // namespace entrovol
