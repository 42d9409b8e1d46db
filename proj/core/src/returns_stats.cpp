// SPDX-License-Identifier: Apache-2.0
#include "entrovol/returns_stats.hpp"

#include <algorithm>
#include <cmath>

#include "entrovol/error.hpp"

namespace entrovol {

ReturnSeries::ReturnSeries(std::string label, std::vector<double> returns)
    : label_(std::move(label)), returns_(std::move(returns)) {
  if (returns_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "return series is empty");
  }
  for (double r : returns_) {
    if (!std::isfinite(r)) {
      throw Error(ErrorCode::InvalidArgument, "non-finite return value");
    }
  }
}

ReturnSeries log_returns(const PriceSeries& prices) {
  const auto& obs = prices.observations();
  std::vector<double> returns;
  returns.reserve(obs.size() - 1);
  for (std::size_t t = 1; t < obs.size(); ++t) {
    returns.push_back(std::log(obs[t].close) - std::log(obs[t - 1].close));
  }
  return ReturnSeries(prices.label(), std::move(returns));
}

SummaryStats summary_stats(std::span<const double> returns) {
  const std::size_t n = returns.size();
  if (n < 4) {
    throw Error(ErrorCode::SeriesTooShort,
                "summary statistics need at least 4 returns, got " + std::to_string(n));
  }

  double sum = 0;
  double lo = returns[0], hi = returns[0];
  for (double r : returns) {
    sum += r;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  const double mean = sum / double(n);
  if (lo == hi) {
    throw Error(ErrorCode::ZeroVariance,
                "skewness and kurtosis are undefined on a constant series");
  }

  // Central moments with the biased divisor n.
  double m2 = 0, m3 = 0, m4 = 0;
  for (double r : returns) {
    const double d = r - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= double(n);
  m3 /= double(n);
  m4 /= double(n);

  std::vector<double> sorted(returns.begin(), returns.end());
  std::sort(sorted.begin(), sorted.end());
  const double median = (n % 2 == 1)
                            ? sorted[n / 2]
                            : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  SummaryStats s;
  s.n = n;
  s.mean = mean;
  s.median = median;
  s.minimum = sorted.front();
  s.maximum = sorted.back();
  s.skewness = m3 / std::pow(m2, 1.5);
  s.kurtosis = m4 / (m2 * m2);  // raw, normal -> 3
  const double excess = s.kurtosis - 3.0;
  s.jarque_bera =
      (double(n) / 6.0) * (s.skewness * s.skewness + excess * excess / 4.0);
  s.jb_p_value = std::exp(-s.jarque_bera / 2.0);  // chi-square(2) survival
  return s;
}

}  // namespace entrovol
