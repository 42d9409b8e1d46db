// SPDX-License-Identifier: Apache-2.0
#include "entrovol/synthetic.hpp"

#include <cmath>
#include <numbers>

#include "entrovol/error.hpp"

namespace entrovol {

double GaussianSampler::next_uniform() {
  return double(engine_() >> 11) * 0x1.0p-53;
}

double GaussianSampler::next() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // Box-Muller. u1 is shifted into (0, 1] so the log is finite.
  const double u1 = 1.0 - next_uniform();
  const double u2 = next_uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

PriceSeries synthetic_price_series(const SyntheticSpec& spec) {
  if (spec.observations < 2) {
    throw Error(ErrorCode::InvalidArgument, "synthetic series needs at least 2 rows");
  }
  if (!(spec.volatility >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "volatility must be nonnegative");
  }
  if (!(spec.start_price > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "start price must be positive");
  }

  GaussianSampler gaussian(spec.seed);
  std::vector<Observation> observations;
  observations.reserve(spec.observations);

  auto day = std::chrono::sys_days(spec.start_date);
  double price = spec.start_price;
  observations.push_back({Date{day}, price});
  for (std::size_t i = 1; i < spec.observations; ++i) {
    price *= std::exp(spec.drift + spec.volatility * gaussian.next());
    day += std::chrono::days{1};
    observations.push_back({Date{day}, price});
  }
  return PriceSeries(spec.label, std::move(observations));
}

}  // namespace entrovol
