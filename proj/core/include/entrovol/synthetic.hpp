// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "entrovol/price_series.hpp"

namespace entrovol {

/// Standard-normal sampler that is deterministic across platforms: draws
/// uniforms straight from the fully specified mt19937_64 output stream and
/// applies the Box-Muller transform, bypassing the implementation-defined
/// std::normal_distribution.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  [[nodiscard]] double next();

  /// Uniform on [0, 1) from the top 53 bits of one engine draw.
  [[nodiscard]] double next_uniform();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0;
  bool has_cached_ = false;
};

/// Parameters of a seeded Gaussian-return random walk.
struct SyntheticSpec {
  std::string label = "synthetic";
  std::size_t observations = 1000;  // price rows, >= 2
  std::uint64_t seed = 1;
  double volatility = 0.01;  // std dev of the daily log return
  double drift = 0.0;        // mean of the daily log return
  double start_price = 100.0;
  Date start_date = Date{std::chrono::year{2000}, std::chrono::month{1},
                         std::chrono::day{3}};
};

/// P_{t+1} = P_t * exp(r_t) with r_t ~ N(drift, volatility^2) on
/// consecutive calendar days. Same spec, same series, byte for byte.
///
/// Throws Error(InvalidArgument) for observations < 2 or volatility < 0.
[[nodiscard]] PriceSeries synthetic_price_series(const SyntheticSpec& spec);

}  // namespace entrovol
