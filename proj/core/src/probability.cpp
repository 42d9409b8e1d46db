// SPDX-License-Identifier: Apache-2.0
#include "entrovol/probability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entrovol/error.hpp"

namespace entrovol {

namespace {

constexpr double kSumTolerance = 1e-12;

// Kahan summation: the validator must not add its own rounding noise on
// top of the stored probabilities.
double compensated_sum(std::span<const double> values) {
  double sum = 0, carry = 0;
  for (double v : values) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

HistogramSpec::HistogramSpec(std::size_t bin_count) : bin_count_(bin_count) {
  if (bin_count_ < 1) {
    throw Error(ErrorCode::InvalidArgument, "histogram needs at least 1 cell");
  }
}

HistogramSpec::HistogramSpec(std::size_t bin_count, Range range)
    : bin_count_(bin_count), range_(range) {
  if (bin_count_ < 1) {
    throw Error(ErrorCode::InvalidArgument, "histogram needs at least 1 cell");
  }
  if (!(range.hi > range.lo)) {
    throw Error(ErrorCode::InvalidArgument, "histogram range needs hi > lo");
  }
}

ProbDist::ProbDist(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "probability distribution is empty");
  }
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument,
                  "probability " + std::to_string(p) + " outside [0, 1]");
    }
  }
  const double sum = compensated_sum(probs_);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::InvalidArgument,
                "probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

ProbDist ProbDist::normalized(std::vector<double> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot normalize an empty weight vector");
  }
  double sum = 0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::InvalidArgument, "weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (sum <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "weights sum to zero");
  }
  for (double& w : weights) w /= sum;
  return ProbDist(std::move(weights), Validated{});
}

ProbDist ProbDist::uniform(std::size_t n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "uniform distribution needs n >= 1");
  }
  return ProbDist(std::vector<double>(n, 1.0 / double(n)), Validated{});
}

ProbDist histogram_prob(std::span<const double> values, const HistogramSpec& spec) {
  if (values.empty()) {
    throw Error(ErrorCode::EmptySeries, "cannot build a histogram of no observations");
  }

  double lo, hi;
  if (spec.range()) {
    lo = spec.range()->lo;
    hi = spec.range()->hi;
    for (double v : values) {
      if (v < lo || v > hi) {
        throw Error(ErrorCode::OutOfRange,
                    "observation " + std::to_string(v) + " outside explicit range [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
    }
  } else {
    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    lo = *min_it;
    hi = *max_it;
    if (lo == hi) {
      // Zero-width data-driven range: everything lands in one point cell.
      return ProbDist::uniform(1);
    }
  }

  const std::size_t w = spec.bin_count();
  std::vector<std::size_t> counts(w, 0);
  const double width = hi - lo;
  for (double v : values) {
    // Half-open cells [edge_i, edge_{i+1}), last cell closed at the top.
    auto cell = std::size_t((v - lo) / width * double(w));
    if (cell >= w) cell = w - 1;
    counts[cell]++;
  }

  std::vector<double> probs(w);
  for (std::size_t i = 0; i < w; ++i) {
    probs[i] = double(counts[i]) / double(values.size());
  }
  return ProbDist(std::move(probs));
}

ProbDist product_dist(const ProbDist& a, const ProbDist& b) {
  std::vector<double> probs;
  probs.reserve(a.support_size() * b.support_size());
  for (double pa : a.probs()) {
    for (double pb : b.probs()) {
      probs.push_back(pa * pb);
    }
  }
  return ProbDist(std::move(probs));
}

}  // namespace entrovol
