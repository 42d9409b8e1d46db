// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace entrovol {

/// Equidistant-cell histogram layout: a cell count and either a data-driven
/// range (min..max of the series) or an explicit one.
class HistogramSpec {
 public:
  struct Range {
    double lo;
    double hi;
  };

  /// Data-driven range. Throws Error(InvalidArgument) for bin_count < 1.
  explicit HistogramSpec(std::size_t bin_count);

  /// Explicit range. Throws Error(InvalidArgument) for bin_count < 1 or
  /// hi <= lo.
  HistogramSpec(std::size_t bin_count, Range range);

  [[nodiscard]] std::size_t bin_count() const noexcept { return bin_count_; }
  [[nodiscard]] const std::optional<Range>& range() const noexcept { return range_; }

 private:
  std::size_t bin_count_;
  std::optional<Range> range_;
};

/// A finite discrete probability distribution: p_i in [0,1] summing to 1
/// (within 1e-12, compensated summation).
class ProbDist {
 public:
  /// Validates the invariant; throws Error(InvalidArgument) when violated.
  explicit ProbDist(std::vector<double> probs);

  /// Divides a nonnegative weight vector by its sum.
  [[nodiscard]] static ProbDist normalized(std::vector<double> weights);

  /// p_i = 1/n over n cells.
  [[nodiscard]] static ProbDist uniform(std::size_t n);

  [[nodiscard]] const std::vector<double>& probs() const noexcept { return probs_; }
  [[nodiscard]] std::size_t support_size() const noexcept { return probs_.size(); }

 private:
  struct Validated {};
  ProbDist(std::vector<double> probs, Validated) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

/// Estimates cell probabilities with an equidistant-cell histogram.
///
/// The range is split into bin_count equal-width cells, half-open
/// [edge_i, edge_{i+1}) except the last, which is closed so the maximum is
/// counted; p_i = count_i / N. Empty cells keep p_i = 0. A data-driven
/// range on a constant series degenerates to the point distribution (1).
///
/// Throws Error(EmptySeries) for no data and Error(OutOfRange) when an
/// explicit range excludes an observation.
[[nodiscard]] ProbDist histogram_prob(std::span<const double> values,
                                      const HistogramSpec& spec);

/// Joint distribution of two independent systems: entries p_i * q_j in
/// row-major order (a-index major), size n_a * n_b.
[[nodiscard]] ProbDist product_dist(const ProbDist& a, const ProbDist& b);

}  // namespace entrovol
