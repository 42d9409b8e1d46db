// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "entrovol/probability.hpp"

namespace entrovol {

/// Evaluations with |q - 1| <= this epsilon use the q -> 1 limit form
/// (the q-logarithm converges uniformly to the natural logarithm there,
/// and the direct formula is a numerically hopeless 0/0).
inline constexpr double kQOneEpsilon = 1e-9;

/// The entropic index q >= 0. q < 1 privileges rare events, q > 1 common
/// ones; q = 1 recovers Boltzmann-Gibbs statistics.
class EntropicIndex {
 public:
  /// Throws Error(DomainError) for q < 0.
  EntropicIndex(double q);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] double value() const noexcept { return q_; }

  /// True when q lies in [1, 5/3), the range required for applications
  /// with finite variance. Advisory only; evaluation works for any q >= 0.
  [[nodiscard]] bool finite_variance_range() const noexcept {
    return q_ >= 1.0 && q_ < 5.0 / 3.0;
  }

 private:
  double q_;
};

/// Boltzmann-Gibbs-Shannon entropy, S = -sum p_i ln p_i, with the
/// convention 0 ln 0 = 0. Natural logarithm throughout.
[[nodiscard]] double shannon_entropy(const ProbDist& d);

/// Tsallis entropy, S_q = (1 - sum p_i^q) / (q - 1), with 0^q = 0.
///
/// Within kQOneEpsilon of q = 1 this returns shannon_entropy(d). At q = 0
/// the formula literally yields (number of nonzero cells) - 1.
[[nodiscard]] double tsallis_entropy(const ProbDist& d, EntropicIndex q);

/// q-exponential: [1 + (1-q)x]^(1/(1-q)), e^x at q = 1. Defined on the
/// principal branch 1 + (1-q)x > 0.
///
/// Throws Error(DomainError) outside the branch.
[[nodiscard]] double q_exponential(double x, EntropicIndex q);

/// q-logarithm: (x^(1-q) - 1)/(1-q) for x > 0, ln x at q = 1. Inverse of
/// q_exponential on its domain.
///
/// Throws Error(DomainError) for x <= 0.
[[nodiscard]] double q_logarithm(double x, EntropicIndex q);

/// Entropy of the equiprobable distribution over W cells,
/// (W^(1-q) - 1)/(1-q) — the extreme (maximal) value of S_q at support
/// size W. Equals q_logarithm(W, q); ln W at q = 1.
[[nodiscard]] double equiprobable_entropy(std::size_t w, EntropicIndex q);

/// Pseudo-additivity residual for independent systems:
///   S_q(AxB) - [S_q(A) + S_q(B) + (1-q) S_q(A) S_q(B)].
/// The identity is exact, so |residual| stays below 1e-10 for any inputs;
/// anything larger indicates an evaluation bug.
[[nodiscard]] double pseudo_additivity_check(const ProbDist& a, const ProbDist& b,
                                             EntropicIndex q);

/// Jackson's generalized derivative of h under dilatation of the abscissa:
///   D_q h(x) = (h(qx) - h(x)) / (qx - x).
/// Recovers dh/dx as q -> 1. Requires q != 1 and x != 0.
[[nodiscard]] double jackson_derivative(const std::function<double(double)>& h,
                                        double q, double x);

/// Tsallis entropy through the bias-reaction form
///   -[D_q sum p_i^x]_{x=1} = -(sum p_i^q - sum p_i)/(q - 1),
/// evaluating sum p_i rather than assuming it is 1. Agrees with
/// tsallis_entropy to 1e-12; q within kQOneEpsilon of 1 falls back to the
/// analytic derivative, i.e. Shannon entropy.
[[nodiscard]] double jackson_entropy(const ProbDist& d, EntropicIndex q);

/// Concavity residual of the convex mixture m = mu a + (1-mu) b:
///   S_q(m) - [mu S_q(a) + (1-mu) S_q(b)].
/// Nonnegative for q > 0 (concavity); the check passes while the residual
/// stays above -1e-12.
///
/// Throws Error(SupportMismatch) for different support sizes and
/// Error(InvalidArgument) for mu outside (0,1) or q <= 0.
[[nodiscard]] double concavity_check(const ProbDist& a, const ProbDist& b,
                                     double mu, EntropicIndex q);

/// Randomized experimental-robustness diagnostic. Applies `trials`
/// perturbations with total variation sum |p_i - p'_i| <= delta
/// (re-normalized) and returns the worst relative entropy change
/// |S_q(d) - S_q(d')| / S_q^max, where S_q^max = equiprobable_entropy(n, q).
/// Tends to 0 as delta -> 0. A diagnostic, not a proof: the underlying
/// stability condition is asymptotic in the support size.
///
/// Requires 0 <= delta <= 0.1 and q > 0; throws Error(InvalidArgument).
[[nodiscard]] double stability_probe(const ProbDist& d, double delta, EntropicIndex q,
                                     int trials, std::uint64_t seed = 0x5eed);

/// Shannon and Tsallis values for one labelled series, the rows of the
/// per-series entropy report.
struct EntropyReport {
  std::string label;
  double shannon = 0;
  std::vector<std::pair<double, double>> tsallis;  // (q, S_q), input order
};

/// Evaluates Shannon plus Tsallis at each q over one distribution.
[[nodiscard]] EntropyReport make_entropy_report(std::string label, const ProbDist& d,
                                                const std::vector<EntropicIndex>& qs);

}  // namespace entrovol
