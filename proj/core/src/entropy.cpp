// SPDX-License-Identifier: Apache-2.0
#include "entrovol/entropy.hpp"

#include <cmath>
#include <random>
#include <string>

#include "entrovol/error.hpp"

namespace entrovol {

namespace {

// sum p_i^q with the convention 0^q = 0 for every q >= 0. Skipping zero
// cells matters twice: std::pow(0, 0) is 1, and q = 0 must count only the
// occupied cells.
double sum_pow(const ProbDist& d, double q) {
  double sum = 0;
  for (double p : d.probs()) {
    if (p > 0.0) sum += std::pow(p, q);
  }
  return sum;
}

bool is_q_one(double q) { return std::abs(q - 1.0) <= kQOneEpsilon; }

}  // namespace

EntropicIndex::EntropicIndex(double q) : q_(q) {
  if (!(q >= 0.0)) {
    throw Error(ErrorCode::DomainError,
                "entropic index must be a nonnegative real, got " + std::to_string(q));
  }
}

double shannon_entropy(const ProbDist& d) {
  double s = 0;
  for (double p : d.probs()) {
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double tsallis_entropy(const ProbDist& d, EntropicIndex q) {
  const double qv = q.value();
  if (is_q_one(qv)) return shannon_entropy(d);
  return (1.0 - sum_pow(d, qv)) / (qv - 1.0);
}

double q_exponential(double x, EntropicIndex q) {
  const double qv = q.value();
  if (is_q_one(qv)) return std::exp(x);
  const double base = 1.0 + (1.0 - qv) * x;
  if (!(base > 0.0)) {
    throw Error(ErrorCode::DomainError,
                "q-exponential undefined: 1 + (1-q)x = " + std::to_string(base) +
                    " is not positive");
  }
  return std::pow(base, 1.0 / (1.0 - qv));
}

double q_logarithm(double x, EntropicIndex q) {
  if (!(x > 0.0)) {
    throw Error(ErrorCode::DomainError,
                "q-logarithm needs x > 0, got " + std::to_string(x));
  }
  const double qv = q.value();
  if (is_q_one(qv)) return std::log(x);
  return (std::pow(x, 1.0 - qv) - 1.0) / (1.0 - qv);
}

double equiprobable_entropy(std::size_t w, EntropicIndex q) {
  if (w < 1) {
    throw Error(ErrorCode::InvalidArgument, "support size must be at least 1");
  }
  const double qv = q.value();
  if (is_q_one(qv)) return std::log(double(w));
  return (std::pow(double(w), 1.0 - qv) - 1.0) / (1.0 - qv);
}

double pseudo_additivity_check(const ProbDist& a, const ProbDist& b, EntropicIndex q) {
  const double sa = tsallis_entropy(a, q);
  const double sb = tsallis_entropy(b, q);
  const double joint = tsallis_entropy(product_dist(a, b), q);
  return joint - (sa + sb + (1.0 - q.value()) * sa * sb);
}

double jackson_derivative(const std::function<double(double)>& h, double q, double x) {
  if (q == 1.0 || x == 0.0) {
    throw Error(ErrorCode::InvalidArgument,
                "Jackson derivative needs q != 1 and x != 0");
  }
  return (h(q * x) - h(x)) / (q * x - x);
}

double jackson_entropy(const ProbDist& d, EntropicIndex q) {
  const double qv = q.value();
  // The dilatation collapses at q = 1; the analytic-derivative form of the
  // bias reaction is exactly the Shannon entropy.
  if (is_q_one(qv)) return shannon_entropy(d);
  const auto bias_sum = [&d](double x) { return sum_pow(d, x); };
  return -jackson_derivative(bias_sum, qv, 1.0);
}

double concavity_check(const ProbDist& a, const ProbDist& b, double mu,
                       EntropicIndex q) {
  if (a.support_size() != b.support_size()) {
    throw Error(ErrorCode::SupportMismatch,
                "mixture needs equal support sizes, got " +
                    std::to_string(a.support_size()) + " and " +
                    std::to_string(b.support_size()));
  }
  if (!(mu > 0.0 && mu < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "mixture weight must lie in (0, 1)");
  }
  if (!(q.value() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "concavity check needs q > 0");
  }

  std::vector<double> mixed(a.support_size());
  for (std::size_t i = 0; i < mixed.size(); ++i) {
    mixed[i] = mu * a.probs()[i] + (1.0 - mu) * b.probs()[i];
  }
  const double s_mix = tsallis_entropy(ProbDist(std::move(mixed)), q);
  return s_mix - (mu * tsallis_entropy(a, q) + (1.0 - mu) * tsallis_entropy(b, q));
}

double stability_probe(const ProbDist& d, double delta, EntropicIndex q, int trials,
                       std::uint64_t seed) {
  if (!(delta >= 0.0 && delta <= 0.1)) {
    throw Error(ErrorCode::InvalidArgument, "delta must lie in [0, 0.1]");
  }
  if (!(q.value() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "stability probe needs q > 0");
  }
  if (trials < 1) {
    throw Error(ErrorCode::InvalidArgument, "stability probe needs at least 1 trial");
  }

  const std::size_t n = d.support_size();
  if (n < 2 || delta == 0.0) return 0.0;  // nothing to perturb

  const double s_ref = tsallis_entropy(d, q);
  const double s_max = equiprobable_entropy(n, q);

  std::mt19937_64 engine(seed);
  auto uniform = [&engine]() {
    return double(engine() >> 11) * 0x1.0p-53;  // [0, 1)
  };

  double worst = 0;
  std::vector<double> perturbation(n);
  for (int t = 0; t < trials; ++t) {
    double abs_sum = 0;
    for (double& e : perturbation) {
      e = 2.0 * uniform() - 1.0;
      abs_sum += std::abs(e);
    }
    const double scale = abs_sum > 0 ? delta / abs_sum : 0.0;

    std::vector<double> perturbed(n);
    for (std::size_t i = 0; i < n; ++i) {
      perturbed[i] = std::max(0.0, d.probs()[i] + scale * perturbation[i]);
    }
    const double s = tsallis_entropy(ProbDist::normalized(std::move(perturbed)), q);
    worst = std::max(worst, std::abs(s_ref - s) / s_max);
  }
  return worst;
}

EntropyReport make_entropy_report(std::string label, const ProbDist& d,
                                  const std::vector<EntropicIndex>& qs) {
  EntropyReport report;
  report.label = std::move(label);
  report.shannon = shannon_entropy(d);
  report.tsallis.reserve(qs.size());
  for (const auto& q : qs) {
    report.tsallis.emplace_back(q.value(), tsallis_entropy(d, q));
  }
  return report;
}

}  // namespace entrovol
