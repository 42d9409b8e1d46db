// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "entrovol/dispersion.hpp"
#include "entrovol/error.hpp"
#include "entrovol/synthetic.hpp"
#include "support/oracles.hpp"

using namespace entrovol;
using doctest::Approx;

TEST_CASE("std_dev of a constant series is zero") {
  CHECK(std_dev(std::vector<double>{0.7, 0.7, 0.7}) == 0.0);
}

TEST_CASE("std_dev of 1,2,3 is exactly 1") {
  // sum of squared deviations 2, divisor T-1 = 2, sqrt(1) = 1
  CHECK(std_dev(std::vector<double>{1.0, 2.0, 3.0}) == 1.0);
}

TEST_CASE("std_dev agrees with the oracle on fixed data") {
  const auto r = oracle::fixed_series(1000);
  CHECK(std_dev(r) == Approx(0.0063010287314117785).epsilon(1e-12));
  CHECK(std_dev(r) == Approx(oracle::sample_std_dev(r)).epsilon(1e-12));
}

TEST_CASE("std_dev recovers the generator sigma on 10000 Gaussian draws") {
  GaussianSampler gaussian(4242);
  std::vector<double> r(10000);
  for (double& x : r) x = 0.02 * gaussian.next();
  const double estimate = std_dev(r);
  CHECK(estimate > 0.019);
  CHECK(estimate < 0.021);
}

TEST_CASE("relative_std_dev evaluates its definition") {
  // mean 0.0004, sigma exactly 0.02 -> |0.02 / 0.0004| * 100 = 5000
  const std::vector<double> r = {0.0004 - 0.02, 0.0004, 0.0004 + 0.02};
  CHECK(relative_std_dev(r) == Approx(5000.0).epsilon(1e-9));
}

TEST_CASE("relative_std_dev is zero for a constant nonzero series") {
  CHECK(relative_std_dev(std::vector<double>{1.0, 1.0, 1.0, 1.0}) == 0.0);
}

TEST_CASE("relative_std_dev is positive for a negative mean") {
  const std::vector<double> r = {-0.0004 + 0.02, -0.0004, -0.0004 - 0.02};
  CHECK(relative_std_dev(r) == Approx(5000.0).epsilon(1e-9));
}

TEST_CASE("relative_std_dev rejects a (near-)zero mean") {
  try {
    (void)relative_std_dev(std::vector<double>{-1.0, 1.0});
    FAIL("expected ZeroMean");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroMean);
  }
  // mean ~5e-14 against sigma ~1.4: below the 1e-12*sigma floor
  CHECK_THROWS_AS((void)relative_std_dev(std::vector<double>{-1.0, 1.0 + 1e-13}),
                  Error);
}

TEST_CASE("RSD is scale invariant") {
  const auto base = oracle::fixed_series(800, 0xABCDEF);
  const double reference = relative_std_dev(base);
  for (double scale : {0.1, 10.0, 3.7}) {
    auto scaled = base;
    for (double& x : scaled) x *= scale;
    CHECK(relative_std_dev(scaled) == Approx(reference).epsilon(1e-9));
  }
}

TEST_CASE("std_dev scaling and shift behavior") {
  const auto base = oracle::fixed_series(300, 0xBEEF);
  const double sigma = std_dev(base);
  for (double scale : {-2.0, 0.5}) {
    auto scaled = base;
    for (double& x : scaled) x *= scale;
    CHECK(std_dev(scaled) == Approx(std::abs(scale) * sigma).epsilon(1e-12));
  }
  auto shifted = base;
  for (double& x : shifted) x += 0.37;
  CHECK(std_dev(shifted) == Approx(sigma).epsilon(1e-9));
}

TEST_CASE("dispersion_report carries an empty RSD instead of throwing") {
  const auto report = dispersion_report(std::vector<double>{-1.0, 1.0});
  CHECK(report.std_dev == Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_FALSE(report.rsd.has_value());

  const auto defined = dispersion_report(std::vector<double>{1.0, 2.0, 3.0});
  REQUIRE(defined.rsd.has_value());
  CHECK(*defined.rsd == Approx(50.0).epsilon(1e-12));  // sigma 1, mean 2
}

TEST_CASE("dispersion requires at least two returns") {
  CHECK_THROWS_AS((void)std_dev(std::vector<double>{1.0}), Error);
  CHECK_THROWS_AS((void)relative_std_dev(std::vector<double>{1.0}), Error);
}
