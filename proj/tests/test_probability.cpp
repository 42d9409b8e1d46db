// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "entrovol/entropy.hpp"
#include "entrovol/error.hpp"
#include "entrovol/probability.hpp"
#include "support/random_dists.hpp"

using namespace entrovol;
using doctest::Approx;

TEST_CASE("two observations split across two cells") {
  const auto d = histogram_prob(std::vector<double>{0.0, 1.0}, HistogramSpec(2));
  REQUIRE(d.support_size() == 2);
  CHECK(d.probs()[0] == 0.5);
  CHECK(d.probs()[1] == 0.5);
}

TEST_CASE("a constant series degenerates to the point distribution") {
  for (std::size_t w : {1u, 4u, 100u}) {
    const auto d =
        histogram_prob(std::vector<double>{2.5, 2.5, 2.5}, HistogramSpec(w));
    REQUIRE(d.support_size() == 1);
    CHECK(d.probs()[0] == 1.0);
  }
}

TEST_CASE("the top edge is closed so the maximum lands in the last cell") {
  const std::vector<double> v = {0.0, 1.0, 2.0, 3.0, 4.0};
  const auto d = histogram_prob(v, HistogramSpec(5));
  for (double p : d.probs()) CHECK(p == 0.2);
}

TEST_CASE("uniform draws concentrate near 1/W per cell") {
  testutil::DistGen gen(777);
  const auto v = gen.values(1000, 0.0, 1.0);
  const auto d = histogram_prob(v, HistogramSpec(10));
  REQUIRE(d.support_size() == 10);
  for (double p : d.probs()) {
    CHECK(p > 0.05);
    CHECK(p < 0.15);
  }
}

TEST_CASE("explicit range places cells on the given grid") {
  const HistogramSpec spec(4, {0.0, 4.0});
  const auto d = histogram_prob(std::vector<double>{1.0, 3.0}, spec);
  REQUIRE(d.support_size() == 4);
  CHECK(d.probs() == std::vector<double>{0.0, 0.5, 0.0, 0.5});
}

TEST_CASE("explicit range rejects observations outside it") {
  const HistogramSpec spec(4, {0.0, 1.0});
  try {
    (void)histogram_prob(std::vector<double>{0.5, 1.5}, spec);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("empty cells are kept with probability zero") {
  const auto d = histogram_prob(std::vector<double>{0.0, 10.0}, HistogramSpec(5));
  REQUIRE(d.support_size() == 5);
  CHECK(d.probs()[0] == 0.5);
  CHECK(d.probs()[1] == 0.0);
  CHECK(d.probs()[4] == 0.5);
}

TEST_CASE("histogram input and spec validation") {
  CHECK_THROWS_AS((void)histogram_prob(std::vector<double>{}, HistogramSpec(3)),
                  Error);
  CHECK_THROWS_AS(HistogramSpec(0), Error);
  CHECK_THROWS_AS(HistogramSpec(3, {1.0, 1.0}), Error);
  CHECK_THROWS_AS(HistogramSpec(3, {2.0, 1.0}), Error);
}

TEST_CASE("probabilities always sum to one") {
  testutil::DistGen gen(31415);
  for (int iter = 0; iter < 50; ++iter) {
    const auto v = gen.values(gen.size_between(1, 2000), -0.08, 0.09);
    const auto d = histogram_prob(v, HistogramSpec(gen.size_between(1, 80)));
    const double sum = std::accumulate(d.probs().begin(), d.probs().end(), 0.0);
    CHECK(sum == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("Shannon entropy under cell refinement obeys the grouping bounds") {
  testutil::DistGen gen(271828);
  for (int iter = 0; iter < 20; ++iter) {
    const auto v = gen.values(500, 0.0, 1.0);
    const std::size_t w = gen.size_between(4, 16);
    const std::size_t k = gen.size_between(2, 4);
    const double lo = *std::min_element(v.begin(), v.end());
    const double hi = *std::max_element(v.begin(), v.end());
    const double coarse =
        shannon_entropy(histogram_prob(v, HistogramSpec(w, {lo, hi})));
    const double fine =
        shannon_entropy(histogram_prob(v, HistogramSpec(w * k, {lo, hi})));
    CHECK(coarse <= fine + 1e-9);
    CHECK(fine <= coarse + std::log(double(k)) + 1e-9);
  }
}

TEST_CASE("product_dist") {
  SUBCASE("point mass is the identity element") {
    const auto d = ProbDist({0.2, 0.3, 0.5});
    const auto prod = product_dist(ProbDist::uniform(1), d);
    CHECK(prod.probs() == d.probs());
  }
  SUBCASE("uniform times uniform is uniform") {
    const auto prod = product_dist(ProbDist::uniform(2), ProbDist::uniform(2));
    CHECK(prod.probs() == std::vector<double>{0.25, 0.25, 0.25, 0.25});
  }
  SUBCASE("entries are pairwise products in a-major order") {
    const auto prod = product_dist(ProbDist({0.2, 0.8}), ProbDist({0.3, 0.7}));
    REQUIRE(prod.support_size() == 4);
    CHECK(prod.probs()[0] == Approx(0.06).epsilon(1e-15));
    CHECK(prod.probs()[1] == Approx(0.14).epsilon(1e-15));
    CHECK(prod.probs()[2] == Approx(0.24).epsilon(1e-15));
    CHECK(prod.probs()[3] == Approx(0.56).epsilon(1e-15));
  }
  SUBCASE("normalization is preserved on random inputs") {
    testutil::DistGen gen(161803);
    for (int iter = 0; iter < 30; ++iter) {
      const auto prod =
          product_dist(gen.dist_between(2, 40), gen.dist_between(2, 40));
      const double sum =
          std::accumulate(prod.probs().begin(), prod.probs().end(), 0.0);
      CHECK(sum == Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("ProbDist validation") {
  CHECK_THROWS_AS(ProbDist({}), Error);
  CHECK_THROWS_AS(ProbDist({0.5, 0.6}), Error);
  CHECK_THROWS_AS(ProbDist({1.2, -0.2}), Error);
  CHECK_THROWS_AS(ProbDist({0.9, 0.0999}), Error);
  CHECK_NOTHROW(ProbDist({0.25, 0.25, 0.5}));
  CHECK_THROWS_AS((void)ProbDist::normalized({0.0, 0.0}), Error);
  CHECK_THROWS_AS((void)ProbDist::normalized({1.0, -0.5}), Error);
  CHECK_THROWS_AS((void)ProbDist::uniform(0), Error);
  CHECK(ProbDist::uniform(4).probs() == std::vector<double>(4, 0.25));
}
