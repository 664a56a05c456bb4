#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "quenchlab/stat_dist.hpp"

using namespace quenchlab;

TEST_CASE("standard normal CDF") {
  CHECK(std_normal_cdf(0.0) == 0.5);
  CHECK(std_normal_cdf(1.959964) ==
        doctest::Approx(0.9750000009035577).epsilon(1e-12));
  CHECK(std_normal_cdf(-8.0) ==
        doctest::Approx(6.22096057427174e-16).epsilon(1e-10));
  for (double x : {-3.0, -0.7, 0.4, 2.5}) {
    CHECK(std_normal_cdf(x) + std_normal_cdf(-x) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(std_normal_cdf(1.0) > std_normal_cdf(0.99));
}

TEST_CASE("incomplete beta agrees with direct quadrature") {
  for (double a : {0.5, 1.0, 2.0, 13.5, 50.0}) {
    for (double b : {0.5, 2.0, 27.5}) {
      for (double x : {0.01, 0.3, 0.5, 0.9, 0.99}) {
        CHECK(regularized_incomplete_beta(a, b, x) ==
              doctest::Approx(oracles::beta_inc(a, b, x)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("incomplete beta edges, symmetry, and domain") {
  CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  for (double x : {0.1, 0.4, 0.8}) {
    CHECK(regularized_incomplete_beta(3.0, 5.0, x) ==
          doctest::Approx(1.0 - regularized_incomplete_beta(5.0, 3.0, 1.0 - x))
              .epsilon(1e-12));
  }
  // I_x(1, b) = 1 - (1-x)^b in closed form
  CHECK(regularized_incomplete_beta(1.0, 4.0, 0.3) ==
        doctest::Approx(1.0 - std::pow(0.7, 4.0)).epsilon(1e-13));
  CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5),
                  std::domain_error);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.0, -2.0, 0.5),
                  std::domain_error);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, 1.5),
                  std::domain_error);
}

TEST_CASE("F distribution CDF at a reference point") {
  // offline reference for F(1.5; 1, 4)
  CHECK(f_cdf(1.5, 1.0, 4.0) ==
        doctest::Approx(0.7121358652733093).epsilon(1e-12));
  CHECK(f_cdf(0.0, 3.0, 7.0) == 0.0);
  CHECK(f_cdf(-2.0, 3.0, 7.0) == 0.0);
  CHECK(f_cdf(2.0, 3.0, 7.0) > f_cdf(1.9, 3.0, 7.0));
}

TEST_CASE("F survival keeps precision in the far tail") {
  // offline reference: the tail mass at F=1000 with (5, 10) df
  CHECK(f_sf(1000.0, 5.0, 10.0) ==
        doctest::Approx(3.7071680987086957e-13).epsilon(1e-9));
  for (double x : {0.5, 1.0, 2.5}) {
    CHECK(f_sf(x, 4.0, 20.0) ==
          doctest::Approx(1.0 - f_cdf(x, 4.0, 20.0)).epsilon(1e-12));
  }
}

TEST_CASE("F CDF matches Monte Carlo sampling") {
  const auto sample = oracles::mc_f_sample(2, 27, 200000, 99);
  for (double x : {0.2, 0.5, 1.0, 2.0, 3.5}) {
    CHECK(f_cdf(x, 2.0, 27.0) ==
          doctest::Approx(oracles::ecdf(sample, x)).epsilon(0.01));
  }
}

TEST_CASE("studentized range CDF: known-variance two-group identity") {
  // for k = 2 with known sigma, the range of two normals over sigma obeys
  // P(R <= q) = 2 Phi(q / sqrt 2) - 1
  for (double q : {0.5, 1.0, 2.0, 3.0, 4.0}) {
    const double expected = 2.0 * std_normal_cdf(q / std::sqrt(2.0)) - 1.0;
    CHECK(studentized_range_cdf(q, 2, 1e7) ==
          doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("studentized range CDF: finite df against Monte Carlo") {
  auto sample = oracles::mc_range_sample(3, 10.0, 200000, 4242);
  for (double q : {1.5, 2.5, 3.5, 4.5}) {
    CHECK(studentized_range_cdf(q, 3, 10.0) ==
          doctest::Approx(oracles::ecdf(sample, q)).epsilon(0.01));
  }
}

TEST_CASE("studentized range quantile hits reference values") {
  // offline references for q(0.95, k, df)
  CHECK(studentized_range_quantile(0.95, 2, 4.0) ==
        doctest::Approx(3.9264863229551143).epsilon(2e-5));
  CHECK(studentized_range_quantile(0.95, 4, 20.0) ==
        doctest::Approx(3.9582935609453846).epsilon(2e-5));
  // infinite-df limits
  CHECK(studentized_range_quantile(0.95, 2, 1e6) ==
        doctest::Approx(std::sqrt(2.0) * 1.959964).epsilon(1e-4));
  CHECK(studentized_range_quantile(0.95, 3, 1e6) ==
        doctest::Approx(3.314493155398122).epsilon(1e-4));
}

TEST_CASE("quantile inverts the CDF and memoization is stable") {
  const double q = studentized_range_quantile(0.9, 5, 30.0);
  CHECK(studentized_range_cdf(q, 5, 30.0) ==
        doctest::Approx(0.9).epsilon(1e-4));
  CHECK(studentized_range_quantile(0.9, 5, 30.0) == q);  // cached hit
}
