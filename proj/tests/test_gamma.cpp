#include <doctest.h>

#include <cmath>
#include <random>

#include "f4/errors.hpp"
#include "f4/gamma.hpp"
#include "oracles.hpp"

using namespace f4;

TEST_CASE("gamma special values") {
  CHECK(std::abs(gamma_fn(1.0) - 1.0) < 1e-14);
  const double a = 0.3;
  CHECK(std::abs(gamma_fn(a) * gamma_fn(1.0 - a) - kPi / std::sin(kPi * a)) < 1e-12);
  // Recurrence from Gamma(1/2) = sqrt(pi).
  const double g55 = std::sqrt(kPi) * 0.5 * 1.5 * 2.5 * 3.5 * 4.5;
  CHECK(std::abs(gamma_fn(5.5) - g55) / g55 < 1e-14);
  CHECK(std::abs(gamma_fn(5.5) - 52.34277778455352) < 1e-12);
}

TEST_CASE("gamma against the Lanczos oracle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-15.0, 20.0), im(-8.0, 8.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Complex z(re(rng), im(rng));
    if (distance_to_nonpositive_integer(z) < 1e-3) continue;
    const Complex want = oracle::lanczos_gamma(z);
    worst = std::max(worst, std::abs(gamma_fn(z) - want) / std::abs(want));
  }
  // The oracle itself is good to a few 1e-15 relative away from poles.
  CHECK(worst < 1e-12);
}

TEST_CASE("reciprocal gamma") {
  CHECK(std::abs(rgamma(-2.0)) < 1e-15);
  CHECK(std::abs(rgamma(0.0)) < 1e-15);
  CHECK(std::abs(rgamma(Complex(0.3, 0.2)) * gamma_fn(Complex(0.3, 0.2)) - 1.0) < 1e-14);
}

TEST_CASE("gamma errors") {
  CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
  CHECK_THROWS_AS(gamma_fn(Complex(-3.0 + 1e-10, 0)), PoleError);
  CHECK_THROWS_AS(gamma_fn(60.0), DomainError);
}
