#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "f4/errors.hpp"
#include "f4/params.hpp"

using namespace f4;

TEST_CASE("exponents at the trivial point") {
  const ExponentSet e = derive_exponents({0.0, 0.0, 1.0, 1.0});
  CHECK(std::abs(e.l1) == 0.0);
  CHECK(std::abs(e.l2) == 0.0);
  CHECK(std::abs(e.l3 - 1.0) == 0.0);
  CHECK(std::abs(e.l4) == 0.0);
  CHECK(std::abs(e.l0 + 1.0) == 0.0);
}

TEST_CASE("l0 agrees with a - 1") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const HypergeometricParams p = random_generic_params(rng);
    CHECK(std::abs(derive_exponents(p).l0 - (p.a - 1.0)) < 1e-15);
  }
}

TEST_CASE("l3 by hand") {
  const ExponentSet e = derive_exponents({0.3, 0.41, 0.53, 0.67});
  CHECK(std::abs(e.l3 - (-0.10)) < 1e-15);
  CHECK(std::abs(e.l124 - (e.l1 + e.l2 + e.l4)) < 1e-15);
  CHECK(std::abs(e.l134m - (0.3 - 0.67)) < 1e-15);
  CHECK(std::abs(e.l234m - (0.3 - 0.53)) < 1e-15);
}

TEST_CASE("c1 <-> c2 relabeling") {
  const HypergeometricParams p{0.3, 0.41, 0.53, 0.67};
  const ExponentSet e = derive_exponents(p), s = derive_exponents(p.swapped_c());
  CHECK(std::abs(e.l1 - s.l2) < 1e-15);
  CHECK(std::abs(e.l2 - s.l1) < 1e-15);
  CHECK(std::abs(e.l134m - s.l234m) < 1e-15);
  CHECK(std::abs(e.l3 - s.l3) < 1e-15);
  CHECK(std::abs(e.l4 - s.l4) < 1e-15);
}

TEST_CASE("circuit constants") {
  CHECK(std::abs(circuit_constants({1.0, 0.2, 0.3, 0.4}).alpha - 1.0) < 1e-14);
  CHECK(std::abs(circuit_constants({0.25, 0.2, 0.3, 0.4}).alpha - Complex(0.0, 1.0)) < 1e-15);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const HypergeometricParams p = random_generic_params(rng);
    const CircuitConstants k = circuit_constants(p);
    CHECK(std::abs(k.mu0 - k.alpha) < 1e-12);
    for (Complex z : {k.alpha, k.beta, k.gamma1, k.gamma2, k.mu0, k.mu1, k.mu2, k.mu3, k.mu4})
      CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
    const CircuitConstants v = circuit_constants(conjugate_params(p));
    CHECK(std::abs(v.alpha * k.alpha - 1.0) < 1e-12);
    CHECK(std::abs(v.gamma1 * k.gamma1 - 1.0) < 1e-12);
    CHECK(std::abs(v.mu3 * k.mu3 - 1.0) < 1e-12);
    CHECK(std::abs(v.mu4 * k.mu4 - 1.0) < 1e-12);
  }
}

TEST_CASE("conjugation inverts mu1") {
  // mu1 = exp(2 pi i (b - c1 + 1)) = i for b - c1 = 1/4.
  const HypergeometricParams p{0.3, 0.5, 0.25, 0.6};
  CHECK(std::abs(circuit_constants(p).mu1 - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(circuit_constants(conjugate_params(p)).mu1 - Complex(0, -1)) < 1e-15);
  CHECK(std::abs(conjugate_params({0.3, 0.1, 0.2, 0.4}).a + 0.3) == 0.0);
}

TEST_CASE("genericity report") {
  const GenericityReport ok = genericity_check({0.3, 0.41, 0.53, 0.67}, 1e-6);
  CHECK(ok.violated_conditions.empty());
  CHECK(ok.min_distance > 1e-6);
  CHECK_FALSE(ok.degenerate_flag);

  const GenericityReport c1 = genericity_check({0.3, 0.41, 1.0, 0.67}, 1e-6);
  CHECK(std::find(c1.violated_conditions.begin(), c1.violated_conditions.end(), "c1 ∈ ℤ") !=
        c1.violated_conditions.end());

  const Complex a = 0.3, cc1 = 0.53, cc2 = 0.67;
  const GenericityReport d = genericity_check({a, cc1 + cc2 - a + 0.5, cc1, cc2}, 1e-6);
  CHECK(d.degenerate_flag);
  CHECK_FALSE(d.generic());
}

TEST_CASE("non-finite parameters are rejected") {
  CHECK_THROWS_AS(HypergeometricParams::make(std::numeric_limits<double>::quiet_NaN(), 0, 1, 1),
                  ParameterError);
  CHECK(HypergeometricParams::make(0.1, 0.2, 0.3, 0.4).finite());
}

TEST_CASE("shifted parameters") {
  const ShiftedParams s = shifted_params({0.31, 0.47, 0.62, 0.79});
  CHECK(std::abs(s.a12 - (0.31 - 0.62 - 0.79 + 2.0)) < 1e-15);
  CHECK(std::abs(s.b1 - (0.47 - 0.62 + 1.0)) < 1e-15);
  CHECK(std::abs(s.b2 - (0.47 - 0.79 + 1.0)) < 1e-15);
}
