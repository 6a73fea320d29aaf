#pragma once

#include <random>
#include <string>
#include <vector>

#include "f4/types.hpp"

namespace f4 {

/// Default distance-to-integer tolerance for the genericity conditions.
inline constexpr double kGenericityTol = 1e-6;

/// The four complex parameters of the F4 system. Every other module reads
/// parameter-derived quantities through this header.
struct HypergeometricParams {
  Complex a;
  Complex b;
  Complex c1;
  Complex c2;

  /// Throws ParameterError on non-finite components.
  static HypergeometricParams make(Complex a, Complex b, Complex c1, Complex c2);

  bool finite() const;
  /// c1 <-> c2 relabeling.
  HypergeometricParams swapped_c() const { return {a, b, c2, c1}; }
  /// a <-> b exchange (F4 is symmetric in a, b).
  HypergeometricParams swapped_ab() const { return {b, a, c1, c2}; }
};

/// Local exponents. l0 is derived from l1..l4; the identity l0 = a - 1 is
/// checked in tests, not assumed here.
struct ExponentSet {
  Complex l1, l2, l3, l4;
  Complex l0;
  Complex l124;
  Complex l134m;
  Complex l234m;
};

/// Unit-circle constants exp(2 pi i *). mu0 is formed from mu1..mu4.
struct CircuitConstants {
  Complex alpha, beta, gamma1, gamma2;
  Complex mu0, mu1, mu2, mu3, mu4;
};

struct ShiftedParams {
  Complex a1, a2, a12;
  Complex b1, b2, b12;
};

struct GenericityReport {
  std::vector<std::string> violated_conditions;
  double min_distance = 0.0;
  bool degenerate_flag = false;

  bool generic() const { return violated_conditions.empty() && !degenerate_flag; }
};

ExponentSet derive_exponents(const HypergeometricParams& p);
CircuitConstants circuit_constants(const HypergeometricParams& p);
ShiftedParams shifted_params(const HypergeometricParams& p);

/// Distance from z to the nearest integer (complex distance).
double distance_to_integer(Complex z);
/// Distance from z to the nearest element of {0, -1, -2, ...}.
double distance_to_nonpositive_integer(Complex z);

GenericityReport genericity_check(const HypergeometricParams& p, double tol = kGenericityTol);

/// Parameters whose circuit constants are the reciprocals of those of p.
/// Evaluating a closed form in (alpha, beta, gamma_k) at these parameters
/// realizes the z(mu) -> z(1/mu) involution.
HypergeometricParams conjugate_params(const HypergeometricParams& p);

/// Real parameters drawn uniformly from (0.05, 0.95)^4 and rejected until every
/// listed quantity is at least `margin` from Z and |alpha beta + gamma1 gamma2|
/// is at least `margin`.
HypergeometricParams random_generic_params(std::mt19937_64& rng, double margin = 0.04);

}  // namespace f4
