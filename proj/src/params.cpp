#include "f4/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "f4/errors.hpp"

namespace f4 {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

HypergeometricParams HypergeometricParams::make(Complex a, Complex b, Complex c1, Complex c2) {
  HypergeometricParams p{a, b, c1, c2};
  if (!p.finite()) throw ParameterError("hypergeometric parameters must be finite");
  return p;
}

bool HypergeometricParams::finite() const {
  return f4::finite(a) && f4::finite(b) && f4::finite(c1) && f4::finite(c2);
}

ExponentSet derive_exponents(const HypergeometricParams& p) {
  ExponentSet e;
  e.l1 = p.b - p.c1 + 1.0;
  e.l2 = p.b - p.c2 + 1.0;
  e.l3 = p.c1 + p.c2 - p.a - 1.0;
  e.l4 = -p.b;
  e.l0 = -e.l1 - e.l2 - e.l3 - 2.0 * e.l4;
  e.l124 = e.l1 + e.l2 + e.l4;
  e.l134m = p.a - p.c2;
  e.l234m = p.a - p.c1;
  return e;
}

CircuitConstants circuit_constants(const HypergeometricParams& p) {
  const ExponentSet e = derive_exponents(p);
  CircuitConstants k;
  k.alpha = exp2pii(p.a);
  k.beta = exp2pii(p.b);
  k.gamma1 = exp2pii(p.c1);
  k.gamma2 = exp2pii(p.c2);
  k.mu1 = exp2pii(e.l1);
  k.mu2 = exp2pii(e.l2);
  k.mu3 = exp2pii(e.l3);
  k.mu4 = exp2pii(e.l4);
  k.mu0 = 1.0 / (k.mu1 * k.mu2 * k.mu3 * k.mu4 * k.mu4);
  return k;
}

ShiftedParams shifted_params(const HypergeometricParams& p) {
  return {p.a - p.c1 + 1.0, p.a - p.c2 + 1.0, p.a - p.c1 - p.c2 + 2.0,
          p.b - p.c1 + 1.0, p.b - p.c2 + 1.0, p.b - p.c1 - p.c2 + 2.0};
}

double distance_to_integer(Complex z) {
  return std::abs(z - std::round(z.real()));
}

double distance_to_nonpositive_integer(Complex z) {
  const double n = std::min(0.0, std::round(z.real()));
  return std::abs(z - n);
}

GenericityReport genericity_check(const HypergeometricParams& p, double tol) {
  const std::pair<const char*, Complex> quantities[] = {
      {"a", p.a},
      {"a-c1", p.a - p.c1},
      {"a-c2", p.a - p.c2},
      {"a-c1-c2", p.a - p.c1 - p.c2},
      {"b", p.b},
      {"b-c1", p.b - p.c1},
      {"b-c2", p.b - p.c2},
      {"b-c1-c2", p.b - p.c1 - p.c2},
      {"c1", p.c1},
      {"c2", p.c2},
  };
  GenericityReport report;
  report.min_distance = std::numeric_limits<double>::infinity();
  for (const auto& [name, value] : quantities) {
    const double d = distance_to_integer(value);
    report.min_distance = std::min(report.min_distance, d);
    if (d < tol) report.violated_conditions.push_back(std::string(name) + " ∈ ℤ");
  }
  const CircuitConstants k = circuit_constants(p);
  report.degenerate_flag = std::abs(k.alpha * k.beta + k.gamma1 * k.gamma2) < tol;
  return report;
}

HypergeometricParams conjugate_params(const HypergeometricParams& p) {
  return {-p.a, -p.b, -p.c1, -p.c2};
}

HypergeometricParams random_generic_params(std::mt19937_64& rng, double margin) {
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (;;) {
    const HypergeometricParams p{u(rng), u(rng), u(rng), u(rng)};
    if (genericity_check(p, margin).generic()) return p;
  }
}

}  // namespace f4
