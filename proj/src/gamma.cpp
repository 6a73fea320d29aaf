#include "f4/gamma.hpp"

#include <array>
#include <cmath>
#include <string>

#include "f4/errors.hpp"
#include "f4/params.hpp"

namespace f4 {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,       1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,  1.0 / 156.0,          -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0};

constexpr double kShiftTarget = 12.0;

// log Gamma(w) for Re w >= kShiftTarget; branch irrelevant since only exp() is used.
Complex log_gamma_large(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series;
}

// Returns (exp(log Gamma(z+n)), prod_{k<n} (z+k)) with Re(z+n) >= target.
std::pair<Complex, Complex> shifted(Complex z) {
  Complex prod = 1.0;
  Complex w = z;
  while (w.real() < kShiftTarget) {
    prod *= w;
    w += 1.0;
  }
  return {std::exp(log_gamma_large(w)), prod};
}

void check_band(Complex z, const char* fn) {
  if (!(std::abs(z) <= kGammaBand))
    throw DomainError(std::string(fn) + ": argument outside |z| <= 50");
}

}  // namespace

Complex gamma_fn(Complex z) {
  check_band(z, "gamma_fn");
  if (distance_to_nonpositive_integer(z) < kGammaPoleTol)
    throw PoleError("gamma_fn: argument at a pole of Gamma");
  if (z.real() < 0.5) {
    // Reflection; 1 - z has real part > 1/2.
    const auto [g, prod] = shifted(1.0 - z);
    return kPi * prod / (std::sin(kPi * z) * g);
  }
  const auto [g, prod] = shifted(z);
  return g / prod;
}

Complex rgamma(Complex z) {
  check_band(z, "rgamma");
  if (z.real() < 0.5) {
    const auto [g, prod] = shifted(1.0 - z);
    return std::sin(kPi * z) * g / (kPi * prod);
  }
  const auto [g, prod] = shifted(z);
  return prod / g;
}

}  // namespace f4
