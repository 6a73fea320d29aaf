#pragma once

// Independent reference implementations used only by the tests.

#include <array>
#include <cmath>
#include <complex>

#include "f4/params.hpp"
#include "f4/series.hpp"

namespace oracle {

using f4::Complex;

/// Lanczos approximation (g = 7, 9 terms) with reflection.
inline Complex lanczos_gamma(Complex z) {
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const double pi = 3.14159265358979323846;
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * lanczos_gamma(1.0 - z));
  z -= 1.0;
  Complex x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (z + double(i));
  const Complex t = z + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

/// Row-major double sum over n1, n2 <= nmax, terms built along rows.
inline Complex f4_row_major(const f4::HypergeometricParams& p, const f4::Point2& x, int nmax) {
  using L = std::complex<long double>;
  const L a(p.a), b(p.b), c1(p.c1), c2(p.c2), x1(x.x1), x2(x.x2);
  L total = 0;
  L head = 1;  // term (n1, 0)
  for (int n1 = 0; n1 <= nmax; ++n1) {
    if (n1 > 0) {
      const long double k = n1 - 1;
      head *= (a + k) * (b + k) / ((c1 + k) * static_cast<long double>(n1)) * x1;
    }
    L t = head;
    L row = 0;
    for (int n2 = 0; n2 <= nmax; ++n2) {
      if (n2 > 0) {
        const long double n = n1 + n2 - 1;
        t *= (a + n) * (b + n) / ((c2 + static_cast<long double>(n2 - 1)) *
                                  static_cast<long double>(n2)) * x2;
      }
      row += t;
    }
    total += row;
  }
  return Complex(total);
}

}  // namespace oracle
