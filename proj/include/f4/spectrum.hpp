#pragma once

#include <array>

#include "f4/types.hpp"

namespace f4 {

/// Eigenvalues of a 4x4 matrix as an unordered multiset.
using Spectrum = std::array<Complex, 4>;

/// Roots closer than this (relative to max(1, |root|)) are treated as one
/// multiple root; its value is then refit from the power sums.
inline constexpr double kClusterTol = 1e-2;

/// Monic characteristic polynomial, ascending coefficients (c[4] = 1), by
/// Faddeev-LeVerrier.
std::array<Complex, 5> characteristic_polynomial(const Mat4& m);

/// prod (lambda - r_i), ascending coefficients.
std::array<Complex, 5> polynomial_from_roots(const Spectrum& roots);

/// Roots of a monic quartic by simultaneous (Aberth) iteration.
Spectrum quartic_roots(const std::array<Complex, 5>& coeffs, double cluster_tol = kClusterTol);

Spectrum eigenvalues(const Mat4& m, double cluster_tol = kClusterTol);

/// min over pairings of the max distance between matched entries.
double spectrum_distance(const Spectrum& u, const Spectrum& v);

}  // namespace f4
