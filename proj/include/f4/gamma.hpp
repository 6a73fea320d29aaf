#pragma once

#include "f4/types.hpp"

namespace f4 {

/// |z| beyond which gamma_fn and rgamma refuse to evaluate.
inline constexpr double kGammaBand = 50.0;
/// Distance to a nonpositive integer treated as a pole.
inline constexpr double kGammaPoleTol = 1e-8;

/// Complex Gamma function. Relative accuracy about 1e-13 on |z| <= 50.
/// Throws PoleError near 0, -1, -2, ... and DomainError outside the band.
Complex gamma_fn(Complex z);

/// 1/Gamma(z); entire, vanishing (to rounding) at the poles of Gamma.
/// Throws DomainError outside the band.
Complex rgamma(Complex z);

}  // namespace f4
