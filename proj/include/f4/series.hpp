#pragma once

#include <span>
#include <utility>
#include <vector>

#include "f4/params.hpp"
#include "f4/types.hpp"

namespace f4 {

struct Point2 {
  Complex x1;
  Complex x2;
};

/// F4 partial sum with its truncation order N (max total degree summed) and a
/// heuristic bound on the omitted tail.
struct SeriesValue {
  Complex value;
  int order = 0;
  double tail_bound = 0.0;
};

/// Value and derivatives d/dx1, d/dx2, d2/dx1dx2 of one truncated sum.
struct SeriesJet {
  Complex f, d1, d2, d12;
  int order = 0;
  double tail_bound = 0.0;
};

/// Fixed-order truncation with every derivative up to second order.
struct SeriesDerivatives {
  Complex f, d1, d2, d11, d12, d22;
  int order = 0;
};

/// Default distance kept from the boundary of the convergence set.
inline constexpr double kDefaultMargin = 0.05;
/// Default truncation-order cap; overridden by the F4_MAX_ORDER environment variable.
inline constexpr int kDefaultMaxOrder = 400;
/// Safety factor applied to the geometric tail extrapolation.
inline constexpr double kTailSafety = 10.0;

struct SeriesOptions {
  double margin = kDefaultMargin;
  int max_order = 0;  // 0 selects series_order_cap()
};

/// F4_MAX_ORDER when set to a positive integer, otherwise 400. Read once.
int series_order_cap();

/// (z)_n = z (z+1) ... (z+n-1); 1 for n = 0.
Complex pochhammer(Complex z, unsigned n);

/// sqrt|x1| + sqrt|x2| < 1 (boundary excluded).
bool in_convergence_domain(const Point2& x);
double convergence_radius_sum(const Point2& x);

/// R(x) = x1^2 + x2^2 - 2 x1 x2 - 2 x1 - 2 x2 + 1.
Complex r_poly(const Point2& x);

/// F4(a, b, c1, c2; x), summed over anti-diagonals of ascending total degree
/// until the tail bound drops to target_tol.
SeriesValue f4(const HypergeometricParams& p, const Point2& x, double target_tol,
               const SeriesOptions& opts = {});

/// Partial sum over n1 + n2 <= order. Same preconditions as f4.
SeriesValue f4_truncated(const HypergeometricParams& p, const Point2& x, int order,
                         const SeriesOptions& opts = {});

/// Term-wise derivatives of one truncated sum; order raised until all four
/// component tails are below target_tol.
SeriesJet f4_jet(const HypergeometricParams& p, const Point2& x, double target_tol,
                 const SeriesOptions& opts = {});

SeriesDerivatives f4_derivatives(const HypergeometricParams& p, const Point2& x, int order,
                                 const SeriesOptions& opts = {});

/// The two second-order F4 operators applied to the order-truncated series.
std::pair<Complex, Complex> pde_residual(const HypergeometricParams& p, const Point2& x,
                                         int order);

/// f4 at many points in parallel (OpenMP). Results are ordered as `points`.
std::vector<SeriesValue> f4_batch(const HypergeometricParams& p, std::span<const Point2> points,
                                  double target_tol, const SeriesOptions& opts = {});

/// Serial reference for f4_batch.
std::vector<SeriesValue> f4_batch_serial(const HypergeometricParams& p,
                                         std::span<const Point2> points, double target_tol,
                                         const SeriesOptions& opts = {});

}  // namespace f4
