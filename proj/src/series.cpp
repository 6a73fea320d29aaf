#include "f4/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>

#include "f4/errors.hpp"

namespace f4 {

namespace {

enum class Level { Value, Jet, Full };

// Sums of the six derivative components over one anti-diagonal, plus the
// sum of term magnitudes per component.
struct DiagonalSums {
  Complex f, d1, d2, d11, d12, d22;
  double mf = 0, m1 = 0, m2 = 0, m11 = 0, m12 = 0, m22 = 0;
};

// Walks the anti-diagonals n1 + n2 = N of the F4 double series. Each term is
// obtained from its neighbour on the previous diagonal by a Pochhammer ratio,
// so no factorials or powers are ever formed explicitly.
class DiagonalWalker {
 public:
  DiagonalWalker(const HypergeometricParams& p, const Point2& x, Level level)
      : p_(p), x_(x), level_(level) {}

  int order() const { return n_; }

  DiagonalSums advance() {
    ++n_;
    const int n = n_;
    prev2_.swap(prev_);
    prev_.swap(cur_);
    cur_.assign(static_cast<std::size_t>(n) + 1, Complex{});
    DiagonalSums s;
    if (n == 0) {
      cur_[0] = 1.0;
      s.f = 1.0;
      s.mf = 1.0;
      return s;
    }
    const Complex k = (p_.a + double(n - 1)) * (p_.b + double(n - 1));
    cur_[0] = prev_[0] * k * x_.x2 / ((p_.c2 + double(n - 1)) * double(n));
    for (int n1 = 1; n1 <= n; ++n1)
      cur_[n1] = prev_[n1 - 1] * k * x_.x1 / ((p_.c1 + double(n1 - 1)) * double(n1));
    for (int n1 = 0; n1 <= n; ++n1) {
      s.f += cur_[n1];
      s.mf += std::abs(cur_[n1]);
    }
    if (level_ == Level::Value) return s;

    for (int n1 = 0; n1 <= n; ++n1) {
      const int n2 = n - n1;
      if (n1 >= 1) {
        const Complex t = prev_[n1 - 1] * k / (p_.c1 + double(n1 - 1));
        s.d1 += t;
        s.m1 += std::abs(t);
      }
      if (n2 >= 1) {
        const Complex t = prev_[n1] * k / (p_.c2 + double(n2 - 1));
        s.d2 += t;
        s.m2 += std::abs(t);
      }
    }
    if (n >= 2) {
      const Complex kk = k * (p_.a + double(n - 2)) * (p_.b + double(n - 2));
      for (int n1 = 0; n1 <= n; ++n1) {
        const int n2 = n - n1;
        if (n1 >= 1 && n2 >= 1) {
          const Complex t =
              prev2_[n1 - 1] * kk / ((p_.c1 + double(n1 - 1)) * (p_.c2 + double(n2 - 1)));
          s.d12 += t;
          s.m12 += std::abs(t);
        }
        if (level_ != Level::Full) continue;
        if (n1 >= 2) {
          const Complex t =
              prev2_[n1 - 2] * kk / ((p_.c1 + double(n1 - 2)) * (p_.c1 + double(n1 - 1)));
          s.d11 += t;
          s.m11 += std::abs(t);
        }
        if (n2 >= 2) {
          const Complex t =
              prev2_[n1] * kk / ((p_.c2 + double(n2 - 2)) * (p_.c2 + double(n2 - 1)));
          s.d22 += t;
          s.m22 += std::abs(t);
        }
      }
    }
    return s;
  }

 private:
  HypergeometricParams p_;
  Point2 x_;
  Level level_;
  int n_ = -1;
  std::vector<Complex> cur_, prev_, prev2_;
};

// Geometric extrapolation of the remaining tail from the last diagonal.
class TailEstimator {
 public:
  explicit TailEstimator(double ratio) : ratio_(ratio) {}

  double update(double diagonal_magnitude) {
    const double scale = std::max(diagonal_magnitude, last_ * ratio_);
    last_ = diagonal_magnitude;
    if (ratio_ == 0.0) return 0.0;
    return kTailSafety * scale * ratio_ / (1.0 - ratio_);
  }

 private:
  double ratio_;
  double last_ = 0.0;
};

void validate(const HypergeometricParams& p, const Point2& x, const SeriesOptions& opts) {
  if (distance_to_nonpositive_integer(p.c1) < kGenericityTol ||
      distance_to_nonpositive_integer(p.c2) < kGenericityTol)
    throw ParameterError("F4: c1 or c2 lies in -N");
  const bool finite = std::isfinite(std::abs(x.x1)) && std::isfinite(std::abs(x.x2));
  if (!finite || convergence_radius_sum(x) > 1.0 - opts.margin)
    throw DomainError("F4: point outside the margin-shrunk convergence set");
}

int cap(const SeriesOptions& opts) {
  return opts.max_order > 0 ? opts.max_order : series_order_cap();
}

double tail_ratio(const Point2& x) {
  const double r = convergence_radius_sum(x);
  return r * r;
}

}  // namespace

int series_order_cap() {
  static const int value = [] {
    if (const char* env = std::getenv("F4_MAX_ORDER")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
    }
    return kDefaultMaxOrder;
  }();
  return value;
}

Complex pochhammer(Complex z, unsigned n) {
  Complex r = 1.0;
  for (unsigned k = 0; k < n; ++k) r *= z + double(k);
  return r;
}

double convergence_radius_sum(const Point2& x) {
  return std::sqrt(std::abs(x.x1)) + std::sqrt(std::abs(x.x2));
}

bool in_convergence_domain(const Point2& x) { return convergence_radius_sum(x) < 1.0; }

Complex r_poly(const Point2& x) {
  const Complex x1 = x.x1, x2 = x.x2;
  return x1 * x1 + x2 * x2 - 2.0 * x1 * x2 - 2.0 * x1 - 2.0 * x2 + 1.0;
}

SeriesValue f4(const HypergeometricParams& p, const Point2& x, double target_tol,
               const SeriesOptions& opts) {
  validate(p, x, opts);
  DiagonalWalker walk(p, x, Level::Value);
  TailEstimator tail(tail_ratio(x));
  const int max_order = cap(opts);
  SeriesValue out;
  for (;;) {
    const DiagonalSums s = walk.advance();
    out.value += s.f;
    out.order = walk.order();
    out.tail_bound = tail.update(s.mf);
    if (out.tail_bound <= target_tol) return out;
    if (out.order >= max_order)
      throw ConvergenceError("F4: order cap " + std::to_string(max_order) +
                             " reached before the tail bound met the target");
  }
}

SeriesValue f4_truncated(const HypergeometricParams& p, const Point2& x, int order,
                         const SeriesOptions& opts) {
  validate(p, x, opts);
  DiagonalWalker walk(p, x, Level::Value);
  TailEstimator tail(tail_ratio(x));
  SeriesValue out;
  for (int n = 0; n <= order; ++n) {
    const DiagonalSums s = walk.advance();
    out.value += s.f;
    out.tail_bound = tail.update(s.mf);
  }
  out.order = std::max(order, 0);
  return out;
}

SeriesJet f4_jet(const HypergeometricParams& p, const Point2& x, double target_tol,
                 const SeriesOptions& opts) {
  validate(p, x, opts);
  DiagonalWalker walk(p, x, Level::Jet);
  const double ratio = tail_ratio(x);
  TailEstimator tf(ratio), t1(ratio), t2(ratio), t12(ratio);
  const int max_order = cap(opts);
  SeriesJet out;
  for (;;) {
    const DiagonalSums s = walk.advance();
    out.f += s.f;
    out.d1 += s.d1;
    out.d2 += s.d2;
    out.d12 += s.d12;
    out.order = walk.order();
    out.tail_bound = std::max({tf.update(s.mf), t1.update(s.m1), t2.update(s.m2),
                               t12.update(s.m12)});
    // d12 first appears on diagonal 2.
    if (out.order >= 2 && out.tail_bound <= target_tol) return out;
    if (out.order >= max_order)
      throw ConvergenceError("F4 jet: order cap " + std::to_string(max_order) +
                             " reached before the tail bound met the target");
  }
}

SeriesDerivatives f4_derivatives(const HypergeometricParams& p, const Point2& x, int order,
                                 const SeriesOptions& opts) {
  validate(p, x, opts);
  DiagonalWalker walk(p, x, Level::Full);
  SeriesDerivatives out;
  for (int n = 0; n <= order; ++n) {
    const DiagonalSums s = walk.advance();
    out.f += s.f;
    out.d1 += s.d1;
    out.d2 += s.d2;
    out.d11 += s.d11;
    out.d12 += s.d12;
    out.d22 += s.d22;
  }
  out.order = std::max(order, 0);
  return out;
}

std::pair<Complex, Complex> pde_residual(const HypergeometricParams& p, const Point2& x,
                                         int order) {
  const SeriesDerivatives d = f4_derivatives(p, x, order);
  const Complex x1 = x.x1, x2 = x.x2;
  const Complex s = p.a + p.b + 1.0;
  const Complex ab = p.a * p.b;
  const Complex r1 = x1 * (1.0 - x1) * d.d11 - x2 * x2 * d.d22 - 2.0 * x1 * x2 * d.d12 +
                     (p.c1 - s * x1) * d.d1 - s * x2 * d.d2 - ab * d.f;
  const Complex r2 = x2 * (1.0 - x2) * d.d22 - x1 * x1 * d.d11 - 2.0 * x1 * x2 * d.d12 +
                     (p.c2 - s * x2) * d.d2 - s * x1 * d.d1 - ab * d.f;
  return {r1, r2};
}

std::vector<SeriesValue> f4_batch(const HypergeometricParams& p, std::span<const Point2> points,
                                  double target_tol, const SeriesOptions& opts) {
  std::vector<SeriesValue> out(points.size());
  std::exception_ptr failure;
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = f4(p, points[i], target_tol, opts);
    } catch (...) {
#pragma omp critical(f4_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<SeriesValue> f4_batch_serial(const HypergeometricParams& p,
                                         std::span<const Point2> points, double target_tol,
                                         const SeriesOptions& opts) {
  std::vector<SeriesValue> out;
  out.reserve(points.size());
  for (const Point2& x : points) out.push_back(f4(p, x, target_tol, opts));
  return out;
}

}  // namespace f4
