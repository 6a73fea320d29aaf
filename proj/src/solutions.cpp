#include "f4/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "f4/errors.hpp"
#include "f4/gamma.hpp"
#include "f4/intersection.hpp"

namespace f4 {

namespace {

using LComplex = std::complex<long double>;

// Circle used to average out the removable singularity at integer c_k.
constexpr double kCircleRadius = 0.01;
constexpr int kCirclePoints = 16;

// Parameters and monomial exponents of one series piece.
struct Piece {
  HypergeometricParams q;
  Complex e1, e2;
};

std::array<Piece, 4> local_pieces(const HypergeometricParams& p) {
  const Complex a = p.a, b = p.b, c1 = p.c1, c2 = p.c2;
  return {Piece{{a, b, c1, c2}, 0.0, 0.0},
          Piece{{a + 1.0 - c1, b + 1.0 - c1, 2.0 - c1, c2}, 1.0 - c1, 0.0},
          Piece{{a + 1.0 - c2, b + 1.0 - c2, c1, 2.0 - c2}, 0.0, 1.0 - c2},
          Piece{{a + 2.0 - c1 - c2, b + 2.0 - c1 - c2, 2.0 - c1, 2.0 - c2}, 1.0 - c1, 1.0 - c2}};
}

std::array<Piece, 4> dual_pieces(const HypergeometricParams& p) {
  const Complex a = p.a, b = p.b, c1 = p.c1, c2 = p.c2;
  return {Piece{{2.0 - a, -b, 2.0 - c1, 2.0 - c2}, 0.0, 0.0},
          Piece{{c1 - a + 1.0, c1 - b - 1.0, c1, 2.0 - c2}, c1 - 1.0, 0.0},
          Piece{{c2 - a + 1.0, c2 - b - 1.0, 2.0 - c1, c2}, 0.0, c2 - 1.0},
          Piece{{c1 + c2 - a, c1 + c2 - b - 2.0, c1, c2}, c1 - 1.0, c2 - 1.0}};
}

SeriesJet scaled(SeriesJet j, Complex s) {
  j.f *= s;
  j.d1 *= s;
  j.d2 *= s;
  j.d12 *= s;
  j.tail_bound *= std::abs(s);
  return j;
}

SeriesJet combine(const SeriesJet& u, Complex su, const SeriesJet& v, Complex sv) {
  SeriesJet r;
  r.f = su * u.f + sv * v.f;
  r.d1 = su * u.d1 + sv * v.d1;
  r.d2 = su * u.d2 + sv * v.d2;
  r.d12 = su * u.d12 + sv * v.d12;
  r.order = std::max(u.order, v.order);
  r.tail_bound = std::abs(su) * u.tail_bound + std::abs(sv) * v.tail_bound;
  return r;
}

SeriesJet piece_jet(const Piece& pc, const Point2& x, double tol, bool jets) {
  SeriesJet s;
  if (jets) {
    s = f4_jet(pc.q, x, tol);
  } else {
    const SeriesValue v = f4(pc.q, x, tol);
    s.f = v.value;
    s.order = v.order;
    s.tail_bound = v.tail_bound;
  }
  return monomial_times(s, x, pc.e1, pc.e2);
}

std::array<SeriesJet, 4> pieces_jets(const std::array<Piece, 4>& pieces,
                                     const std::array<Complex, 4>& consts, const Point2& x,
                                     double tol, bool jets) {
  std::array<SeriesJet, 4> out;
  for (int i = 0; i < 4; ++i) {
    const double t = tol / std::max(1.0, std::abs(consts[i]));
    out[i] = scaled(piece_jet(pieces[i], x, t, jets), consts[i]);
  }
  return out;
}

SolutionVector to_vector(const std::array<SeriesJet, 4>& j, BasisTag tag, const Point2& x) {
  return {{j[0].f, j[1].f, j[2].f, j[3].f}, tag, x};
}

Complex phase(Complex z) { return std::exp(kPi * kI * z); }

bool near_integer_gamma(Complex c) { return std::abs(exp2pii(c) - 1.0) < kIntegerSwitch; }

// Mean of fn over a circle around c_k; exact at the centre for functions
// holomorphic in c_k on the disc, including removable singularities.
template <class Fn>
SeriesJet circle_average(const HypergeometricParams& p, int k, Fn&& fn) {
  SeriesJet acc;
  for (int j = 0; j < kCirclePoints; ++j) {
    HypergeometricParams q = p;
    const Complex shift = kCircleRadius * exp2pii((j + 0.5) / kCirclePoints);
    (k == 1 ? q.c1 : q.c2) += shift;
    const SeriesJet s = fn(q);
    acc.f += s.f;
    acc.d1 += s.d1;
    acc.d2 += s.d2;
    acc.d12 += s.d12;
    acc.order = std::max(acc.order, s.order);
    acc.tail_bound = std::max(acc.tail_bound, s.tail_bound);
  }
  return scaled(acc, 1.0 / kCirclePoints);
}

// Averages over each c_k whose gamma_k is near 1, innermost first.
template <class Fn>
SeriesJet regularized(const HypergeometricParams& p, bool over_c1, bool over_c2, Fn&& fn) {
  if (over_c1 && near_integer_gamma(p.c1)) {
    return circle_average(p, 1, [&](const HypergeometricParams& q) {
      return regularized(q, false, over_c2, fn);
    });
  }
  if (over_c2 && near_integer_gamma(p.c2)) {
    return circle_average(p, 2, [&](const HypergeometricParams& q) {
      return regularized(q, false, false, fn);
    });
  }
  return fn(p);
}

SeriesJet ratio_sum(Complex alpha, Complex beta, Complex g1, Complex g2, const Point2& x,
                    double tol, bool jets) {
  return gamma_ratio_series(alpha, beta, g1, g2, x, tol, jets);
}

// f^1 = G4 * S(a, b, c1, c2).
SeriesJet hat1(const HypergeometricParams& p, const Point2& x, double tol, bool jets) {
  const Complex g4 = g4_constant(p);
  const double t = tol / std::max(1.0, std::abs(g4));
  return scaled(ratio_sum(p.a, p.b, p.c1, p.c2, x, t, jets), g4);
}

// f2 written as G4 * x1^(1-c1) * S(a+1-c1, b+1-c1, 2-c1, c2); finite at integer c1.
SeriesJet f2_form(const HypergeometricParams& p, const Point2& x, double tol, bool jets) {
  const Complex g4 = g4_constant(p);
  const double t = tol / std::max(1.0, std::abs(g4));
  const SeriesJet s =
      ratio_sum(p.a + 1.0 - p.c1, p.b + 1.0 - p.c1, 2.0 - p.c1, p.c2, x, t, jets);
  return scaled(monomial_times(s, x, 1.0 - p.c1, 0.0), g4);
}

SeriesJet f3_form(const HypergeometricParams& p, const Point2& x, double tol, bool jets) {
  const Complex g4 = g4_constant(p);
  const double t = tol / std::max(1.0, std::abs(g4));
  const SeriesJet s =
      ratio_sum(p.a + 1.0 - p.c2, p.b + 1.0 - p.c2, p.c1, 2.0 - p.c2, x, t, jets);
  return scaled(monomial_times(s, x, 0.0, 1.0 - p.c2), g4);
}

// gamma/(1-gamma) (f_k - f^1), k = 2, 3.
SeriesJet hat_difference(const HypergeometricParams& p, int k, const Point2& x, double tol,
                         bool jets) {
  const Complex g = exp2pii(k == 2 ? p.c1 : p.c2);
  const SeriesJet fk = k == 2 ? f2_form(p, x, tol, jets) : f3_form(p, x, tol, jets);
  const SeriesJet h1 = hat1(p, x, tol, jets);
  const Complex s = g / (1.0 - g);
  return combine(fk, s, h1, -s);
}

SeriesJet f5_entry(const HypergeometricParams& p, const Point2& x, double tol, bool jets) {
  const RowVec4 e5 = e5_vectors(p).e5;
  const auto f = pieces_jets(local_pieces(p), cycle_constants(p), x, tol, jets);
  SeriesJet r = scaled(f[0], e5(0));
  for (int i = 1; i < 4; ++i) r = combine(r, 1.0, f[i], e5(i));
  return r;
}

std::array<SeriesJet, 4> hat_jets(const HypergeometricParams& p, const Point2& x, double tol,
                                  bool jets) {
  std::array<SeriesJet, 4> out;
  out[0] = hat1(p, x, tol, jets);
  out[1] = regularized(p, true, false, [&](const HypergeometricParams& q) {
    return hat_difference(q, 2, x, tol, jets);
  });
  out[2] = regularized(p, false, true, [&](const HypergeometricParams& q) {
    return hat_difference(q, 3, x, tol, jets);
  });
  out[3] = regularized(p, true, true, [&](const HypergeometricParams& q) {
    return f5_entry(q, x, tol, jets);
  });
  return out;
}

// rgamma(g + n) / n! for n = 0..count-1, extended precision.
std::vector<LComplex> reciprocal_weights(Complex g, int count) {
  std::vector<LComplex> w(static_cast<std::size_t>(count));
  LComplex prev;
  for (int n = 0; n < count; ++n) {
    const Complex z = g + double(n);
    if (n == 0 || z.real() < 2.0) {
      LComplex v(rgamma(z));
      long double fact = 1.0L;
      for (int k = 2; k <= n; ++k) fact *= k;
      w[n] = v / fact;
    } else {
      const LComplex zp(z.real() - 1.0, z.imag());
      w[n] = prev / (zp * static_cast<long double>(n));
    }
    prev = w[n];
  }
  return w;
}

}  // namespace

Complex principal_pow(Complex x, Complex e) {
  if (e == Complex(0.0)) return 1.0;
  if (x.imag() == 0.0 && x.real() <= 0.0)
    throw BranchError("principal power: argument on the cut (-inf, 0]");
  return std::exp(e * std::log(x));
}

Complex g4_constant(const HypergeometricParams& p) {
  return gamma_fn(1.0 - p.b) * gamma_fn(p.c1 + p.c2 - p.a - 1.0) *
         phase(p.a + p.b - p.c1 - p.c2);
}

std::array<Complex, 4> cycle_constants(const HypergeometricParams& p) {
  const Complex a = p.a, b = p.b, c1 = p.c1, c2 = p.c2;
  const Complex g3 = gamma_fn(c1 + c2 - a - 1.0);
  const Complex ph = phase(-(c1 + c2 - a - b));
  return {gamma_fn(1.0 - c1) * gamma_fn(1.0 - c2) * g3 * rgamma(1.0 - a),
          gamma_fn(a + 1.0 - c1) * gamma_fn(b + 1.0 - c1) * gamma_fn(1.0 - b) * g3 *
              rgamma(2.0 - c1) * rgamma(c2) * ph,
          gamma_fn(a + 1.0 - c2) * gamma_fn(b + 1.0 - c2) * gamma_fn(1.0 - b) * g3 *
              rgamma(c1) * rgamma(2.0 - c2) * ph,
          gamma_fn(c1 - 1.0) * gamma_fn(c2 - 1.0) * gamma_fn(1.0 - b) *
              rgamma(c1 + c2 - b - 1.0)};
}

std::array<Complex, 4> dual_cycle_constants(const HypergeometricParams& p) {
  const Complex a = p.a, b = p.b, c1 = p.c1, c2 = p.c2;
  const Complex g3 = gamma_fn(1.0 - c1 - c2 + a);
  const Complex ph = phase(-(a + b - c1 - c2));
  return {gamma_fn(c1 - 1.0) * gamma_fn(c2 - 1.0) * g3 * rgamma(a - 1.0),
          gamma_fn(c1 - b - 1.0) * gamma_fn(c1 - a + 1.0) * gamma_fn(1.0 + b) * g3 *
              rgamma(c1) * rgamma(2.0 - c2) * ph,
          gamma_fn(c2 - a + 1.0) * gamma_fn(c2 - b - 1.0) * gamma_fn(1.0 + b) * g3 *
              rgamma(2.0 - c1) * rgamma(c2) * ph,
          gamma_fn(1.0 - c1) * gamma_fn(1.0 - c2) * gamma_fn(1.0 + b) *
              rgamma(3.0 - c1 - c2 + b)};
}

PrefactorSet prefactors(const HypergeometricParams& p) {
  const Complex a = p.a, b = p.b, c1 = p.c1, c2 = p.c2;
  PrefactorSet s;
  s.g1 = gamma_fn(1.0 - a) * rgamma(1.0 - c1) * rgamma(1.0 - c2) * rgamma(c1 + c2 - a - 1.0);
  const Complex two_pi_i = 2.0 * kPi * kI;
  s.g2 = gamma_fn(c1) * gamma_fn(c2) * gamma_fn(a - c1 - c2 + 2.0) * rgamma(a) /
         (two_pi_i * two_pi_i);
  s.g3 = gamma_fn(c1) * gamma_fn(c2) * rgamma(a) * rgamma(b) * rgamma(c1 - a) * rgamma(c2 - b);
  s.g4 = g4_constant(p);
  s.d = cycle_constants(p);
  s.dual_d = dual_cycle_constants(p);
  return s;
}

const char* to_string(BasisTag tag) {
  switch (tag) {
    case BasisTag::LocalPlain: return "LocalPlain";
    case BasisTag::FCycle: return "FCycle";
    case BasisTag::FDual: return "FDual";
    case BasisTag::FHat: return "FHat";
  }
  return "?";
}

Mat4 SolutionJets::as_columns() const {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m.col(i) << jets[i].f, jets[i].d1, jets[i].d2, jets[i].d12;
  return m;
}

SolutionVector SolutionJets::values() const {
  return {{jets[0].f, jets[1].f, jets[2].f, jets[3].f}, basis, at};
}

SeriesJet monomial_times(const SeriesJet& s, const Point2& x, Complex e1, Complex e2) {
  const Complex m = principal_pow(x.x1, e1) * principal_pow(x.x2, e2);
  const Complex u1 = e1 == Complex(0.0) ? Complex(0.0) : e1 / x.x1;
  const Complex u2 = e2 == Complex(0.0) ? Complex(0.0) : e2 / x.x2;
  SeriesJet r = s;
  r.f = m * s.f;
  r.d1 = m * (s.d1 + u1 * s.f);
  r.d2 = m * (s.d2 + u2 * s.f);
  r.d12 = m * (s.d12 + u1 * s.d2 + u2 * s.d1 + u1 * u2 * s.f);
  r.tail_bound = s.tail_bound * std::abs(m);
  return r;
}

SeriesJet gamma_ratio_series(Complex alpha, Complex beta, Complex g1, Complex g2,
                             const Point2& x, double target_tol, bool with_derivatives) {
  if (convergence_radius_sum(x) > 1.0 - kDefaultMargin)
    throw DomainError("Gamma-ratio series: point outside the margin-shrunk convergence set");
  const int max_order = series_order_cap();
  const int count = max_order + 2;
  const std::vector<LComplex> w1 = reciprocal_weights(g1, count);
  const std::vector<LComplex> w2 = reciprocal_weights(g2, count);
  std::vector<LComplex> p1(count), p2(count);
  p1[0] = p2[0] = 1.0L;
  for (int n = 1; n < count; ++n) {
    p1[n] = p1[n - 1] * LComplex(x.x1);
    p2[n] = p2[n - 1] * LComplex(x.x2);
  }
  // Leading terms are zero while g + n is a nonpositive integer.
  const int zeros = std::max(0, int(std::ceil(-g1.real()))) + std::max(0, int(std::ceil(-g2.real())));
  const double ratio = std::pow(convergence_radius_sum(x), 2);

  const LComplex la(alpha), lb(beta);
  LComplex lead = LComplex(gamma_fn(alpha)) * LComplex(gamma_fn(beta));
  LComplex f, d1, d2, d12;
  double prev_mag = 0.0;
  SeriesJet out;
  for (int n = 0; n <= max_order; ++n) {
    if (n > 0) lead *= (la + static_cast<long double>(n - 1)) * (lb + static_cast<long double>(n - 1));
    long double mf = 0, m1 = 0, m2 = 0, m12 = 0;
    for (int n1 = 0; n1 <= n; ++n1) {
      const int n2 = n - n1;
      const LComplex c = lead * w1[n1] * w2[n2];
      const LComplex t = c * p1[n1] * p2[n2];
      f += t;
      mf += std::abs(t);
      if (!with_derivatives) continue;
      if (n1 >= 1) {
        const LComplex u = c * static_cast<long double>(n1) * p1[n1 - 1] * p2[n2];
        d1 += u;
        m1 += std::abs(u);
      }
      if (n2 >= 1) {
        const LComplex u = c * static_cast<long double>(n2) * p1[n1] * p2[n2 - 1];
        d2 += u;
        m2 += std::abs(u);
      }
      if (n1 >= 1 && n2 >= 1) {
        const LComplex u = c * static_cast<long double>(n1 * n2) * p1[n1 - 1] * p2[n2 - 1];
        d12 += u;
        m12 += std::abs(u);
      }
    }
    const double mag = static_cast<double>(std::max({mf, m1, m2, m12}));
    const double scale = std::max(mag, prev_mag * ratio);
    prev_mag = mag;
    out.order = n;
    out.tail_bound = ratio == 0.0 ? 0.0 : kTailSafety * scale * ratio / (1.0 - ratio);
    const int min_order = zeros + (with_derivatives ? 2 : 0);
    if (n >= min_order && out.tail_bound <= target_tol) {
      out.f = Complex(f);
      out.d1 = Complex(d1);
      out.d2 = Complex(d2);
      out.d12 = Complex(d12);
      return out;
    }
  }
  throw ConvergenceError("Gamma-ratio series: order cap " + std::to_string(max_order) +
                         " reached before the tail bound met the target");
}

SolutionVector local_basis(const HypergeometricParams& p, const Point2& x, double tol) {
  return to_vector(pieces_jets(local_pieces(p), {1.0, 1.0, 1.0, 1.0}, x, tol, false),
                   BasisTag::LocalPlain, x);
}

SolutionVector f_vector(const HypergeometricParams& p, const Point2& x, double tol) {
  return to_vector(pieces_jets(local_pieces(p), cycle_constants(p), x, tol, false),
                   BasisTag::FCycle, x);
}

SolutionVector f_dual_vector(const HypergeometricParams& p, const Point2& x, double tol) {
  return to_vector(pieces_jets(dual_pieces(p), dual_cycle_constants(p), x, tol, false),
                   BasisTag::FDual, x);
}

SolutionVector f_hat_vector(const HypergeometricParams& p, const Point2& x, double tol) {
  return to_vector(hat_jets(p, x, tol, false), BasisTag::FHat, x);
}

SolutionJets local_basis_jets(const HypergeometricParams& p, const Point2& x, double tol) {
  return {pieces_jets(local_pieces(p), {1.0, 1.0, 1.0, 1.0}, x, tol, true),
          BasisTag::LocalPlain, x};
}

SolutionJets f_vector_jets(const HypergeometricParams& p, const Point2& x, double tol) {
  return {pieces_jets(local_pieces(p), cycle_constants(p), x, tol, true), BasisTag::FCycle, x};
}

SolutionJets f_hat_jets(const HypergeometricParams& p, const Point2& x, double tol) {
  return {hat_jets(p, x, tol, true), BasisTag::FHat, x};
}

}  // namespace f4
