#include "f4/continuation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <random>
#include <string>

#include "f4/errors.hpp"
#include "f4/intersection.hpp"
#include "f4/solutions.hpp"
#include "f4/spectrum.hpp"

namespace f4 {

namespace {

// Value with first partials in x1 and x2.
struct Dual {
  Complex v, d1, d2;
};

Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
Dual operator*(Dual a, Dual b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + a.v * b.d2};
}
Dual operator/(Dual a, Dual b) {
  const Complex inv = 1.0 / b.v;
  const Complex q = a.v * inv;
  return {q, (a.d1 - q * b.d1) * inv, (a.d2 - q * b.d2) * inv};
}
Dual operator*(Complex s, Dual a) { return {s * a.v, s * a.d1, s * a.d2}; }
Dual constant(Complex c) { return {c, 0.0, 0.0}; }

RowVec4 unit(int k) {
  RowVec4 r = RowVec4::Zero();
  r(k) = 1.0;
  return r;
}

RowVec4 values(const std::array<Dual, 4>& e) { return {e[0].v, e[1].v, e[2].v, e[3].v}; }
RowVec4 partial1(const std::array<Dual, 4>& e) { return {e[0].d1, e[1].d1, e[2].d1, e[3].d1}; }
RowVec4 partial2(const std::array<Dual, 4>& e) { return {e[0].d2, e[1].d2, e[2].d2, e[3].d2}; }

double condition_number(const Mat4& m) {
  const Eigen::JacobiSVD<Mat4> svd(m);
  const auto& s = svd.singularValues();
  return s(3) == 0.0 ? INFINITY : s(0) / s(3);
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

ConnectionEvaluator::ConnectionEvaluator(const HypergeometricParams& p) : p_(p) {}

ConnectionEvaluator build_connection(const HypergeometricParams& p) {
  return ConnectionEvaluator(p);
}

ConnectionMatrices ConnectionEvaluator::evaluate(const Point2& x) const {
  const Dual X1{x.x1, 1.0, 0.0}, X2{x.x2, 0.0, 1.0}, one = constant(1.0);
  const Dual det = X1 * X2 * (one - X1 - X2);
  if (std::abs(det.v) < 1e-14)
    throw SingularLocusError("connection: x1 x2 (1 - x1 - x2) = 0");

  const Complex s = p_.a + p_.b + 1.0;
  const Dual ab = constant(p_.a * p_.b);
  const Dual cross = 2.0 * X1 * X2;
  // Right-hand sides of the two operators solved for the pure second
  // derivatives, as coefficients of (f, d1 f, d2 f, d1 d2 f).
  const std::array<Dual, 4> r1 = {ab, constant(0.0) - (constant(p_.c1) - s * X1), s * X2, cross};
  const std::array<Dual, 4> r2 = {ab, s * X1, constant(0.0) - (constant(p_.c2) - s * X2), cross};
  std::array<Dual, 4> e1c, e2c;
  for (int k = 0; k < 4; ++k) {
    e1c[k] = (X2 * (one - X2) * r1[k] + X2 * X2 * r2[k]) / det;
    e2c[k] = (X1 * X1 * r1[k] + X1 * (one - X1) * r2[k]) / det;
  }
  const RowVec4 E1 = values(e1c), E2 = values(e2c);

  // d1 f12 = d2 E1 and d2 f12 = d1 E2; each contains the other unknown.
  const RowVec4 u1 = partial2(e1c) + E1(0) * unit(2) + E1(1) * unit(3) + E1(2) * E2;
  const RowVec4 u2 = partial1(e2c) + E2(0) * unit(1) + E2(1) * E1 + E2(2) * unit(3);
  const Complex den = 1.0 - E1(3) * E2(3);
  if (std::abs(den) < 1e-12)
    throw DegenerateError("connection: mixed third-derivative system is singular");
  const RowVec4 G1 = (u1 + E1(3) * u2) / den;
  const RowVec4 G2 = (u2 + E2(3) * u1) / den;

  ConnectionMatrices m;
  m.A1 << unit(1), E1, unit(3), G1;
  m.A2 << unit(2), unit(3), E2, G2;
  return m;
}

Point2 loop_path(LoopId loop, double theta) {
  const Complex e = exp2pii(theta);
  switch (loop) {
    case LoopId::Rho1: return {e / 8.0, 0.125};
    case LoopId::Rho2: return {0.125, e / 8.0};
    case LoopId::Rho3: break;
  }
  return {(2.0 - e) / 8.0, (2.0 - e) / 8.0};
}

Point2 loop_velocity(LoopId loop, double theta) {
  const Complex de = 2.0 * kPi * kI * exp2pii(theta) / 8.0;
  switch (loop) {
    case LoopId::Rho1: return {de, 0.0};
    case LoopId::Rho2: return {0.0, de};
    case LoopId::Rho3: break;
  }
  return {-de, -de};
}

double path_margin(LoopId loop, int samples) {
  double m = INFINITY;
  for (int i = 0; i <= samples; ++i) {
    const Point2 x = loop_path(loop, double(i) / samples);
    m = std::min({m, std::abs(x.x1), std::abs(x.x2), std::abs(1.0 - x.x1 - x.x2),
                  std::abs(r_poly(x))});
  }
  return m;
}

Mat4 transport(const ConnectionEvaluator& conn, const Mat4& phi,
               const std::function<Point2(double)>& path,
               const std::function<Point2(double)>& velocity,
               const IntegratorSettings& settings, IntegratorStats& stats) {
  auto rhs = [&](double t, const Mat4& y) -> Mat4 {
    ++stats.evaluations;
    const ConnectionMatrices a = conn.evaluate(path(t));
    const Point2 v = velocity(t);
    return (a.A1 * v.x1 + a.A2 * v.x2) * y;
  };

  Mat4 y = phi;
  double t = 0.0;
  double h = 1.0 / 64.0;
  stats.min_step = 1.0;
  Mat4 k1 = rhs(t, y);
  while (t < 1.0) {
    if (stats.accepted + stats.rejected >= settings.max_steps)
      throw IntegrationError("transport: step budget of " + std::to_string(settings.max_steps) +
                             " exhausted");
    h = std::min(h, 1.0 - t);
    if (h < 1e-12) throw IntegrationError("transport: step size underflow");
    const Mat4 k2 = rhs(t + c2 * h, y + h * (a21 * k1));
    const Mat4 k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const Mat4 k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Mat4 k5 = rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Mat4 k6 =
        rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Mat4 y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Mat4 k7 = rhs(t + h, y_new);
    const Mat4 err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double norm = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const double scale = settings.abs_tol +
                             settings.rel_tol * std::max(std::abs(y(i, j)), std::abs(y_new(i, j)));
        norm = std::max(norm, std::abs(err(i, j)) / scale);
      }
    const double factor =
        norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
    if (norm <= 1.0) {
      t += h;
      y = y_new;
      k1 = k7;
      ++stats.accepted;
      stats.min_step = std::min(stats.min_step, h);
    } else {
      ++stats.rejected;
    }
    h *= factor;
  }
  return y;
}

Mat4 cycle_constant_matrix(const HypergeometricParams& p) {
  const auto d = cycle_constants(p);
  Mat4 m = Mat4::Zero();
  for (int i = 0; i < 4; ++i) m(i, i) = d[i];
  return m;
}

ContinuationResult continue_fundamental(const HypergeometricParams& p, LoopId loop,
                                        const ContinuationOptions& opts) {
  ContinuationResult out;
  out.path_margin = path_margin(loop);
  if (out.path_margin < opts.min_path_margin)
    throw SingularApproachError("loop comes within " + std::to_string(out.path_margin) +
                                " of the singular locus");
  const ConnectionEvaluator conn = build_connection(p);
  auto seed_at = [&](const Point2& x) {
    return (opts.seed == SeedBasis::Local ? local_basis_jets(p, x, opts.series_tol)
                                          : f_hat_jets(p, x, opts.series_tol))
        .as_columns();
  };

  out.phi0 = seed_at(kBasePoint);
  out.seed_condition = condition_number(out.phi0);
  if (opts.force_reseed || out.seed_condition > opts.max_seed_condition) {
    // Seed on the diagonal at (t, t) and carry the frame to the base point.
    const double t0 = opts.reseed_t;
    const Mat4 alt = seed_at({t0, t0});
    out.seed_condition = condition_number(alt);
    const double span = kBasePoint.x1.real() - t0;
    out.phi0 = transport(
        conn, alt, [&](double s) { return Point2{t0 + s * span, t0 + s * span}; },
        [&](double) { return Point2{span, span}; }, opts.integrator, out.stats);
    out.reseeded = true;
  }

  out.phi1 = transport(
      conn, out.phi0, [loop](double th) { return loop_path(loop, th); },
      [loop](double th) { return loop_velocity(loop, th); }, opts.integrator, out.stats);
  // Columns are solutions: phi1 = phi0 * N^T with N acting on row coordinates.
  const Mat4 n = out.phi0.partialPivLu().solve(out.phi1).transpose();
  out.matrix = {n, loop,
                opts.seed == SeedBasis::Local ? CircuitBasis::LocalSeries : CircuitBasis::HatSeries,
                MatrixSource::Continued};
  return out;
}

double validate_connection(const HypergeometricParams& p, int points, std::uint64_t seed) {
  const ConnectionEvaluator conn = build_connection(p);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.05, 0.15);
  constexpr double h = 1e-5;
  constexpr double tol = 1e-15;
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const Point2 x{coord(rng), coord(rng)};
    const Mat4 f = local_basis_jets(p, x, tol).as_columns();
    const Mat4 fd1 = (local_basis_jets(p, {x.x1 + h, x.x2}, tol).as_columns() -
                      local_basis_jets(p, {x.x1 - h, x.x2}, tol).as_columns()) /
                     (2.0 * h);
    const Mat4 fd2 = (local_basis_jets(p, {x.x1, x.x2 + h}, tol).as_columns() -
                      local_basis_jets(p, {x.x1, x.x2 - h}, tol).as_columns()) /
                     (2.0 * h);
    const ConnectionMatrices a = conn.evaluate(x);
    worst = std::max(worst, (a.A1 * f - fd1).norm() / fd1.norm());
    worst = std::max(worst, (a.A2 * f - fd2).norm() / fd2.norm());
  }
  return worst;
}

namespace {

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

Json stats_json(const ContinuationResult& r) {
  return Json{{"accepted_steps", r.stats.accepted},
              {"rejected_steps", r.stats.rejected},
              {"rhs_evaluations", r.stats.evaluations},
              {"min_step", r.stats.min_step},
              {"seed_condition", r.seed_condition},
              {"path_margin", r.path_margin},
              {"reseeded", r.reseeded}};
}

void compare(VerificationReport& rep, const Mat4& continued, const Mat4& expected,
             const Spectrum& spectrum, double tol, const std::string& basis) {
  const Spectrum got = eigenvalues(continued);
  rep.add("spectrum", "circuit eigenvalues", spectrum_distance(got, spectrum), tol);

  const auto cp = characteristic_polynomial(continued);
  const auto cp_ref = polynomial_from_roots(spectrum);
  double cp_err = 0.0;
  for (int k = 0; k < 5; ++k) cp_err = std::max(cp_err, std::abs(cp[k] - cp_ref[k]));
  rep.add("characteristic_polynomial", "prod (lambda - eigenvalue)", cp_err, tol);

  Complex prod = 1.0;
  for (const Complex z : spectrum) prod *= z;
  rep.add("determinant", "product of eigenvalues", std::abs(continued.determinant() - prod), tol);

  rep.add("full_matrix", "closed form in the " + basis + " basis",
          max_abs(continued - expected) / std::max(1.0, max_abs(expected)), 10.0 * tol,
          Json{{"continued", to_json(Eigen::MatrixXcd(continued))},
               {"closed_form", to_json(Eigen::MatrixXcd(expected))}});
}

}  // namespace

VerificationReport verify_monodromy(const HypergeometricParams& p, LoopId loop, double tol,
                                    const ContinuationOptions& opts) {
  VerificationReport rep;
  rep.title = std::string("monodromy ") + to_string(loop);
  try {
    const double mismatch = validate_connection(p);
    rep.add("connection", "A_k F against series-jet differences", mismatch, 1e-6);
    if (mismatch > kConnectionAbort) {
      rep.errors.push_back({"IntegrationError", "connection disagrees with the series jets"});
      return rep;
    }

    Mat4 closed;
    bool hatted = false;
    try {
      closed = m_delta(p, loop).entries;
    } catch (const DegenerateError& e) {
      rep.notes.push_back(std::string("Delta basis unavailable (") + e.what() +
                          "); comparing the hatted basis instead");
      closed = m_hat(p, loop).entries;
      hatted = true;
    }

    ContinuationOptions o = opts;
    o.seed = hatted ? SeedBasis::Hat : SeedBasis::Local;
    const ContinuationResult res = continue_fundamental(p, loop, o);
    Mat4 expected = closed;
    if (!hatted) {
      const Mat4 d = cycle_constant_matrix(p);
      expected = d.inverse() * closed * d;
    }
    compare(rep, res.matrix.entries, expected, expected_spectrum(p, loop), tol,
            hatted ? "hatted" : "plain local");
    rep.details = Json{{"basis", to_string(res.matrix.basis)}, {"integrator", stats_json(res)}};
  } catch (const std::exception& e) {
    rep.add_error(e);
  }
  return rep;
}

std::vector<VerificationReport> verify_all_loops(const HypergeometricParams& p, double tol,
                                                 const ContinuationOptions& opts) {
  std::vector<VerificationReport> out(kAllLoops.size());
#pragma omp parallel for schedule(static, 1)
  for (int i = 0; i < int(kAllLoops.size()); ++i) out[i] = verify_monodromy(p, kAllLoops[i], tol, opts);
  return out;
}

std::vector<VerificationReport> verify_all_loops_serial(const HypergeometricParams& p, double tol,
                                                        const ContinuationOptions& opts) {
  std::vector<VerificationReport> out;
  for (const LoopId loop : kAllLoops) out.push_back(verify_monodromy(p, loop, tol, opts));
  return out;
}

}  // namespace f4
