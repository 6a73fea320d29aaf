#include "f4/tpr.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <string>

#include "f4/errors.hpp"
#include "f4/intersection.hpp"
#include "f4/solutions.hpp"

namespace f4 {

namespace {

Complex nonzero(Complex z, const char* what) {
  if (std::abs(z) < kDegeneracyTol) throw DegenerateError(std::string("period relation: ") + what);
  return z;
}

double residual(Complex lhs, Complex rhs) { return std::abs(lhs - rhs) / (1.0 + std::abs(rhs)); }

}  // namespace

TPRReport tpr_identity(const HypergeometricParams& p, const Point2& x, int k, double tol) {
  if (k < 1 || k > 3) throw ParameterError("period relation index must be 1, 2 or 3");
  const ShiftedParams s = shifted_params(p);
  const Complex a = p.a, b = p.b, c1 = p.c1, c2 = p.c2;
  const Complex den = nonzero(1.0 - s.a12, "1 - a12");

  // (a_i, b_i, c-pattern) for the four local pieces.
  const std::array<HypergeometricParams, 4> base = {
      HypergeometricParams{a, b, c1, c2}, HypergeometricParams{s.a1, s.b1, 2.0 - c1, c2},
      HypergeometricParams{s.a2, s.b2, c1, 2.0 - c2},
      HypergeometricParams{s.a12, s.b12, 2.0 - c1, 2.0 - c2}};
  std::array<Complex, 4> coef;
  switch (k) {
    case 1:
      coef = {(1.0 - a) / den, -b * (1.0 - s.a1) / (nonzero(s.b1, "b1") * den),
              -b * (1.0 - s.a2) / (nonzero(s.b2, "b2") * den), b / nonzero(s.b12, "b12")};
      break;
    case 2: {
      const Complex bb = nonzero(b, "b");
      coef = {(1.0 - a) / den, -s.b1 * (1.0 - s.a1) / (bb * den),
              -s.b2 * (1.0 - s.a2) / (bb * den), s.b12 / bb};
      break;
    }
    default:
      coef = {(1.0 - a) / den, -(1.0 - s.a1) / den, -(1.0 - s.a2) / den, 1.0};
  }
  const double b_up = k == 2 ? 1.0 : 0.0;
  const double b_dual = k == 1 ? 0.0 : 1.0;
  const double series_tol = tol / 100.0;

  TPRReport r;
  r.identity_id = std::to_string(k);
  r.params = p;
  r.point = x;
  for (int i = 0; i < 4; ++i) {
    const HypergeometricParams& q = base[i];
    const HypergeometricParams first{q.a, q.b + b_up, q.c1, q.c2};
    const HypergeometricParams second{2.0 - q.a, b_dual - q.b, 2.0 - q.c1, 2.0 - q.c2};
    r.lhs += coef[i] * f4(first, x, series_tol).value * f4(second, x, series_tol).value;
    ++r.terms;
  }
  const Complex om1 = 1.0 - c1, om2 = 1.0 - c2;
  switch (k) {
    case 1:
      r.rhs = (1.0 - a + b) * (s.b1 + s.b2) * om1 * om2 / (den * s.b1 * s.b2 * s.b12);
      break;
    case 2: {
      const Complex rx = r_poly(x);
      if (std::abs(rx) < kDegeneracyTol) throw SingularLocusError("period relation 2: R(x) = 0");
      r.rhs = 2.0 * om1 * om2 / (den * (-b) * rx);
      break;
    }
    default:
      r.rhs = 0.0;
  }
  r.residual = residual(r.lhs, r.rhs);
  return r;
}

TPRReport tpr_entry11(const HypergeometricParams& p, const Point2& x, double tol,
                      bool include_phases) {
  const double series_tol = tol / 100.0;
  SolutionVector f = f_vector(p, x, series_tol);
  SolutionVector fd = f_dual_vector(p, x, series_tol);
  if (!include_phases) {
    const Complex ph = std::exp(kPi * kI * (p.a + p.b - p.c1 - p.c2));
    for (int i : {1, 2}) {
      f.entries[i] /= ph;
      fd.entries[i] *= ph;
    }
  }
  const Eigen::MatrixXcd h = h_matrix(p).entries;
  TPRReport r;
  r.identity_id = "entry11";
  r.params = p;
  r.point = x;
  // H is diagonal, so the bilinear form has one term per cycle.
  for (int i = 0; i < 4; ++i) {
    r.lhs += f.entries[i] * fd.entries[i] / h(i, i);
    ++r.terms;
  }
  const Complex two_pi_i = 2.0 * kPi * kI;
  r.rhs = two_pi_i * two_pi_i * c_matrix(p, x).entries(0, 0);
  r.residual = residual(r.lhs, r.rhs);
  return r;
}

std::vector<TPRReport> tpr_sweep(const std::vector<HypergeometricParams>& params,
                                 const Point2& x, int k, double tol) {
  std::vector<TPRReport> out(params.size());
  std::exception_ptr failure;
  const long n = static_cast<long>(params.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = tpr_identity(params[i], x, k, tol);
    } catch (...) {
#pragma omp critical(tpr_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<TPRReport> tpr_sweep_serial(const std::vector<HypergeometricParams>& params,
                                        const Point2& x, int k, double tol) {
  std::vector<TPRReport> out;
  out.reserve(params.size());
  for (const auto& p : params) out.push_back(tpr_identity(p, x, k, tol));
  return out;
}

Json to_json(const TPRReport& r) {
  return Json{{"identity", r.identity_id}, {"lhs", to_json(r.lhs)},   {"rhs", to_json(r.rhs)},
              {"residual", r.residual},    {"terms", r.terms}};
}

VerificationReport tpr_check(const HypergeometricParams& p, const Point2& x, double identity_tol,
                             double entry_tol) {
  VerificationReport rep;
  rep.title = "twisted period relations";
  for (int k = 1; k <= 3; ++k) {
    try {
      const TPRReport r = tpr_identity(p, x, k, identity_tol);
      rep.add("identity" + r.identity_id, "quadratic relation " + r.identity_id, r.residual,
              identity_tol, to_json(r));
    } catch (const std::exception& e) {
      rep.add_error(e);
    }
  }
  try {
    const TPRReport r = tpr_entry11(p, x, entry_tol);
    rep.add("entry11", "period bilinear form, entry (1,1)", r.residual, entry_tol, to_json(r));
  } catch (const std::exception& e) {
    rep.add_error(e);
  }
  return rep;
}

}  // namespace f4
