#pragma once

#include <string>
#include <vector>

#include "f4/params.hpp"
#include "f4/report.hpp"
#include "f4/series.hpp"

namespace f4 {

struct TPRReport {
  std::string identity_id;  // "1", "2", "3" or "entry11"
  Complex lhs;
  Complex rhs;
  double residual = 0.0;  // |lhs - rhs| / (1 + |rhs|)
  int terms = 0;
  HypergeometricParams params;
  Point2 point;
};

/// Quadratic relation k in {1, 2, 3} between F4 at (a, b, c) and dual
/// parameters. Each series factor is summed to tol / 100.
TPRReport tpr_identity(const HypergeometricParams& p, const Point2& x, int k, double tol);

/// sum_i f_i f_i^dual / H_ii against (2 pi i)^2 C11. With include_phases off,
/// the exp(+-pi i (a + b - c1 - c2)) factors are stripped from entries 2 and 3
/// of both vectors.
TPRReport tpr_entry11(const HypergeometricParams& p, const Point2& x, double tol,
                      bool include_phases = true);

/// tpr_identity over many parameter sets in parallel (OpenMP).
std::vector<TPRReport> tpr_sweep(const std::vector<HypergeometricParams>& params,
                                 const Point2& x, int k, double tol);
/// Serial reference for tpr_sweep.
std::vector<TPRReport> tpr_sweep_serial(const std::vector<HypergeometricParams>& params,
                                        const Point2& x, int k, double tol);

/// Identities 1-3 at identity_tol and entry11 at entry_tol.
VerificationReport tpr_check(const HypergeometricParams& p, const Point2& x, double identity_tol,
                             double entry_tol);

Json to_json(const TPRReport& r);

}  // namespace f4
