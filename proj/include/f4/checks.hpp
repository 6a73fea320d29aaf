#pragma once

#include "f4/params.hpp"
#include "f4/report.hpp"
#include "f4/series.hpp"

namespace f4 {

/// Report tolerances per family of checks.
struct Tolerances {
  double matrix = 1e-10;        // change of basis, e5 relation, operator form
  double determinant = 1e-9;    // relative, against closed-form determinants
  double spectrum = 1e-8;
  double preservation = 1e-9;
  double monodromy = 1e-6;      // continued matrices (full matrix at 10x)
  double identity = 1e-9;       // period relations
  double entry11 = 1e-8;

  /// Every family at the same value.
  static Tolerances uniform(double t) { return {t, t, t, t, t, t, t}; }
};

/// Closed-form intersection matrices against each other and their
/// determinants. Checks needing the Delta basis are skipped (with a note)
/// for non-generic parameters.
VerificationReport intersection_checks(const HypergeometricParams& p, const Point2& x,
                                       const Tolerances& tol);

/// Spectra in all bases, intersection-form preservation, basis consistency,
/// and the e5 eigen-relation.
VerificationReport monodromy_closed_form_checks(const HypergeometricParams& p,
                                                const Tolerances& tol);

/// max |a - b| / max(1, max |b|).
double relative_max_error(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace f4
