#pragma once

#include <array>

#include "f4/params.hpp"
#include "f4/series.hpp"
#include "f4/types.hpp"

namespace f4 {

/// Denominators below this magnitude raise DegenerateError.
inline constexpr double kDegeneracyTol = 1e-9;

enum class CycleBasis { DeltaCycles, HatCycles, PrimeCycles, Cycles678, CohomologyForms };

const char* to_string(CycleBasis basis);

/// Matrix of a bilinear pairing; rows index the first argument (loaded with u),
/// columns the second (loaded with 1/u, or the dual forms).
struct IntersectionMatrix {
  Eigen::MatrixXcd entries;
  CycleBasis row_basis;
  CycleBasis col_basis;

  Eigen::Index n() const { return entries.rows(); }
};

/// Row coordinates of Delta5 in (Delta1..Delta4) for u and for 1/u.
struct CycleVectorPair {
  RowVec4 e5;
  RowVec4 e5_dual;
};

struct BasisChange {
  Mat4 P;
  Mat4 P_prime;
};

enum class SubBlock { B12, B13 };

/// Diagonal homology intersection matrix of Delta1..Delta4.
IntersectionMatrix h_matrix(const HypergeometricParams& p);

CycleVectorPair e5_vectors(const HypergeometricParams& p);

/// I_h(Delta5, Delta_j^dual), j = 1..4, from their closed forms.
std::array<Complex, 4> delta5_pairings(const HypergeometricParams& p);

/// I_h(Delta5, Delta5^dual) = -(alpha beta + gamma1 gamma2) / ((alpha - gamma1 gamma2)(1 - beta)).
Complex delta5_self_intersection(const HypergeometricParams& p);

/// 3x3 matrix of Delta6, Delta7, Delta8 built from the mu-form entries; the
/// lower triangle is the upper triangle evaluated at conjugate parameters.
IntersectionMatrix h678_matrix(const HypergeometricParams& p);
Complex h678_det_closed_form(const HypergeometricParams& p);

/// Intersection matrix of the regularized basis.
IntersectionMatrix h_hat_matrix(const HypergeometricParams& p);
Complex h_hat_det_closed_form(const HypergeometricParams& p);

/// Closed-form inverse of the (1,2) or (1,3) principal 2x2 block of the hatted
/// matrix. Carries a 1/(1 - gamma2) resp. 1/(1 - gamma1) prefactor.
Mat2 h_sub_inverse(const HypergeometricParams& p, SubBlock which);
/// (1 - gamma2) resp. (1 - gamma1) times h_sub_inverse; finite at integer c.
Mat2 h_sub_inverse_reduced(const HypergeometricParams& p, SubBlock which);

BasisChange basis_changes(const HypergeometricParams& p);

/// T = P * E with E = rows (e1, e2, e3, e5): hatted cycles in terms of Delta1..Delta4.
Mat4 hat_transform(const HypergeometricParams& p);

/// Cohomology intersection matrix C(x) (the pairing is (2 pi i)^2 C).
IntersectionMatrix c_matrix(const HypergeometricParams& p, const Point2& x);
Complex c_det_closed_form(const HypergeometricParams& p, const Point2& x);

}  // namespace f4
