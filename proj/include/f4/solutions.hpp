#pragma once

#include <array>

#include "f4/params.hpp"
#include "f4/series.hpp"
#include "f4/types.hpp"

namespace f4 {

/// Powers x^e use the principal logarithm, arg x in (-pi, pi]; the cut is the
/// closed negative real half-line including 0.
enum class BranchConvention { Principal };

/// Principal power; throws BranchError when x lies on the cut.
Complex principal_pow(Complex x, Complex e);

/// Gamma-ratio constants of the solution formulas. d[i] multiplies the i-th
/// local series entry to give f_i; dual_d[i] does the same for f_i^dual.
struct PrefactorSet {
  Complex g1, g2, g3, g4;
  std::array<Complex, 4> d;
  std::array<Complex, 4> dual_d;
};

/// All constants at once; throws PoleError if any Gamma argument is at a pole.
PrefactorSet prefactors(const HypergeometricParams& p);
/// d[0..3] only.
std::array<Complex, 4> cycle_constants(const HypergeometricParams& p);
std::array<Complex, 4> dual_cycle_constants(const HypergeometricParams& p);
/// Gamma(1-b) Gamma(c1+c2-a-1) exp(pi i (a+b-c1-c2)).
Complex g4_constant(const HypergeometricParams& p);

enum class BasisTag { LocalPlain, FCycle, FDual, FHat };

const char* to_string(BasisTag tag);

struct SolutionVector {
  std::array<Complex, 4> entries;
  BasisTag basis;
  Point2 at;
};

/// Jets (f, d1, d2, d12) of the four solutions of one basis.
struct SolutionJets {
  std::array<SeriesJet, 4> jets;
  BasisTag basis;
  Point2 at;

  /// 4x4 matrix whose column i is the jet of solution i.
  Mat4 as_columns() const;
  SolutionVector values() const;
};

/// |gamma_k - 1| below which the hatted entries switch to the regularized form.
inline constexpr double kIntegerSwitch = 1e-3;

SolutionVector local_basis(const HypergeometricParams& p, const Point2& x, double tol);
SolutionVector f_vector(const HypergeometricParams& p, const Point2& x, double tol);
SolutionVector f_dual_vector(const HypergeometricParams& p, const Point2& x, double tol);
/// (f^1, f^2, f^3, f5); finite when c1 or c2 is an integer.
SolutionVector f_hat_vector(const HypergeometricParams& p, const Point2& x, double tol);

SolutionJets local_basis_jets(const HypergeometricParams& p, const Point2& x, double tol);
SolutionJets f_vector_jets(const HypergeometricParams& p, const Point2& x, double tol);
SolutionJets f_hat_jets(const HypergeometricParams& p, const Point2& x, double tol);

/// Jet of x1^e1 x2^e2 * S by the product rule.
SeriesJet monomial_times(const SeriesJet& s, const Point2& x, Complex e1, Complex e2);

/// Gamma(alpha+n1+n2) Gamma(beta+n1+n2) / (Gamma(g1+n1) Gamma(g2+n2) n1! n2!)
/// x1^n1 x2^n2 summed over N^2 with reciprocal Gamma for the lower parameters,
/// so it is finite for any g1, g2. Extended precision internally.
SeriesJet gamma_ratio_series(Complex alpha, Complex beta, Complex g1, Complex g2,
                             const Point2& x, double target_tol, bool with_derivatives);

}  // namespace f4
