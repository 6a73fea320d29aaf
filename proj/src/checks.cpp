#include "f4/checks.hpp"

#include <cmath>
#include <string>

#include "f4/intersection.hpp"
#include "f4/monodromy.hpp"
#include "f4/spectrum.hpp"

namespace f4 {

namespace {

double relative(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

Mat4 hat_transform_dual(const HypergeometricParams& p) {
  Mat4 e = Mat4::Identity();
  e.row(3) = e5_vectors(p).e5_dual;
  return basis_changes(conjugate_params(p)).P * e;
}

}  // namespace

double relative_max_error(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

VerificationReport intersection_checks(const HypergeometricParams& p, const Point2& x,
                                       const Tolerances& tol) {
  VerificationReport rep;
  rep.title = "intersection matrices";
  const bool generic = genericity_check(p).generic();
  try {
    const Eigen::MatrixXcd hh = h_hat_matrix(p).entries;
    rep.add("hhat_det", "determinant of the hatted matrix",
            relative(hh.determinant(), h_hat_det_closed_form(p)), tol.determinant);
    rep.add("hhat_conjugate", "Hhat at inverted constants equals its transpose",
            relative_max_error(h_hat_matrix(conjugate_params(p)).entries, hh.transpose()),
            tol.matrix);
    const Mat2 i12 = h_sub_inverse(p, SubBlock::B12);
    const Mat2 i13 = h_sub_inverse(p, SubBlock::B13);
    Mat2 s12, s13;
    s12 << hh(0, 0), hh(0, 1), hh(1, 0), hh(1, 1);
    s13 << hh(0, 0), hh(0, 2), hh(2, 0), hh(2, 2);
    rep.add("hhat12_inverse", "closed-form inverse of the (1,2) block",
            relative_max_error(i12 * s12, Mat2::Identity()), tol.matrix);
    rep.add("hhat13_inverse", "closed-form inverse of the (1,3) block",
            relative_max_error(i13 * s13, Mat2::Identity()), tol.matrix);
  } catch (const std::exception& e) {
    rep.add_error(e);
  }

  if (generic) {
    try {
      const Eigen::MatrixXcd h = h_matrix(p).entries;
      const Mat4 t = hat_transform(p);
      const Mat4 built = t * Mat4(h) * hat_transform_dual(p).transpose();
      rep.add("hhat_change_of_basis", "Hhat = (P E) H (P' E')^T",
              relative_max_error(built, h_hat_matrix(p).entries), tol.matrix,
              to_json(Eigen::MatrixXcd(built)));
      const CycleVectorPair e = e5_vectors(p);
      const Complex i55 = (e.e5 * Mat4(h) * e.e5_dual.transpose())(0, 0);
      rep.add("delta5_self_intersection", "e5 H e5dual^T closed form",
              relative(i55, delta5_self_intersection(p)), tol.matrix);
      const Eigen::MatrixXcd h678 = h678_matrix(p).entries;
      rep.add("h678_det", "determinant of the 3x3 block",
              relative(h678.determinant(), h678_det_closed_form(p)), tol.determinant);
    } catch (const std::exception& e) {
      rep.add_error(e);
    }
  } else {
    rep.notes.push_back("parameters not generic: Delta-basis checks skipped");
  }

  try {
    const Eigen::MatrixXcd c = c_matrix(p, x).entries;
    rep.add("c_symmetric", "C = C^T", (c - c.transpose()).cwiseAbs().maxCoeff(), tol.matrix);
    rep.add("c_zeros", "C14 = C24 = C34 = 0",
            std::max({std::abs(c(0, 3)), std::abs(c(1, 3)), std::abs(c(2, 3))}), tol.matrix);
    rep.add("c_det", "determinant of C", relative(c.determinant(), c_det_closed_form(p, x)),
            tol.determinant);
  } catch (const std::exception& e) {
    rep.add_error(e);
  }
  return rep;
}

VerificationReport monodromy_closed_form_checks(const HypergeometricParams& p,
                                                const Tolerances& tol) {
  VerificationReport rep;
  rep.title = "closed-form monodromy";
  const bool generic = genericity_check(p).generic();
  const HypergeometricParams q = conjugate_params(p);
  for (const LoopId loop : kAllLoops) {
    const std::string name = to_string(loop);
    try {
      const Spectrum want = expected_spectrum(p, loop);
      const Mat4 mh = m_hat(p, loop).entries;
      const Mat4 mp = m_prime(p, loop).entries;
      rep.add(name + ".spectrum_hat", "circuit eigenvalues",
              spectrum_distance(eigenvalues(mh), want), tol.spectrum);
      rep.add(name + ".spectrum_prime", "circuit eigenvalues",
              spectrum_distance(eigenvalues(mp), want), tol.spectrum);
      const Mat4 hh = h_hat_matrix(p).entries;
      rep.add(name + ".preserves_hhat", "M Hhat M'^T = Hhat",
              relative_max_error(mh * hh * m_hat(q, loop).entries.transpose(), hh),
              tol.preservation);
      double op = 0.0;
      for (int i = 0; i < 4; ++i) {
        RowVec4 d = RowVec4::Zero();
        d(i) = 1.0;
        op = std::max(op, (apply_operator(p, loop, d) - d * mh).cwiseAbs().maxCoeff());
      }
      rep.add(name + ".operator_form", "pairing formula equals the hatted matrix", op,
              tol.matrix);
      if (!generic) continue;
      const Mat4 md = m_delta(p, loop).entries;
      rep.add(name + ".spectrum_delta", "circuit eigenvalues",
              spectrum_distance(eigenvalues(md), want), tol.spectrum);
      const Mat4 t = hat_transform(p);
      rep.add(name + ".basis_consistency", "T M T^-1 = hatted matrix",
              relative_max_error(t * md * t.inverse(), mh), tol.preservation);
      if (loop == LoopId::Rho3) {
        const CircuitConstants k = circuit_constants(p);
        const RowVec4 e5 = e5_vectors(p).e5;
        const Complex lam = -k.gamma1 * k.gamma2 / (k.alpha * k.beta);
        rep.add("rho3.e5_eigenvector", "e5 M3 = -(g1 g2 / alpha beta) e5",
                (e5 * md - lam * e5).cwiseAbs().maxCoeff(), tol.matrix);
      }
    } catch (const std::exception& e) {
      rep.add_error(e);
    }
  }
  if (!generic) rep.notes.push_back("parameters not generic: Delta-basis checks skipped");
  return rep;
}

}  // namespace f4
