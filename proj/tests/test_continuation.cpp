#include <doctest.h>

#include <cmath>

#include "f4/continuation.hpp"
#include "f4/errors.hpp"
#include "f4/solutions.hpp"

using namespace f4;

namespace {

const HypergeometricParams kP{0.31, 0.47, 0.62, 0.79};

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

Mat4 expected_local(const HypergeometricParams& p, LoopId loop) {
  const Mat4 d = cycle_constant_matrix(p);
  return d.inverse() * m_delta(p, loop).entries * d;
}

}  // namespace

TEST_CASE("connection structure") {
  const ConnectionEvaluator conn = build_connection(kP);
  const ConnectionMatrices a = conn.evaluate({0.05, 0.07});
  RowVec4 r1, r2;
  r1 << 0.0, 1.0, 0.0, 0.0;
  r2 << 0.0, 0.0, 1.0, 0.0;
  CHECK(a.A1.row(0) == r1);
  CHECK(a.A2.row(0) == r2);
  CHECK_THROWS_AS(conn.evaluate({0.0, 0.07}), SingularLocusError);
  CHECK_THROWS_AS(conn.evaluate({0.5, 0.5}), SingularLocusError);
}

TEST_CASE("connection against series jets") {
  const Point2 x{0.05, 0.07};
  const double h = 1e-5;
  const Mat4 f = local_basis_jets(kP, x, 1e-15).as_columns();
  const Mat4 fd1 = (local_basis_jets(kP, {x.x1 + h, x.x2}, 1e-15).as_columns() -
                    local_basis_jets(kP, {x.x1 - h, x.x2}, 1e-15).as_columns()) /
                   (2.0 * h);
  const Mat4 fd2 = (local_basis_jets(kP, {x.x1, x.x2 + h}, 1e-15).as_columns() -
                    local_basis_jets(kP, {x.x1, x.x2 - h}, 1e-15).as_columns()) /
                   (2.0 * h);
  const ConnectionMatrices a = build_connection(kP).evaluate(x);
  CHECK((a.A1 * f - fd1).norm() / fd1.norm() < 1e-6);
  CHECK((a.A2 * f - fd2).norm() / fd2.norm() < 1e-6);
  CHECK(validate_connection(kP) < 1e-6);
}

TEST_CASE("connection is flat") {
  const ConnectionEvaluator conn = build_connection(kP);
  const Point2 x{0.1, 0.12};
  const double h = 1e-5;
  const ConnectionMatrices a = conn.evaluate(x);
  const Mat4 d2a1 = (conn.evaluate({x.x1, x.x2 + h}).A1 - conn.evaluate({x.x1, x.x2 - h}).A1) /
                    (2.0 * h);
  const Mat4 d1a2 = (conn.evaluate({x.x1 + h, x.x2}).A2 - conn.evaluate({x.x1 - h, x.x2}).A2) /
                    (2.0 * h);
  const Mat4 curvature = d2a1 - d1a2 + a.A1 * a.A2 - a.A2 * a.A1;
  CHECK(max_abs(curvature) < 1e-5);
}

TEST_CASE("loop paths") {
  const Point2 b = loop_path(LoopId::Rho3, 0.0);
  CHECK(std::abs(b.x1 - 0.125) < 1e-15);
  CHECK(std::abs(b.x2 - 0.125) < 1e-15);
  for (LoopId loop : kAllLoops) {
    const Point2 s = loop_path(loop, 0.0), e = loop_path(loop, 1.0);
    CHECK(std::abs(s.x1 - kBasePoint.x1) < 1e-15);
    CHECK(std::abs(e.x2 - kBasePoint.x2) < 1e-15);
    CHECK(path_margin(loop) > 1e-2);
  }
  const Point2 h = loop_path(LoopId::Rho1, 0.5);
  CHECK(std::abs(h.x1 + 0.125) < 1e-15);
  CHECK(std::abs(h.x2 - 0.125) < 1e-15);
  for (double t : {0.1, 0.35, 0.8}) {
    const Point2 x = loop_path(LoopId::Rho3, t);
    CHECK(std::abs(x.x1 - x.x2) == 0.0);
    CHECK(std::abs(r_poly(x) - exp2pii(t) / 2.0) < 1e-15);
    // Velocity by central differences.
    const double dt = 1e-6;
    const Complex v = (loop_path(LoopId::Rho3, t + dt).x1 - loop_path(LoopId::Rho3, t - dt).x1) /
                      (2 * dt);
    CHECK(std::abs(loop_velocity(LoopId::Rho3, t).x1 - v) < 1e-8);
  }
}

TEST_CASE("continued rho1 is diagonal") {
  const ContinuationResult r = continue_fundamental(kP, LoopId::Rho1);
  CHECK(r.matrix.basis == CircuitBasis::LocalSeries);
  CHECK(r.matrix.source == MatrixSource::Continued);
  const Complex g = exp2pii(kP.c1);
  Mat4 want = Mat4::Identity();
  want(1, 1) = want(3, 3) = 1.0 / g;
  CHECK(max_abs(r.matrix.entries - want) < 1e-6);
  CHECK(max_abs(r.matrix.entries - m_delta(kP, LoopId::Rho1).entries) < 1e-6);
}

TEST_CASE("continued rho3") {
  const ContinuationResult r = continue_fundamental(kP, LoopId::Rho3);
  const Mat4& n = r.matrix.entries;
  const auto cp = characteristic_polynomial(n);
  const auto want = polynomial_from_roots(expected_spectrum(kP, LoopId::Rho3));
  for (int k = 0; k < 5; ++k) CHECK(std::abs(cp[k] - want[k]) < 1e-6);
  const Mat4 e = expected_local(kP, LoopId::Rho3);
  CHECK(max_abs(n - e) / std::max(1.0, max_abs(e)) < 1e-5);

  Complex prod = 1.0;
  for (Complex z : expected_spectrum(kP, LoopId::Rho3)) prod *= z;
  CHECK(std::abs(n.determinant() - prod) < 1e-6);
  CHECK(max_abs(n * n.inverse() - Mat4::Identity()) < 1e-8);

  // Going around twice gives the square.
  IntegratorStats stats;
  const Mat4 phi2 = transport(
      build_connection(kP), r.phi1, [](double t) { return loop_path(LoopId::Rho3, t); },
      [](double t) { return loop_velocity(LoopId::Rho3, t); }, IntegratorSettings{}, stats);
  const Mat4 n2 = r.phi0.partialPivLu().solve(phi2).transpose();
  CHECK(max_abs(n2 - n * n) < 1e-5);
}

TEST_CASE("defect shrinks as the integrator tolerance is halved") {
  const Mat4 e = expected_local(kP, LoopId::Rho3);
  double previous = INFINITY;
  for (double rel : {1e-6, 5e-7, 2.5e-7, 1.25e-7}) {
    ContinuationOptions o;
    o.integrator.rel_tol = rel;
    o.integrator.abs_tol = rel * 1e-3;
    const ContinuationResult r = continue_fundamental(kP, LoopId::Rho3, o);
    const double defect = max_abs(r.phi1 - r.phi0 * e.transpose());
    CHECK(defect < previous);
    previous = defect;
  }
}

TEST_CASE("re-seeding does not change the matrix") {
  ContinuationOptions o;
  o.force_reseed = true;
  const ContinuationResult a = continue_fundamental(kP, LoopId::Rho3);
  const ContinuationResult b = continue_fundamental(kP, LoopId::Rho3, o);
  CHECK(b.reseeded);
  CHECK_FALSE(a.reseeded);
  CHECK(max_abs(a.matrix.entries - b.matrix.entries) < 1e-7);
}

TEST_CASE("verification reports") {
  const VerificationReport r2 = verify_monodromy(kP, LoopId::Rho2, 1e-6);
  CHECK(r2.passed());
  CHECK(r2.max_residual() < 1e-6);

  const VerificationReport c1 = verify_monodromy({kP.a, kP.b, 1.0, kP.c2}, LoopId::Rho3, 1e-6);
  CHECK(c1.passed());
  CHECK_FALSE(c1.notes.empty());
  CHECK(c1.details["basis"] == "HatSeries");

  CHECK_FALSE(verify_monodromy(kP, LoopId::Rho1, 0.0).passed());
}

TEST_CASE("parallel loops match the serial reference") {
  const auto par = verify_all_loops(kP, 1e-6);
  const auto ser = verify_all_loops_serial(kP, 1e-6);
  REQUIRE(par.size() == 3);
  REQUIRE(ser.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(par[i].passed());
    CHECK(to_json(par[i]).dump() == to_json(ser[i]).dump());
  }
}
