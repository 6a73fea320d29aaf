#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "f4/errors.hpp"
#include "f4/series.hpp"
#include "oracles.hpp"

using namespace f4;

namespace {

const HypergeometricParams kP{0.31, 0.47, 0.62, 0.79};

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Complex(0.7, 0.2), 0) == Complex(1.0));
  CHECK(std::abs(pochhammer(2.0, 3) - 24.0) == 0.0);
  CHECK(std::abs(pochhammer(0.5, 4) - 6.5625) == 0.0);
}

TEST_CASE("value at the origin") {
  const SeriesValue v = f4::f4(kP, {0.0, 0.0}, 1e-14);
  CHECK(v.value == Complex(1.0));
  CHECK(v.tail_bound == 0.0);
}

TEST_CASE("anti-diagonal sum against row-major brute force") {
  const HypergeometricParams p{0.3, 0.5, 0.7, 1.3};
  const Point2 x{0.1, 0.1};
  const Complex want = oracle::f4_row_major(p, x, 200);
  const SeriesValue got = f4::f4(p, x, 1e-15);
  CHECK(std::abs(got.value - want) < 1e-12);
  // Equal truncations compared directly.
  const Complex brute = oracle::f4_row_major(p, {0.05, Complex(0.02, 0.03)}, 200);
  CHECK(std::abs(f4_truncated(p, {0.05, Complex(0.02, 0.03)}, 200).value - brute) < 1e-12);
}

TEST_CASE("a <-> b symmetry") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 0.2);
  for (int i = 0; i < 20; ++i) {
    const HypergeometricParams p = random_generic_params(rng);
    const Point2 x{u(rng), Complex(u(rng), u(rng) - 0.1)};
    const SeriesValue s = f4::f4(p, x, 1e-13), t = f4::f4(p.swapped_ab(), x, 1e-13);
    CHECK(std::abs(s.value - t.value) <= 2.0 * std::max(s.tail_bound, 1e-15) + 1e-14);
  }
}

TEST_CASE("convergence domain") {
  CHECK(in_convergence_domain({0.0, 0.0}));
  CHECK_FALSE(in_convergence_domain({0.25, 0.25}));
  CHECK(in_convergence_domain({0.125, 0.125}));
}

TEST_CASE("singular locus polynomial") {
  CHECK(r_poly({0.0, 0.0}) == Complex(1.0));
  CHECK(r_poly({0.25, 0.25}) == Complex(0.0));
  for (double t : {0.0, 0.125, 0.375, -0.5, 1.25, 3.0}) CHECK(r_poly({t, t}) == Complex(1.0 - 4.0 * t));
}

TEST_CASE("jet at the origin") {
  const HypergeometricParams& p = kP;
  const SeriesJet j = f4_jet(p, {0.0, 0.0}, 1e-14);
  CHECK(std::abs(j.f - 1.0) < 1e-15);
  CHECK(std::abs(j.d1 - p.a * p.b / p.c1) < 1e-15);
  CHECK(std::abs(j.d2 - p.a * p.b / p.c2) < 1e-15);
  CHECK(std::abs(j.d12 - p.a * (p.a + 1.0) * p.b * (p.b + 1.0) / (p.c1 * p.c2)) < 1e-14);
}

TEST_CASE("jet against central differences") {
  const Point2 x{0.05, 0.07};
  const double h = 1e-5;
  auto f = [&](Complex x1, Complex x2) { return f4::f4(kP, {x1, x2}, 1e-15).value; };
  const SeriesJet j = f4_jet(kP, x, 1e-15);
  CHECK(std::abs(j.f - f(x.x1, x.x2)) < 1e-14);
  const Complex d1 = (f(x.x1 + h, x.x2) - f(x.x1 - h, x.x2)) / (2 * h);
  const Complex d2 = (f(x.x1, x.x2 + h) - f(x.x1, x.x2 - h)) / (2 * h);
  const Complex d12 = (f(x.x1 + h, x.x2 + h) - f(x.x1 + h, x.x2 - h) -
                       f(x.x1 - h, x.x2 + h) + f(x.x1 - h, x.x2 - h)) /
                      (4 * h * h);
  CHECK(std::abs(j.d1 - d1) < 1e-7);
  CHECK(std::abs(j.d2 - d2) < 1e-7);
  CHECK(std::abs(j.d12 - d12) < 1e-4);
}

TEST_CASE("jet transforms under c1 <-> c2 with x1 <-> x2") {
  const SeriesJet j = f4_jet(kP, {0.05, 0.07}, 1e-15);
  const SeriesJet s = f4_jet(kP.swapped_c(), {0.07, 0.05}, 1e-15);
  CHECK(std::abs(j.f - s.f) < 1e-14);
  CHECK(std::abs(j.d1 - s.d2) < 1e-13);
  CHECK(std::abs(j.d2 - s.d1) < 1e-13);
  CHECK(std::abs(j.d12 - s.d12) < 1e-13);
}

TEST_CASE("PDE residuals") {
  const auto [o1, o2] = pde_residual(kP, {0.0, 0.0}, 4);
  CHECK(o1 == Complex(0.0));
  CHECK(o2 == Complex(0.0));

  // The truncated sum solves the system up to a remainder that decays
  // geometrically in the order until it reaches roundoff.
  const Point2 x{0.05, 0.05};
  double previous = 1.0;
  for (int order : {4, 8, 16, 32}) {
    const auto [r1, r2] = pde_residual(kP, x, order);
    const double r = std::max(std::abs(r1), std::abs(r2));
    CHECK(r < previous * 1e-2);
    previous = r;
  }
  const auto [r1, r2] = pde_residual(kP, x, 60);
  const SeriesValue v = f4_truncated(kP, x, 60);
  const double floor = 1e-14;
  CHECK(std::max(std::abs(r1), std::abs(r2)) <= std::max(10.0 * v.tail_bound, floor));
}

TEST_CASE("tail bound is non-increasing in the order") {
  for (const Point2& x : {Point2{0.05, 0.05}, Point2{0.2, 0.1}, Point2{-0.1, Complex(0.05, 0.1)}}) {
    double previous = INFINITY;
    for (int n = 1; n <= 80; ++n) {
      const double t = f4_truncated(kP, x, n).tail_bound;
      CHECK(t >= 0.0);
      CHECK(t <= previous);
      previous = t;
    }
  }
}

TEST_CASE("series errors") {
  CHECK_THROWS_AS(f4::f4({0.3, 0.4, -2.0, 0.5}, {0.01, 0.01}, 1e-12), ParameterError);
  CHECK_THROWS_AS(f4::f4(kP, {0.25, 0.25}, 1e-12), DomainError);
  CHECK_THROWS_AS(f4::f4(kP, {0.3, 0.2}, 1e-12), DomainError);
  SeriesOptions opts;
  opts.max_order = 5;
  CHECK_THROWS_AS(f4::f4(kP, {0.2, 0.1}, 1e-15, opts), ConvergenceError);
}

TEST_CASE("parallel batch matches the serial reference") {
  std::vector<Point2> pts;
  for (int i = 0; i < 64; ++i) pts.push_back({0.002 * i, Complex(0.1, -0.001 * i)});
  const auto par = f4_batch(kP, pts, 1e-14);
  const auto ser = f4_batch_serial(kP, pts, 1e-14);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].value == ser[i].value);
    CHECK(par[i].order == ser[i].order);
  }
  pts.push_back({0.3, 0.3});
  CHECK_THROWS_AS(f4_batch(kP, pts, 1e-14), DomainError);
}
