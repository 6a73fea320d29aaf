#include <doctest.h>

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>

#include "f4/spectrum.hpp"

using namespace f4;

namespace {

Spectrum eigen_reference(const Mat4& m) {
  Eigen::ComplexEigenSolver<Mat4> es(m);
  Spectrum s;
  for (int i = 0; i < 4; ++i) s[i] = es.eigenvalues()(i);
  return s;
}

Mat4 random_matrix(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

}  // namespace

TEST_CASE("characteristic polynomial") {
  const Spectrum r{1.0, 2.0, Complex(0, 1), -3.0};
  Mat4 d = Mat4::Zero();
  for (int i = 0; i < 4; ++i) d(i, i) = r[i];
  const auto c = characteristic_polynomial(d);
  const auto w = polynomial_from_roots(r);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(c[i] - w[i]) < 1e-13);
  CHECK(c[4] == Complex(1.0));
  // Constant term is det for even size.
  std::mt19937_64 rng(1);
  const Mat4 m = random_matrix(rng);
  CHECK(std::abs(characteristic_polynomial(m)[0] - m.determinant()) < 1e-12 * std::abs(m.determinant()) + 1e-12);
  CHECK(std::abs(characteristic_polynomial(m)[3] + m.trace()) < 1e-12);
}

TEST_CASE("eigenvalues against a general eigensolver") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Mat4 m = random_matrix(rng);
    CHECK(spectrum_distance(eigenvalues(m), eigen_reference(m)) < 1e-10);
  }
}

TEST_CASE("multiple roots") {
  const Complex l = std::exp(Complex(0, 0.7));
  // Non-diagonalizable: Jordan block conjugated by a random matrix.
  std::mt19937_64 rng(3);
  Mat4 j = Mat4::Identity();
  j(0, 1) = 1.0;
  j(3, 3) = l;
  const Mat4 s = random_matrix(rng);
  const Mat4 m = s * j * s.inverse();
  CHECK(spectrum_distance(eigenvalues(m), {1.0, 1.0, 1.0, l}) < 1e-10);

  const Spectrum two{l, l, 1.0 / l, 1.0 / l};
  CHECK(spectrum_distance(quartic_roots(polynomial_from_roots(two)), two) < 1e-12);
  const Spectrum four{l, l, l, l};
  CHECK(spectrum_distance(quartic_roots(polynomial_from_roots(four)), four) < 1e-12);
}

TEST_CASE("spectrum distance matches by permutation") {
  const Spectrum u{1.0, 2.0, 3.0, 4.0};
  const Spectrum v{4.0, 3.0 + 1e-3, 1.0, 2.0};
  CHECK(std::abs(spectrum_distance(u, v) - 1e-3) < 1e-15);
  CHECK(spectrum_distance(u, u) == 0.0);
  CHECK(spectrum_distance({1.0, 1.0, 1.0, 2.0}, {1.0, 2.0, 2.0, 1.0}) == doctest::Approx(1.0));
}
