#include "f4/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace f4 {

namespace {

Complex horner(const std::array<Complex, 5>& c, Complex z) {
  Complex v = c[4];
  for (int k = 3; k >= 0; --k) v = v * z + c[k];
  return v;
}

Complex horner_derivative(const std::array<Complex, 5>& c, Complex z) {
  Complex v = 4.0 * c[4];
  for (int k = 3; k >= 1; --k) v = v * z + double(k) * c[k];
  return v;
}

}  // namespace

std::array<Complex, 5> characteristic_polynomial(const Mat4& m) {
  std::array<Complex, 5> c{};
  c[4] = 1.0;
  Mat4 mk = Mat4::Zero();
  for (int k = 1; k <= 4; ++k) {
    mk = m * mk + c[4 - k + 1] * Mat4::Identity();
    c[4 - k] = -(m * mk).trace() / double(k);
  }
  return c;
}

std::array<Complex, 5> polynomial_from_roots(const Spectrum& roots) {
  std::array<Complex, 5> c{};
  c[0] = 1.0;
  int deg = 0;
  for (const Complex r : roots) {
    for (int k = deg + 1; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
    ++deg;
  }
  return c;
}

Spectrum quartic_roots(const std::array<Complex, 5>& c, double cluster_tol) {
  double bound = 0.0;
  for (int k = 0; k < 4; ++k) bound = std::max(bound, std::abs(c[k]));
  const double radius = 1.0 + bound;
  Spectrum z;
  for (int i = 0; i < 4; ++i)
    z[i] = 0.5 * radius * std::exp(kI * (2.0 * kPi * i / 4.0 + 0.4));

  for (int iter = 0; iter < 500; ++iter) {
    double change = 0.0;
    for (int i = 0; i < 4; ++i) {
      const Complex pv = horner(c, z[i]);
      if (pv == Complex(0.0)) continue;
      const Complex ratio = pv / horner_derivative(c, z[i]);
      Complex repulsion = 0.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (std::isfinite(std::abs(step))) {
        z[i] -= step;
        change = std::max(change, std::abs(step) / std::max(1.0, std::abs(z[i])));
      }
    }
    if (change < 1e-15) break;
  }

  // Multiple roots split into a cloud of radius eps^(1/m) under rounding.
  // Group each cloud, then fix its centre from the power sums, which stay
  // well conditioned once the multiplicities are imposed.
  std::array<int, 4> group{0, 1, 2, 3};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(z[i] - z[j]) < cluster_tol * std::max(1.0, std::abs(z[i]))) {
        const int from = group[j], to = group[i];
        for (int& g : group)
          if (g == from) g = to;
      }
  std::vector<int> ids;
  std::vector<double> mult;
  std::vector<Complex> centre;
  for (int i = 0; i < 4; ++i) {
    auto it = std::find(ids.begin(), ids.end(), group[i]);
    if (it == ids.end()) {
      ids.push_back(group[i]);
      mult.push_back(1.0);
      centre.push_back(z[i]);
    } else {
      const auto k = it - ids.begin();
      mult[k] += 1.0;
      centre[k] += z[i];
    }
  }
  const int n = static_cast<int>(ids.size());
  for (int k = 0; k < n; ++k) centre[k] /= mult[k];

  // Newton identities for the monic quartic.
  std::array<Complex, 5> ps{};
  ps[1] = -c[3];
  ps[2] = -c[3] * ps[1] - 2.0 * c[2];
  ps[3] = -c[3] * ps[2] - c[2] * ps[1] - 3.0 * c[1];
  ps[4] = -c[3] * ps[3] - c[2] * ps[2] - c[1] * ps[1] - 4.0 * c[0];
  if (n < 4) {
    for (int iter = 0; iter < 20; ++iter) {
      Eigen::MatrixXcd jac(n, n);
      Eigen::VectorXcd res(n);
      for (int k = 1; k <= n; ++k) {
        res(k - 1) = -ps[k];
        for (int j = 0; j < n; ++j) {
          res(k - 1) += mult[j] * std::pow(centre[j], k);
          jac(k - 1, j) = double(k) * mult[j] * std::pow(centre[j], k - 1);
        }
      }
      const Eigen::VectorXcd step = jac.fullPivLu().solve(res);
      if (!step.allFinite()) break;
      for (int j = 0; j < n; ++j) centre[j] -= step(j);
      if (step.cwiseAbs().maxCoeff() < 1e-16) break;
    }
  }

  Spectrum out;
  for (int i = 0; i < 4; ++i)
    out[i] = centre[std::find(ids.begin(), ids.end(), group[i]) - ids.begin()];
  return out;
}

Spectrum eigenvalues(const Mat4& m, double cluster_tol) {
  return quartic_roots(characteristic_polynomial(m), cluster_tol);
}

double spectrum_distance(const Spectrum& u, const Spectrum& v) {
  std::array<int, 4> perm{0, 1, 2, 3};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(u[i] - v[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace f4
