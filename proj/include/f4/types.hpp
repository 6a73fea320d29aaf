#pragma once

#include <complex>

#include <Eigen/Dense>

namespace f4 {

using Complex = std::complex<double>;

using Mat2 = Eigen::Matrix<Complex, 2, 2>;
using Mat3 = Eigen::Matrix<Complex, 3, 3>;
using Mat4 = Eigen::Matrix<Complex, 4, 4>;
using Vec4 = Eigen::Matrix<Complex, 4, 1>;
using RowVec4 = Eigen::Matrix<Complex, 1, 4>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr Complex kI{0.0, 1.0};

/// exp(2*pi*i*z), principal convention, no argument reduction.
inline Complex exp2pii(Complex z) { return std::exp(2.0 * kPi * kI * z); }

}  // namespace f4
