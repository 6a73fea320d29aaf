#include "f4/monodromy.hpp"

#include <cmath>

#include "f4/errors.hpp"
#include "f4/intersection.hpp"

namespace f4 {

namespace {

CircuitMatrix closed(const Mat4& m, LoopId loop, CircuitBasis basis) {
  return {m, loop, basis, MatrixSource::ClosedForm};
}

}  // namespace

const char* to_string(LoopId loop) {
  switch (loop) {
    case LoopId::Rho1: return "rho1";
    case LoopId::Rho2: return "rho2";
    case LoopId::Rho3: return "rho3";
  }
  return "?";
}

const char* to_string(CircuitBasis basis) {
  switch (basis) {
    case CircuitBasis::DeltaCycles: return "DeltaCycles";
    case CircuitBasis::HatCycles: return "HatCycles";
    case CircuitBasis::PrimeCycles: return "PrimeCycles";
    case CircuitBasis::LocalSeries: return "LocalSeries";
    case CircuitBasis::HatSeries: return "HatSeries";
  }
  return "?";
}

const char* to_string(MatrixSource source) {
  return source == MatrixSource::ClosedForm ? "ClosedForm" : "Continued";
}

CircuitMatrix m_delta(const HypergeometricParams& p, LoopId loop) {
  const CircuitConstants k = circuit_constants(p);
  if (std::abs(k.gamma1 - 1.0) < kGenericityTol || std::abs(k.gamma2 - 1.0) < kGenericityTol)
    throw DegenerateError("Delta basis degenerates at integer c1 or c2");
  Mat4 m = Mat4::Identity();
  switch (loop) {
    case LoopId::Rho1:
      m(1, 1) = m(3, 3) = 1.0 / k.gamma1;
      break;
    case LoopId::Rho2:
      m(2, 2) = m(3, 3) = 1.0 / k.gamma2;
      break;
    case LoopId::Rho3: {
      const Complex g12 = k.gamma1 * k.gamma2;
      const Complex s = (k.beta - 1.0) * (k.alpha - g12) / (k.alpha * k.beta);
      const CycleVectorPair e = e5_vectors(p);
      const Mat4 h = h_matrix(p).entries;
      m -= s * h * e.e5_dual.transpose() * e.e5;
      break;
    }
  }
  return closed(m, loop, CircuitBasis::DeltaCycles);
}

CircuitMatrix m_hat(const HypergeometricParams& p, LoopId loop) {
  const CircuitConstants k = circuit_constants(p);
  const Complex A = k.alpha, B = k.beta, g1 = k.gamma1, g2 = k.gamma2, ab = A * B;
  Mat4 m = Mat4::Identity();
  switch (loop) {
    case LoopId::Rho1:
      m(1, 0) = 1.0;
      m(1, 1) = m(3, 3) = 1.0 / g1;
      m(3, 0) = (ab - g2) / ab;
      m(3, 2) = (A - g2) * (B - g2) / (ab * g2);
      break;
    case LoopId::Rho2:
      m(2, 0) = 1.0;
      m(2, 2) = m(3, 3) = 1.0 / g2;
      m(3, 0) = (ab - g1) / ab;
      m(3, 1) = (A - g1) * (B - g1) / (ab * g1);
      break;
    case LoopId::Rho3:
      m(0, 3) = -1.0;
      m(3, 3) = -g1 * g2 / ab;
      break;
  }
  return closed(m, loop, CircuitBasis::HatCycles);
}

CircuitMatrix m_prime(const HypergeometricParams& p, LoopId loop) {
  const CircuitConstants k = circuit_constants(p);
  const Complex A = k.alpha, B = k.beta, g1 = k.gamma1, g2 = k.gamma2, ab = A * B;
  const Complex g12 = g1 * g2;
  Mat4 m = Mat4::Identity();
  switch (loop) {
    case LoopId::Rho1:
      m(1, 0) = m(3, 2) = 1.0;
      m(1, 1) = m(3, 3) = 1.0 / g1;
      break;
    case LoopId::Rho2:
      m(2, 0) = m(3, 1) = 1.0;
      m(2, 2) = m(3, 3) = 1.0 / g2;
      break;
    case LoopId::Rho3:
      m(0, 0) = -g12 / ab;
      m(0, 1) = g12 / ab - 1.0 / g1;
      m(0, 2) = g12 / ab - 1.0 / g2;
      m(0, 3) = -(A - g12) * (B - g12) / (ab * g12);
      break;
  }
  return closed(m, loop, CircuitBasis::PrimeCycles);
}

RowVec4 apply_operator(const HypergeometricParams& p, LoopId loop, const RowVec4& coords) {
  const CircuitConstants k = circuit_constants(p);
  const Mat4 h = h_hat_matrix(p).entries;
  // Pairings of the input with the dual hatted cycles.
  const RowVec4 pair = coords * h;
  if (loop == LoopId::Rho3) {
    const Complex g12 = k.gamma1 * k.gamma2;
    const Complex s = (k.beta - 1.0) * (k.alpha - g12) / (k.alpha * k.beta);
    RowVec4 out = coords;
    out(3) -= s * pair(3);
    return out;
  }
  const bool first = loop == LoopId::Rho1;
  const Complex g = first ? k.gamma1 : k.gamma2;
  const int j = first ? 2 : 1;
  // (1 - 1/g) (H_sub)^-1 = -(1/g) * reduced inverse.
  const Mat2 inv = h_sub_inverse_reduced(p, first ? SubBlock::B13 : SubBlock::B12);
  Eigen::Matrix<Complex, 1, 2> row;
  row << pair(0), pair(j);
  const Eigen::Matrix<Complex, 1, 2> w = -(row * inv) / g;
  RowVec4 out = coords / g;
  out(0) += w(0);
  out(j) += w(1);
  return out;
}

Spectrum expected_spectrum(const HypergeometricParams& p, LoopId loop) {
  const CircuitConstants k = circuit_constants(p);
  switch (loop) {
    case LoopId::Rho1: return {1.0, 1.0, 1.0 / k.gamma1, 1.0 / k.gamma1};
    case LoopId::Rho2: return {1.0, 1.0, 1.0 / k.gamma2, 1.0 / k.gamma2};
    case LoopId::Rho3: break;
  }
  return {1.0, 1.0, 1.0, -k.gamma1 * k.gamma2 / (k.alpha * k.beta)};
}

}  // namespace f4
