#pragma once

#include <array>

#include "f4/params.hpp"
#include "f4/spectrum.hpp"
#include "f4/types.hpp"

namespace f4 {

enum class LoopId { Rho1, Rho2, Rho3 };

inline constexpr std::array<LoopId, 3> kAllLoops = {LoopId::Rho1, LoopId::Rho2, LoopId::Rho3};

const char* to_string(LoopId loop);

/// DeltaCycles/HatCycles/PrimeCycles for closed forms; LocalSeries and
/// HatSeries for matrices continued on the plain and hatted solution jets.
enum class CircuitBasis { DeltaCycles, HatCycles, PrimeCycles, LocalSeries, HatSeries };
enum class MatrixSource { ClosedForm, Continued };

const char* to_string(CircuitBasis basis);
const char* to_string(MatrixSource source);

/// Coordinates are row vectors d; the loop acts as d -> d * entries.
struct CircuitMatrix {
  Mat4 entries;
  LoopId loop;
  CircuitBasis basis;
  MatrixSource source;
};

/// Diagonal matrices for rho1, rho2 and id - k H e5dual^T e5 for rho3.
/// Throws DegenerateError when gamma1 or gamma2 is within tolerance of 1.
CircuitMatrix m_delta(const HypergeometricParams& p, LoopId loop);
CircuitMatrix m_hat(const HypergeometricParams& p, LoopId loop);
CircuitMatrix m_prime(const HypergeometricParams& p, LoopId loop);

/// The pairing formulas for the loop action on hatted coordinates.
RowVec4 apply_operator(const HypergeometricParams& p, LoopId loop, const RowVec4& coords);

/// {1,1,1/g1,1/g1}, {1,1,1/g2,1/g2}, {1,1,1,-g1 g2/(alpha beta)}.
Spectrum expected_spectrum(const HypergeometricParams& p, LoopId loop);

}  // namespace f4
