#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "f4/monodromy.hpp"
#include "f4/params.hpp"
#include "f4/report.hpp"
#include "f4/series.hpp"
#include "f4/types.hpp"

namespace f4 {

/// dF = (A1 dx1 + A2 dx2) F for the jet F = (f, d1 f, d2 f, d1 d2 f).
struct ConnectionMatrices {
  Mat4 A1;
  Mat4 A2;
};

/// Rank-4 connection obtained from the two second-order operators. Immutable
/// and shareable between threads.
class ConnectionEvaluator {
 public:
  explicit ConnectionEvaluator(const HypergeometricParams& p);

  const HypergeometricParams& parameters() const { return p_; }

  /// Throws SingularLocusError on x1 x2 (1 - x1 - x2) = 0 and DegenerateError
  /// where the mixed third-derivative solve is singular.
  ConnectionMatrices evaluate(const Point2& x) const;

 private:
  HypergeometricParams p_;
};

ConnectionEvaluator build_connection(const HypergeometricParams& p);

/// Base point of the three loops.
inline const Point2 kBasePoint{0.125, 0.125};

Point2 loop_path(LoopId loop, double theta);
/// d/dtheta of loop_path.
Point2 loop_velocity(LoopId loop, double theta);

/// min of |x1|, |x2|, |1 - x1 - x2|, |R(x)| over `samples` equally spaced
/// parameter values.
double path_margin(LoopId loop, int samples = 1024);

struct IntegratorSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  long max_steps = 200000;
};

struct IntegratorStats {
  long accepted = 0;
  long rejected = 0;
  long evaluations = 0;
  double min_step = 0.0;
};

enum class SeedBasis { Local, Hat };

struct ContinuationOptions {
  IntegratorSettings integrator;
  SeedBasis seed = SeedBasis::Local;
  double series_tol = 1e-14;
  double max_seed_condition = 1e10;
  /// Alternate diagonal base point used when re-seeding.
  double reseed_t = 0.1;
  bool force_reseed = false;
  double min_path_margin = 1e-3;
};

struct ContinuationResult {
  CircuitMatrix matrix;
  IntegratorStats stats;
  Mat4 phi0;
  Mat4 phi1;
  double seed_condition = 0.0;
  double path_margin = 0.0;
  bool reseeded = false;
};

/// Integrates dPhi/dtheta = (A1 x1' + A2 x2') Phi from theta = 0 to 1.
Mat4 transport(const ConnectionEvaluator& conn, const Mat4& phi,
               const std::function<Point2(double)>& path,
               const std::function<Point2(double)>& velocity,
               const IntegratorSettings& settings, IntegratorStats& stats);

/// Circuit matrix of `loop` in the row convention of the monodromy module:
/// the continued solution vector equals entries times the original one.
ContinuationResult continue_fundamental(const HypergeometricParams& p, LoopId loop,
                                        const ContinuationOptions& opts = {});

/// Largest relative mismatch between A_k F and central differences of the
/// series jets, over `points` random points (h = 1e-5).
double validate_connection(const HypergeometricParams& p, int points = 5,
                           std::uint64_t seed = 7);

/// Hard limit for validate_connection before any loop is integrated.
inline constexpr double kConnectionAbort = 1e-5;

/// Continued matrix against the closed forms for one loop. Spectrum,
/// characteristic polynomial and determinant use `tol`; the full matrix after
/// the cycle-constant conjugation uses 10 * tol.
VerificationReport verify_monodromy(const HypergeometricParams& p, LoopId loop, double tol,
                                    const ContinuationOptions& opts = {});

/// The three loops concurrently (OpenMP); results in loop order.
std::vector<VerificationReport> verify_all_loops(const HypergeometricParams& p, double tol,
                                                 const ContinuationOptions& opts = {});
/// Serial reference for verify_all_loops.
std::vector<VerificationReport> verify_all_loops_serial(const HypergeometricParams& p, double tol,
                                                        const ContinuationOptions& opts = {});

/// Diagonal constants linking the plain local basis to the f-vector.
Mat4 cycle_constant_matrix(const HypergeometricParams& p);

}  // namespace f4
