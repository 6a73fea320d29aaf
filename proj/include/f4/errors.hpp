#pragma once

#include <stdexcept>
#include <string>

namespace f4 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define F4_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return #Name; }   \
  };

/// Point outside the (margin-shrunk) convergence set.
F4_DEFINE_ERROR(DomainError)
/// Series parameter in the excluded set, e.g. c in -N.
F4_DEFINE_ERROR(ParameterError)
/// Truncation order cap reached before the tail bound met its target.
F4_DEFINE_ERROR(ConvergenceError)
/// Gamma function evaluated at (or too close to) a pole.
F4_DEFINE_ERROR(PoleError)
/// Coordinate on the branch cut of the principal power.
F4_DEFINE_ERROR(BranchError)
/// A closed-form denominator vanished (non-generic parameters).
F4_DEFINE_ERROR(DegenerateError)
/// Point on R(x) = 0.
F4_DEFINE_ERROR(SingularLocusError)
/// Adaptive integrator step underflow or step budget exhausted.
F4_DEFINE_ERROR(IntegrationError)
/// Continuation path came too close to the singular locus.
F4_DEFINE_ERROR(SingularApproachError)

#undef F4_DEFINE_ERROR

}  // namespace f4
