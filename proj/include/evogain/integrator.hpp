#ifndef EVOGAIN_INTEGRATOR_HPP
#define EVOGAIN_INTEGRATOR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "evogain/dynamics.hpp"

namespace evogain {

/// Fixed-step integration settings.  The step is fixed (rather than
/// adaptive) so that sweep results are reproducible bit-for-bit.
struct IntegratorConfig {
  double dt = 1e-3;        // step size
  double t_end = 0.0;      // final time, >= dt
  int record_every = 100;  // store every n-th step
  double clamp_eps = 1e-12;  // projection magnitude regarded as float drift
};

void validate(const IntegratorConfig& cfg);

enum class ConvergenceLabel { X0, X1, MixedNE, GainConstant, None };

const char* to_string(ConvergenceLabel label);

/// Time-stamped trajectory of the controlled system.  Every stored state
/// lies in Omega; times are strictly increasing and start at 0.
struct Trajectory {
  std::vector<double> times;
  std::vector<SystemState> states;
  std::optional<ConvergenceLabel> converged_to;  // assigned by analysis
  double max_projection = 0.0;  // largest post-step domain correction seen

  const SystemState& terminal() const { return states.back(); }
  std::size_t size() const { return times.size(); }
};

/// Raised when a step produces non-finite values (step size too large for
/// the local dynamics) or the gain passes the overflow guard.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t)
      : std::runtime_error(what + " at t=" + std::to_string(t)), t_(t) {}
  double time() const { return t_; }

 private:
  double t_;
};

/// Runs diverging outside the proven parameter regimes are cut off here
/// rather than left to overflow.
inline constexpr double kGainOverflowLimit = 1e12;

/// One classical fourth-order Runge-Kutta step followed by projection of
/// the result onto Omega (x clamped to [0,1], g to [0,inf)).  The
/// projection absorbs floating-point drift at the boundary; the magnitude
/// applied is reported through `correction` when non-null.
SystemState step(const ControlledSystem& sys, const SystemState& s, double dt,
                 double* correction = nullptr);

/// Integrates from s0 over [0, t_end], recording every record_every-th step
/// (the initial and final states are always recorded).
Trajectory integrate(const ControlledSystem& sys, const SystemState& s0,
                     const IntegratorConfig& cfg);

}  // namespace evogain

#endif  // EVOGAIN_INTEGRATOR_HPP
