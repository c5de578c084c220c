#ifndef EVOGAIN_ANALYSIS_HPP
#define EVOGAIN_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evogain/integrator.hpp"

namespace evogain {

/// Tolerances used to decide that a trajectory has reached its limit.
/// The g_tol applies to vanishing-gain claims, dg_tol to settling-gain
/// claims (it bounds |phi(x) g|, the instantaneous gain velocity); every
/// criterion must hold over the trailing `window` time units.
struct ConvergenceCriteria {
  double x_tol = 1e-3;
  double g_tol = 0.05;
  double dg_tol = 1e-6;
  double window = 5.0;
};

void validate(const ConvergenceCriteria& crit);

enum class ConvergenceTarget {
  X0,              // x -> 0
  X1,              // x -> 1
  MixedNE,         // x -> interior equilibrium
  GainConstant,    // |phi(x) g| below dg_tol
  X0GainZero,      // x -> 0 and g -> 0 (transient control)
  X0GainConstant,  // x -> 0 and gain velocity vanishes (persistent control)
};

struct ConvergenceResult {
  bool converged = false;
  double t_settle = 0.0;  // first time after which the criterion held; NaN if never
  std::string diagnostic;
};

/// Checks the target criterion at every recorded point of the trailing
/// window; on failure the diagnostic reports the last violation.
ConvergenceResult detect_convergence(const ControlledSystem& sys,
                                     const Trajectory& traj,
                                     const ConvergenceCriteria& crit,
                                     ConvergenceTarget target);

/// Assigns the trajectory limit label (X0, X1, MixedNE, GainConstant or
/// None, checked in that order).
ConvergenceLabel classify_limit(const ControlledSystem& sys,
                                const Trajectory& traj,
                                const ConvergenceCriteria& crit);

/// Phase-space partition used by the coordination-game escape argument:
/// A = [0, x*) x R+,  B = [x*, 1) x R+,  C = {1} x R+.
enum class Region { A, B, C };

Region region_of(const SystemState& s, const GameClass& game);

/// Growth exponent mu = k (beta/(alpha+beta) - h) of the gain while the
/// trajectory stays in region B; positive under the thm1 conditions.
double thm1_growth_exponent(const GameClass& game, const ControllerSpec& spec);

struct EscapeCheck {
  bool ok = false;
  double exit_time = 0.0;  // first recorded time in region A
  std::string detail;
};

/// Certifies the escape-from-B argument on a recorded trajectory of a
/// thm1-valid system started in B: (i) the trajectory reaches A in finite
/// time and never returns to B, and (ii) until the exit the gain dominates
/// its exponential lower bound g(0) e^(mu t) pointwise (up to 1e-6 slack).
EscapeCheck check_thm1_escape(const ControlledSystem& sys,
                              const Trajectory& traj);

struct Thm2BoundCheck {
  bool ok = false;
  double tau_eps = 0.0;         // first time x <= 1-eps with g over threshold
  double gain_threshold = 0.0;  // alpha/eps + beta + gamma
  std::string detail;
};

/// Certifies the exponential decay bound of the dominant-strategy argument:
/// once x(tau) <= 1-eps and g(tau) >= alpha/eps + beta + gamma, every later
/// recorded point obeys x(t) <= (1-eps) e^(-gamma eps^2 (t-tau)).
Thm2BoundCheck check_thm2_bound(const ControlledSystem& sys,
                                const Trajectory& traj, double eps,
                                double gamma);

enum class Suite { Prop2, Thm1, Thm2, Thm3 };

const char* to_string(Suite s);

struct SuiteCase {
  PayoffMatrix payoff;
  ControllerSpec control;
  double x0 = 0.0;
  ConvergenceTarget target = ConvergenceTarget::X0;
  std::string params;
};

struct SuiteFailure {
  std::string params;
  SystemState terminal;
  std::string violated;
};

struct SuiteReport {
  Suite suite = Suite::Prop2;
  int cases_total = 0;
  int cases_passed = 0;
  std::vector<SuiteFailure> failures;
};

struct SuiteConfig {
  std::vector<SuiteCase> cases;
  IntegratorConfig integ;
  ConvergenceCriteria criteria;
};

/// Deterministic default grids:
///   Prop2: uncontrolled limits for all four strict game classes over
///          (alpha,beta) in {0.5,1,2}^2 and x0 in {0.1..0.9};
///   Thm1:  alpha=beta=1, k in {0.5,1,2}, h in {0.1,0.25,0.4},
///          x0 in {0.1..0.9,0.99}, g0 in {0.1,1};
///   Thm2:  (alpha,beta) in {(1,1),(0.5,1),(1,0.5)}, k in {2,3,5} alpha,
///          h in {0.5,1,2}, x0 in {0.2,0.5,0.8};
///   Thm3:  alpha=beta=1, k in {0.05,0.1,1}, h=1, x0 in {0.1..0.9,0.99}.
/// Initial conditions x0 = 1 are excluded (the guarantees assume x(0) < 1).
SuiteConfig default_suite_config(Suite suite);

/// Runs every case of the grid and aggregates pass/fail counts; failures
/// carry the offending parameters and terminal state.  Cases execute on
/// `workers` threads (0 = resolve from EVOGAIN_WORKERS, then hardware).
SuiteReport run_suite(Suite suite, const SuiteConfig& config, int workers = 0);

int resolve_workers(int requested);

struct BasinSample {
  SystemState initial;
  ConvergenceLabel label = ConvergenceLabel::None;
};

/// Labels n random initial conditions by their trajectory limit.
/// Deterministic for a fixed seed.
std::vector<BasinSample> basin_sample(const ControlledSystem& sys, int n,
                                      std::uint64_t seed,
                                      double t_end = 200.0);

}  // namespace evogain

#endif  // EVOGAIN_ANALYSIS_HPP
