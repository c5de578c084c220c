#ifndef EVOGAIN_ABM_HPP
#define EVOGAIN_ABM_HPP

#include <cstdint>
#include <vector>

#include "evogain/integrator.hpp"

namespace evogain {

/// Finite-population imitation process used as an independent check on the
/// mean-field ODE.  rate_scale normalizes payoff differences into copy
/// probabilities and must bound every payoff difference the run can see.
struct AbmConfig {
  int population = 10000;
  std::uint64_t seed = 0;
  double rate_scale = 0.0;  // <= 0: derive from the nominal payoff gaps
};

/// Largest payoff difference |r1 - r2| the uncontrolled game attains on
/// x in [0,1] (the rewards are affine in x, so it occurs at an endpoint).
double payoff_difference_bound(const PayoffMatrix& m);

/// Simulates pairwise imitation: at exponential event times a random focal
/// agent observes a random model agent and copies its action with
/// probability max(0, r_model - r_focal) / rate_scale, rewards taken from
/// the effective payoff at the current empirical state.  The gain is
/// co-evolved deterministically from the empirical share (the controller
/// observes the macroscopic state, not individual agents).  Event times are
/// drawn at rate N * rate_scale so that recorded times are directly
/// comparable with the ODE (this absorbs the 1/rate_scale slowdown of the
/// normalized copy probabilities).  Deterministic for a fixed seed.
Trajectory simulate_abm(const ControlledSystem& sys, double x0,
                        const AbmConfig& cfg, double t_end,
                        double record_dt = 0.01);

struct DeviationReport {
  double sup_deviation = 0.0;
  std::vector<double> times;
  std::vector<double> abm_x;
  std::vector<double> ode_x;
};

/// Runs the imitation process and the ODE from the same initial share
/// (rounded to the agent grid) and reports the per-time and worst-case
/// deviation of the empirical share from the mean-field solution.
DeviationReport compare_to_ode(const ControlledSystem& sys, double x0,
                               const AbmConfig& cfg, double t_end);

}  // namespace evogain

#endif  // EVOGAIN_ABM_HPP
