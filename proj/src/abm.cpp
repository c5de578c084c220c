#include "evogain/abm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace evogain {

double payoff_difference_bound(const PayoffMatrix& m) {
  return std::max(std::abs(m.b - m.d), std::abs(m.a - m.c));
}

namespace {

double resolve_rate_scale(const ControlledSystem& sys, const AbmConfig& cfg) {
  if (cfg.rate_scale > 0.0) return cfg.rate_scale;
  const double bound = payoff_difference_bound(sys.nominal);
  if (bound <= 0.0) {
    throw std::invalid_argument(
        "abm: rate_scale required for a game with no payoff differences");
  }
  return bound;
}

}  // namespace

Trajectory simulate_abm(const ControlledSystem& sys, double x0,
                        const AbmConfig& cfg, double t_end,
                        double record_dt) {
  if (cfg.population < 2) {
    throw std::invalid_argument("abm: population must be at least 2");
  }
  if (!(x0 >= 0.0 && x0 <= 1.0)) {
    throw std::invalid_argument("abm: x0 must lie in [0,1]");
  }
  if (!(t_end > 0.0) || !(record_dt > 0.0)) {
    throw std::invalid_argument("abm: t_end and record_dt must be positive");
  }
  const double rate_scale = resolve_rate_scale(sys, cfg);
  const int N = cfg.population;

  std::mt19937_64 rng(cfg.seed);
  const auto u01 = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  long n1 = std::lround(x0 * N);
  double g = sys.control.g0;
  double t = 0.0;

  Trajectory traj;
  const long n_rec = std::lround(t_end / record_dt);
  traj.times.reserve(static_cast<std::size_t>(n_rec) + 1);
  traj.states.reserve(static_cast<std::size_t>(n_rec) + 1);
  traj.times.push_back(0.0);
  traj.states.push_back({static_cast<double>(n1) / N, g});
  long next_rec = 1;

  const double event_rate = static_cast<double>(N) * rate_scale;
  while (t < t_end) {
    const double x = static_cast<double>(n1) / N;
    const double rate = phi(sys.control, x);
    const double dt = -std::log(1.0 - u01()) / event_rate;
    const double t_next = t + dt;

    // Between events the share is constant, so the gain ODE integrates
    // exactly; emit any grid points the jump passes over.
    while (next_rec <= n_rec &&
           static_cast<double>(next_rec) * record_dt <= t_next) {
      const double tr = static_cast<double>(next_rec) * record_dt;
      traj.times.push_back(tr);
      traj.states.push_back({x, g * std::exp(rate * (tr - t))});
      ++next_rec;
    }
    if (t_next >= t_end) break;
    g *= std::exp(rate * dt);
    t = t_next;

    const long focal = static_cast<long>(rng() % static_cast<std::uint64_t>(N));
    const long model = static_cast<long>(rng() % static_cast<std::uint64_t>(N));
    const bool focal_1 = focal < n1;
    const bool model_1 = model < n1;
    if (focal_1 == model_1) continue;

    const PayoffMatrix eff = effective_payoff(sys.nominal, sys.control, g);
    const RewardPair r = reward_vector(x, eff);
    const double diff = focal_1 ? r.r2 - r.r1 : r.r1 - r.r2;
    if (diff <= 0.0) continue;
    const double p = diff / rate_scale;
    if (p > 1.0 + 1e-12) {
      throw std::invalid_argument(
          "abm: rate_scale below the running payoff difference " +
          std::to_string(diff));
    }
    if (u01() < p) n1 += focal_1 ? -1 : 1;
  }
  return traj;
}

DeviationReport compare_to_ode(const ControlledSystem& sys, double x0,
                               const AbmConfig& cfg, double t_end) {
  const double record_dt = 0.01;
  const Trajectory abm = simulate_abm(sys, x0, cfg, t_end, record_dt);

  // The ODE starts from the same agent-grid share so that the deterministic
  // boundary cases match exactly.
  const double x0_grid =
      static_cast<double>(std::lround(x0 * cfg.population)) / cfg.population;
  IntegratorConfig integ;
  integ.dt = 1e-3;
  integ.t_end = t_end;
  integ.record_every = std::max(1, static_cast<int>(std::lround(record_dt / integ.dt)));
  const Trajectory ode =
      integrate(sys, {x0_grid, sys.control.g0}, integ);

  DeviationReport report;
  const std::size_t n = std::min(abm.size(), ode.size());
  report.times.reserve(n);
  report.abm_x.reserve(n);
  report.ode_x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.times.push_back(abm.times[i]);
    report.abm_x.push_back(abm.states[i].x);
    report.ode_x.push_back(ode.states[i].x);
    report.sup_deviation = std::max(
        report.sup_deviation, std::abs(abm.states[i].x - ode.states[i].x));
  }
  return report;
}

}  // namespace evogain
