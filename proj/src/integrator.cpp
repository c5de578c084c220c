#include "evogain/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace evogain {

void validate(const IntegratorConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw std::invalid_argument("integrator: dt must be positive");
  }
  if (!(cfg.t_end >= cfg.dt)) {
    throw std::invalid_argument("integrator: t_end must be at least dt");
  }
  if (cfg.record_every < 1) {
    throw std::invalid_argument("integrator: record_every must be >= 1");
  }
  if (!(cfg.clamp_eps >= 0.0)) {
    throw std::invalid_argument("integrator: clamp_eps must be >= 0");
  }
}

const char* to_string(ConvergenceLabel label) {
  switch (label) {
    case ConvergenceLabel::X0: return "x0";
    case ConvergenceLabel::X1: return "x1";
    case ConvergenceLabel::MixedNE: return "mixed_ne";
    case ConvergenceLabel::GainConstant: return "gain_constant";
    case ConvergenceLabel::None: return "none";
  }
  return "?";
}

namespace {

// Unvalidated field evaluation for the intermediate RK stages, which may
// leave Omega transiently.
Derivative raw_field(const ControlledSystem& sys, double x, double g) {
  const PayoffMatrix& m = sys.nominal;
  const ControlMatrix& G = sys.control.matrix;
  const double bracket = (m.a + m.d - m.b - m.c) * x + (m.b - m.d) +
                         ((G.g11 - G.g21) * x + (G.g12 - G.g22) * (1.0 - x)) * g;
  double ph = 0.0;
  switch (sys.control.family) {
    case AdaptationFamily::None:
      break;
    case AdaptationFamily::Phi1:
      ph = sys.control.k * (x - sys.control.h);
      break;
    case AdaptationFamily::Phi2:
      // x may be slightly negative inside a stage; treat like the boundary.
      ph = x <= 0.0 ? 0.0
                    : sys.control.k * std::exp(sys.control.h * std::log(x));
      break;
  }
  return {x * (1.0 - x) * bracket, ph * g};
}

}  // namespace

SystemState step(const ControlledSystem& sys, const SystemState& s, double dt,
                 double* correction) {
  if (!in_domain(s)) {
    throw std::invalid_argument("step: state outside [0,1] x [0,inf)");
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("step: dt must be positive");
  }

  const Derivative k1 = raw_field(sys, s.x, s.g);
  const Derivative k2 =
      raw_field(sys, s.x + 0.5 * dt * k1.dx, s.g + 0.5 * dt * k1.dg);
  const Derivative k3 =
      raw_field(sys, s.x + 0.5 * dt * k2.dx, s.g + 0.5 * dt * k2.dg);
  const Derivative k4 = raw_field(sys, s.x + dt * k3.dx, s.g + dt * k3.dg);

  SystemState next;
  next.x = s.x + dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
  next.g = s.g + dt / 6.0 * (k1.dg + 2.0 * k2.dg + 2.0 * k3.dg + k4.dg);
  if (!std::isfinite(next.x) || !std::isfinite(next.g)) {
    throw IntegrationError("step produced non-finite values (dt too large)",
                           0.0);
  }

  double corr = 0.0;
  if (next.x < 0.0) {
    corr = std::max(corr, -next.x);
    next.x = 0.0;
  } else if (next.x > 1.0) {
    corr = std::max(corr, next.x - 1.0);
    next.x = 1.0;
  }
  if (next.g < 0.0) {
    corr = std::max(corr, -next.g);
    next.g = 0.0;
  }
  if (correction != nullptr) *correction = corr;
  return next;
}

Trajectory integrate(const ControlledSystem& sys, const SystemState& s0,
                     const IntegratorConfig& cfg) {
  validate(cfg);
  if (!in_domain(s0)) {
    throw std::invalid_argument("integrate: s0 outside [0,1] x [0,inf)");
  }

  const long n_steps = std::lround(cfg.t_end / cfg.dt);
  Trajectory traj;
  traj.times.reserve(static_cast<std::size_t>(n_steps / cfg.record_every) + 2);
  traj.states.reserve(traj.times.capacity());
  traj.times.push_back(0.0);
  traj.states.push_back(s0);

  SystemState s = s0;
  for (long i = 1; i <= n_steps; ++i) {
    double corr = 0.0;
    try {
      s = step(sys, s, cfg.dt, &corr);
    } catch (const IntegrationError&) {
      throw IntegrationError("step produced non-finite values (dt too large)",
                             static_cast<double>(i - 1) * cfg.dt);
    }
    traj.max_projection = std::max(traj.max_projection, corr);
    if (s.g > kGainOverflowLimit) {
      throw IntegrationError("gain overflow (g > 1e12), run diverges",
                             static_cast<double>(i) * cfg.dt);
    }
    if (i % cfg.record_every == 0 || i == n_steps) {
      traj.times.push_back(static_cast<double>(i) * cfg.dt);
      traj.states.push_back(s);
    }
  }
  return traj;
}

}  // namespace evogain
