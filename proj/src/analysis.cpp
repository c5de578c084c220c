#include "evogain/analysis.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace evogain {

void validate(const ConvergenceCriteria& crit) {
  if (!(crit.x_tol > 0.0) || !(crit.g_tol > 0.0) || !(crit.dg_tol > 0.0) ||
      !(crit.window > 0.0)) {
    throw std::invalid_argument("convergence criteria must be positive");
  }
}

namespace {

// Pointwise predicate for a convergence target.
bool satisfies(const ControlledSystem& sys, const ConvergenceCriteria& crit,
               ConvergenceTarget target, const SystemState& s,
               double mixed) {
  switch (target) {
    case ConvergenceTarget::X0:
      return std::abs(s.x) < crit.x_tol;
    case ConvergenceTarget::X1:
      return std::abs(1.0 - s.x) < crit.x_tol;
    case ConvergenceTarget::MixedNE:
      return std::abs(s.x - mixed) < crit.x_tol;
    case ConvergenceTarget::GainConstant:
      return std::abs(phi(sys.control, s.x) * s.g) < crit.dg_tol;
    case ConvergenceTarget::X0GainZero:
      return std::abs(s.x) < crit.x_tol && s.g < crit.g_tol;
    case ConvergenceTarget::X0GainConstant:
      return std::abs(s.x) < crit.x_tol &&
             std::abs(phi(sys.control, s.x) * s.g) < crit.dg_tol;
  }
  return false;
}

}  // namespace

ConvergenceResult detect_convergence(const ControlledSystem& sys,
                                     const Trajectory& traj,
                                     const ConvergenceCriteria& crit,
                                     ConvergenceTarget target) {
  validate(crit);
  if (traj.times.empty()) {
    throw std::invalid_argument("detect_convergence: empty trajectory");
  }
  double mixed = 0.0;
  if (target == ConvergenceTarget::MixedNE) {
    if (!sys.game.mixed_ne) {
      throw std::invalid_argument(
          "detect_convergence: game has no interior equilibrium");
    }
    mixed = *sys.game.mixed_ne;
  }

  const std::size_t n = traj.size();
  std::ptrdiff_t last_bad = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!satisfies(sys, crit, target, traj.states[i], mixed)) {
      last_bad = static_cast<std::ptrdiff_t>(i);
    }
  }

  ConvergenceResult out;
  const double t_end = traj.times.back();
  if (last_bad < 0) {
    out.converged = true;
    out.t_settle = traj.times.front();
    return out;
  }
  const std::size_t bad = static_cast<std::size_t>(last_bad);
  out.t_settle = bad + 1 < n ? traj.times[bad + 1] : std::nan("");
  out.converged = traj.times[bad] < t_end - crit.window;
  if (!out.converged) {
    std::ostringstream msg;
    msg << "criterion violated at t=" << traj.times[bad] << " (x="
        << traj.states[bad].x << ", g=" << traj.states[bad].g << ")";
    out.diagnostic = msg.str();
  }
  return out;
}

ConvergenceLabel classify_limit(const ControlledSystem& sys,
                                const Trajectory& traj,
                                const ConvergenceCriteria& crit) {
  if (detect_convergence(sys, traj, crit, ConvergenceTarget::X0).converged) {
    return ConvergenceLabel::X0;
  }
  if (detect_convergence(sys, traj, crit, ConvergenceTarget::X1).converged) {
    return ConvergenceLabel::X1;
  }
  if (sys.game.mixed_ne &&
      detect_convergence(sys, traj, crit, ConvergenceTarget::MixedNE)
          .converged) {
    return ConvergenceLabel::MixedNE;
  }
  if (detect_convergence(sys, traj, crit, ConvergenceTarget::GainConstant)
          .converged) {
    return ConvergenceLabel::GainConstant;
  }
  return ConvergenceLabel::None;
}

Region region_of(const SystemState& s, const GameClass& game) {
  if (game.variant != GameVariant::Coordination) {
    throw std::domain_error("region_of: defined for coordination games only");
  }
  const double xs = *game.mixed_ne;
  if (s.x < xs) return Region::A;
  if (s.x < 1.0) return Region::B;
  return Region::C;
}

double thm1_growth_exponent(const GameClass& game,
                            const ControllerSpec& spec) {
  if (game.variant != GameVariant::Coordination) {
    throw std::domain_error("thm1_growth_exponent: coordination games only");
  }
  return spec.k * (*game.mixed_ne - spec.h);
}

EscapeCheck check_thm1_escape(const ControlledSystem& sys,
                              const Trajectory& traj) {
  const ValidityVerdict verdict = check_validity(sys.game, sys.control);
  if (verdict.theorem != Theorem::Thm1 || !verdict.satisfied) {
    throw std::invalid_argument("check_thm1_escape: " + verdict.detail);
  }
  if (traj.times.empty()) {
    throw std::invalid_argument("check_thm1_escape: empty trajectory");
  }
  if (region_of(traj.states.front(), sys.game) != Region::B) {
    throw std::invalid_argument(
        "check_thm1_escape: trajectory must start in region B");
  }

  const double mu = thm1_growth_exponent(sys.game, sys.control);
  const double g0 = traj.states.front().g;
  const double xs = *sys.game.mixed_ne;
  const std::size_t n = traj.size();

  EscapeCheck out;
  std::size_t exit = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (traj.states[i].x < xs) {
      exit = i;
      break;
    }
    // Still at or above x*: the gain must dominate its exponential bound.
    const double bound = g0 * std::exp(mu * traj.times[i]) * (1.0 - 1e-6);
    if (traj.states[i].g < bound) {
      std::ostringstream msg;
      msg << "gain bound violated at t=" << traj.times[i] << ": g="
          << traj.states[i].g << " < " << bound;
      out.detail = msg.str();
      return out;
    }
  }
  if (exit == n) {
    out.detail = "trajectory never left region B";
    return out;
  }
  for (std::size_t i = exit + 1; i < n; ++i) {
    if (traj.states[i].x >= xs) {
      std::ostringstream msg;
      msg << "re-entered region B at t=" << traj.times[i];
      out.detail = msg.str();
      return out;
    }
  }
  out.ok = true;
  out.exit_time = traj.times[exit];
  return out;
}

Thm2BoundCheck check_thm2_bound(const ControlledSystem& sys,
                                const Trajectory& traj, double eps,
                                double gamma) {
  const ValidityVerdict verdict = check_validity(sys.game, sys.control);
  if (verdict.theorem != Theorem::Thm2 || !verdict.satisfied) {
    throw std::invalid_argument("check_thm2_bound: " + verdict.detail);
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("check_thm2_bound: eps must lie in (0,1)");
  }
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("check_thm2_bound: gamma must be positive");
  }
  if (traj.times.empty()) {
    throw std::invalid_argument("check_thm2_bound: empty trajectory");
  }

  Thm2BoundCheck out;
  out.gain_threshold = sys.game.alpha / eps + sys.game.beta + gamma;

  const std::size_t n = traj.size();
  std::size_t tau = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (traj.states[i].x <= 1.0 - eps &&
        traj.states[i].g >= out.gain_threshold) {
      tau = i;
      break;
    }
  }
  if (tau == n) {
    std::ostringstream msg;
    msg << "tau_eps not reached: no recorded point with x <= " << 1.0 - eps
        << " and g >= " << out.gain_threshold;
    out.detail = msg.str();
    return out;
  }
  out.tau_eps = traj.times[tau];

  const double rate = gamma * eps * eps;
  for (std::size_t i = tau; i < n; ++i) {
    const double bound = (1.0 - eps) *
                         std::exp(-rate * (traj.times[i] - out.tau_eps)) *
                         (1.0 + 1e-6);
    if (traj.states[i].x > bound) {
      std::ostringstream msg;
      msg << "decay bound violated at t=" << traj.times[i] << ": x="
          << traj.states[i].x << " > " << bound;
      out.detail = msg.str();
      return out;
    }
  }
  out.ok = true;
  return out;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Prop2: return "prop2";
    case Suite::Thm1: return "thm1";
    case Suite::Thm2: return "thm2";
    case Suite::Thm3: return "thm3";
  }
  return "?";
}

namespace {

// Canonical payoff matrices with the given payoff gaps.
PayoffMatrix coordination_payoff(double alpha, double beta) {
  return {alpha, 0.0, 0.0, beta};
}
PayoffMatrix dominant1_payoff(double alpha, double beta) {
  return {alpha, beta, 0.0, 0.0};
}
PayoffMatrix dominant2_payoff(double alpha, double beta) {
  return {0.0, 0.0, alpha, beta};
}
PayoffMatrix anti_payoff(double alpha, double beta) {
  return {0.0, beta, alpha, 0.0};
}

std::string describe(const char* game, double alpha, double beta,
                     const ControllerSpec& c, double x0) {
  std::ostringstream s;
  s << game << " alpha=" << alpha << " beta=" << beta;
  if (c.family != AdaptationFamily::None) {
    s << " " << to_string(c.family) << " k=" << c.k << " h=" << c.h
      << " g0=" << c.g0;
  }
  s << " x0=" << x0;
  return s.str();
}

}  // namespace

SuiteConfig default_suite_config(Suite suite) {
  SuiteConfig cfg;
  const std::vector<double> x0_grid = {0.1, 0.2, 0.3, 0.4, 0.5,
                                       0.6, 0.7, 0.8, 0.9};

  switch (suite) {
    case Suite::Prop2: {
      cfg.integ = {1e-3, 50.0, 100, 1e-12};
      const std::vector<double> gaps = {0.5, 1.0, 2.0};
      for (double alpha : gaps) {
        for (double beta : gaps) {
          const double xs = beta / (alpha + beta);
          for (double x0 : x0_grid) {
            if (std::abs(x0 - xs) > 1e-9) {
              cfg.cases.push_back({coordination_payoff(alpha, beta),
                                   ControllerSpec::none(), x0,
                                   x0 < xs ? ConvergenceTarget::X0
                                           : ConvergenceTarget::X1,
                                   describe("coordination", alpha, beta,
                                            ControllerSpec::none(), x0)});
            }
            cfg.cases.push_back({dominant1_payoff(alpha, beta),
                                 ControllerSpec::none(), x0,
                                 ConvergenceTarget::X1,
                                 describe("dominant1", alpha, beta,
                                          ControllerSpec::none(), x0)});
            cfg.cases.push_back({dominant2_payoff(alpha, beta),
                                 ControllerSpec::none(), x0,
                                 ConvergenceTarget::X0,
                                 describe("dominant2", alpha, beta,
                                          ControllerSpec::none(), x0)});
            cfg.cases.push_back({anti_payoff(alpha, beta),
                                 ControllerSpec::none(), x0,
                                 ConvergenceTarget::MixedNE,
                                 describe("anti", alpha, beta,
                                          ControllerSpec::none(), x0)});
          }
        }
      }
      break;
    }
    case Suite::Thm1: {
      cfg.integ = {1e-3, 200.0, 100, 1e-12};
      std::vector<double> x0s = x0_grid;
      x0s.push_back(0.99);
      for (double k : {0.5, 1.0, 2.0}) {
        for (double h : {0.1, 0.25, 0.4}) {
          for (double g0 : {0.1, 1.0}) {
            for (double x0 : x0s) {
              ControllerSpec c{ControlMatrix::g1(), AdaptationFamily::Phi1, k,
                               h, g0};
              cfg.cases.push_back({coordination_payoff(1.0, 1.0), c, x0,
                                   ConvergenceTarget::X0GainZero,
                                   describe("coordination", 1.0, 1.0, c, x0)});
            }
          }
        }
      }
      break;
    }
    case Suite::Thm2: {
      cfg.integ = {1e-3, 60.0, 100, 1e-12};
      const std::vector<std::pair<double, double>> gaps = {
          {1.0, 1.0}, {0.5, 1.0}, {1.0, 0.5}};
      for (const auto& [alpha, beta] : gaps) {
        for (double kf : {2.0, 3.0, 5.0}) {
          for (double h : {0.5, 1.0, 2.0}) {
            for (double x0 : {0.2, 0.5, 0.8}) {
              ControllerSpec c{ControlMatrix::g2(), AdaptationFamily::Phi2,
                               kf * alpha, h, 0.2};
              cfg.cases.push_back({dominant1_payoff(alpha, beta), c, x0,
                                   ConvergenceTarget::X0GainConstant,
                                   describe("dominant1", alpha, beta, c, x0)});
            }
          }
        }
      }
      break;
    }
    case Suite::Thm3: {
      cfg.integ = {1e-3, 400.0, 100, 1e-12};
      std::vector<double> x0s = x0_grid;
      x0s.push_back(0.99);
      for (double k : {0.05, 0.1, 1.0}) {
        for (double x0 : x0s) {
          ControllerSpec c{ControlMatrix::g2(), AdaptationFamily::Phi2, k, 1.0,
                           0.1};
          cfg.cases.push_back({anti_payoff(1.0, 1.0), c, x0,
                               ConvergenceTarget::X0GainConstant,
                               describe("anti", 1.0, 1.0, c, x0)});
        }
      }
      break;
    }
  }
  return cfg;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EVOGAIN_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

SuiteReport run_suite(Suite suite, const SuiteConfig& config, int workers) {
  validate(config.criteria);
  if (config.cases.empty()) {
    throw std::invalid_argument("run_suite: empty grid");
  }

  struct CaseResult {
    bool passed = false;
    SystemState terminal;
    std::string violated;
  };
  const std::size_t n = config.cases.size();
  std::vector<CaseResult> results(n);

  auto run_case = [&](std::size_t i) {
    const SuiteCase& sc = config.cases[i];
    CaseResult& r = results[i];
    try {
      const ControlledSystem sys = make_system(sc.payoff, sc.control);
      const SystemState s0{sc.x0, sc.control.g0};
      const Trajectory traj = integrate(sys, s0, config.integ);
      r.terminal = traj.terminal();
      const ConvergenceResult conv =
          detect_convergence(sys, traj, config.criteria, sc.target);
      r.passed = conv.converged;
      if (!conv.converged) r.violated = conv.diagnostic;
    } catch (const std::exception& e) {
      r.passed = false;
      r.violated = std::string("error: ") + e.what();
    }
  };

  const int nworkers = std::min<int>(resolve_workers(workers),
                                     static_cast<int>(n));
  if (nworkers <= 1) {
    for (std::size_t i = 0; i < n; ++i) run_case(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nworkers));
    for (int w = 0; w < nworkers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
          run_case(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  SuiteReport report;
  report.suite = suite;
  report.cases_total = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (results[i].passed) {
      ++report.cases_passed;
    } else {
      report.failures.push_back({config.cases[i].params, results[i].terminal,
                                 results[i].violated});
    }
  }
  return report;
}

std::vector<BasinSample> basin_sample(const ControlledSystem& sys, int n,
                                      std::uint64_t seed, double t_end) {
  if (n <= 0) {
    throw std::invalid_argument("basin_sample: n must be positive");
  }
  std::mt19937_64 rng(seed);
  const auto u01 = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  const IntegratorConfig integ{1e-3, t_end, 100, 1e-12};
  const ConvergenceCriteria crit;

  std::vector<BasinSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    SystemState s0;
    s0.x = u01();                 // in [0,1)
    s0.g = 0.05 + 1.95 * u01();   // away from the g=0 invariant line
    ConvergenceLabel label = ConvergenceLabel::None;
    try {
      const Trajectory traj = integrate(sys, s0, integ);
      label = classify_limit(sys, traj, crit);
    } catch (const IntegrationError&) {
      label = ConvergenceLabel::None;  // diverging gain: no limit reached
    }
    out.push_back({s0, label});
  }
  return out;
}

}  // namespace evogain
