// Command-line front door: classify games, run single simulations and
// parameter sweeps, and run the numerical verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 numerical failure (non-finite step or gain overflow).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evogain/abm.hpp"
#include "evogain/analysis.hpp"
#include "evogain/csv.hpp"
#include "evogain/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace evogain;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct ExperimentOptions {
  std::vector<double> payoff;  // a b c d
  std::string controller = "none";  // none | g1 | g2 | custom
  std::vector<int> gmatrix;         // custom control matrix entries
  std::string family = "none";      // none | phi1 | phi2
  double k = 1.0;
  double h = 0.5;
  double g0 = 0.1;
  double x0 = 0.5;
  double dt = 1e-3;
  double t_end = 50.0;
  int record_every = 100;
  std::string out_dir = "out";
  std::vector<std::string> formats = {"csv"};
};

void add_experiment_options(CLI::App* cmd, ExperimentOptions& opt) {
  cmd->add_option("--payoff", opt.payoff,
                  "payoff entries a b c d (row-major)")
      ->expected(4);
  cmd->add_option("--controller", opt.controller,
                  "control matrix: none, g1, g2 or custom")
      ->check(CLI::IsMember({"none", "g1", "g2", "custom"}));
  cmd->add_option("--gmatrix", opt.gmatrix,
                  "custom control matrix entries g11 g12 g21 g22 (0/1)")
      ->expected(4);
  cmd->add_option("--family", opt.family, "adaptation family: none, phi1, phi2")
      ->check(CLI::IsMember({"none", "phi1", "phi2"}));
  cmd->add_option("--k", opt.k, "adaptation rate k > 0");
  cmd->add_option("--h", opt.h, "phi1 decay threshold / phi2 exponent, > 0");
  cmd->add_option("--g0", opt.g0, "initial gain g(0) > 0");
  cmd->add_option("--x0", opt.x0, "initial share of action 1, in [0,1]");
  cmd->add_option("--dt", opt.dt, "integration step");
  cmd->add_option("--t-end", opt.t_end, "final time");
  cmd->add_option("--record-every", opt.record_every,
                  "store every n-th integration step");
  cmd->add_option("--out", opt.out_dir, "output directory");
  cmd->add_option("--formats", opt.formats, "outputs to write: csv, svg")
      ->delimiter(',');
}

ControllerSpec build_controller(const ExperimentOptions& opt) {
  ControllerSpec spec;
  if (opt.controller == "g1") {
    spec.matrix = ControlMatrix::g1();
  } else if (opt.controller == "g2") {
    spec.matrix = ControlMatrix::g2();
  } else if (opt.controller == "custom") {
    if (opt.gmatrix.size() != 4) {
      throw std::invalid_argument("--controller custom requires --gmatrix");
    }
    spec.matrix = {opt.gmatrix[0], opt.gmatrix[1], opt.gmatrix[2],
                   opt.gmatrix[3]};
  }
  if (opt.family == "phi1") {
    spec.family = AdaptationFamily::Phi1;
  } else if (opt.family == "phi2") {
    spec.family = AdaptationFamily::Phi2;
  }
  if (spec.family != AdaptationFamily::None) {
    spec.k = opt.k;
    spec.h = opt.h;
    spec.g0 = opt.g0;
  }
  return spec;
}

PayoffMatrix build_payoff(const ExperimentOptions& opt) {
  if (opt.payoff.size() != 4) {
    throw std::invalid_argument("--payoff a b c d is required");
  }
  PayoffMatrix m{opt.payoff[0], opt.payoff[1], opt.payoff[2], opt.payoff[3]};
  if (!all_finite(m)) {
    throw std::invalid_argument("payoff entries must be finite");
  }
  return m;
}

void validate_run(const ExperimentOptions& opt) {
  if (!(opt.x0 >= 0.0 && opt.x0 <= 1.0)) {
    throw std::invalid_argument("--x0 must lie in [0,1]");
  }
  IntegratorConfig integ{opt.dt, opt.t_end, opt.record_every, 1e-12};
  validate(integ);
  for (const std::string& f : opt.formats) {
    if (f != "csv" && f != "svg") {
      throw std::invalid_argument("unknown output format: " + f);
    }
  }
}

json payoff_json(const PayoffMatrix& m) {
  return json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};
}

json game_json(const GameClass& game) {
  json j;
  j["variant"] = to_string(game.variant);
  if (std::isfinite(game.alpha)) j["alpha"] = game.alpha;
  if (std::isfinite(game.beta)) j["beta"] = game.beta;
  if (game.mixed_ne) j["mixed_ne"] = *game.mixed_ne;
  return j;
}

json controller_json(const ControllerSpec& c) {
  json j;
  j["family"] = to_string(c.family);
  j["matrix"] = {c.matrix.g11, c.matrix.g12, c.matrix.g21, c.matrix.g22};
  if (c.family != AdaptationFamily::None) {
    j["k"] = c.k;
    j["h"] = c.h;
    j["g0"] = c.g0;
  }
  return j;
}

json resolved_config_json(const ExperimentOptions& opt, const PayoffMatrix& m,
                          const ControllerSpec& spec) {
  json j;
  j["payoff"] = payoff_json(m);
  j["controller"] = controller_json(spec);
  j["initial_x"] = opt.x0;
  j["integrator"] = {{"dt", opt.dt},
                     {"t_end", opt.t_end},
                     {"record_every", opt.record_every}};
  j["formats"] = opt.formats;
  return j;
}

// Pure-NE listing per the game taxonomy, for classify output.
std::string nash_list(const GameClass& game) {
  switch (game.variant) {
    case GameVariant::Coordination: return "pure NE (1,1),(2,2) + mixed";
    case GameVariant::DominantAction1: return "unique NE (1,1)";
    case GameVariant::DominantAction2: return "unique NE (2,2)";
    case GameVariant::AntiCoordination: return "pure NE (1,2),(2,1) + mixed";
    case GameVariant::Degenerate: return "boundary case, taxonomy silent";
  }
  return "";
}

int cmd_classify(const std::vector<double>& entries) {
  PayoffMatrix m{entries[0], entries[1], entries[2], entries[3]};
  if (!all_finite(m)) {
    std::cerr << "classify: payoff entries must be finite\n";
    return kExitUsage;
  }
  const GameClass game = classify(m);
  std::cout << to_string(game.variant);
  if (game.variant == GameVariant::Degenerate) {
    std::cout << " (" << (m.a == m.c ? "a=c" : "d=b") << ")";
  }
  if (std::isfinite(game.alpha)) {
    std::cout << ", alpha=" << game.alpha << ", beta=" << game.beta;
  }
  if (game.mixed_ne) std::cout << ", x*=" << *game.mixed_ne;
  std::cout << ", " << nash_list(game) << "\n";

  json j;
  j["payoff"] = payoff_json(m);
  j["game"] = game_json(game);
  j["nash_equilibria"] = nash_list(game);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

struct RunOutcome {
  SystemState terminal;
  ConvergenceLabel label = ConvergenceLabel::None;
  std::optional<double> t_settle;
  ValidityVerdict verdict;
  double max_projection = 0.0;
};

RunOutcome run_one(const ControlledSystem& sys, double x0,
                   const IntegratorConfig& integ, const fs::path& dir,
                   bool write_csv, bool write_svg) {
  const Trajectory traj = integrate(sys, {x0, sys.control.g0}, integ);
  RunOutcome out;
  out.terminal = traj.terminal();
  out.max_projection = traj.max_projection;
  const ConvergenceCriteria crit;
  out.label = classify_limit(sys, traj, crit);
  const ConvergenceResult settle =
      detect_convergence(sys, traj, crit,
                         out.label == ConvergenceLabel::X1
                             ? ConvergenceTarget::X1
                         : out.label == ConvergenceLabel::MixedNE
                             ? ConvergenceTarget::MixedNE
                             : ConvergenceTarget::X0);
  if (settle.converged && std::isfinite(settle.t_settle)) {
    out.t_settle = settle.t_settle;
  }
  out.verdict = check_validity(sys.game, sys.control);

  if (write_csv) write_trajectory_csv((dir / "trajectory.csv").string(), traj);
  if (write_svg) {
    std::vector<PlotSeries> series(2);
    series[0] = {"x(t)", "#0072bd", traj.times, {}};
    series[1] = {"g(t)", "#d95319", traj.times, {}};
    series[0].y.reserve(traj.size());
    series[1].y.reserve(traj.size());
    for (const SystemState& s : traj.states) {
      series[0].y.push_back(s.x);
      series[1].y.push_back(s.g);
    }
    write_line_plot_svg((dir / "trajectory.svg").string(),
                        "controlled replicator trajectory", "time t", series);
  }
  return out;
}

json outcome_json(const RunOutcome& out) {
  json j;
  j["terminal"] = {{"x", out.terminal.x}, {"g", out.terminal.g}};
  j["converged_to"] = to_string(out.label);
  if (out.t_settle) j["t_settle"] = *out.t_settle;
  j["validity"] = {{"theorem", to_string(out.verdict.theorem)},
                   {"satisfied", out.verdict.satisfied},
                   {"detail", out.verdict.detail}};
  j["max_projection"] = out.max_projection;
  return j;
}

int cmd_simulate(const ExperimentOptions& opt) {
  PayoffMatrix m;
  ControllerSpec spec;
  ControlledSystem sys;
  try {
    validate_run(opt);
    m = build_payoff(opt);
    spec = build_controller(opt);
    sys = make_system(m, spec);
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << "\n";
    return kExitUsage;
  }

  fs::create_directories(opt.out_dir);
  const bool want_csv =
      std::count(opt.formats.begin(), opt.formats.end(), "csv") > 0;
  const bool want_svg =
      std::count(opt.formats.begin(), opt.formats.end(), "svg") > 0;
  const IntegratorConfig integ{opt.dt, opt.t_end, opt.record_every, 1e-12};

  RunOutcome out;
  try {
    out = run_one(sys, opt.x0, integ, opt.out_dir, want_csv, want_svg);
  } catch (const IntegrationError& e) {
    std::cerr << "simulate: integration failed: " << e.what() << "\n";
    return kExitNumerical;
  }

  json summary;
  summary["config"] = resolved_config_json(opt, m, spec);
  summary["game"] = game_json(sys.game);
  summary.update(outcome_json(out));
  std::ofstream((fs::path(opt.out_dir) / "summary.json").string())
      << summary.dump(2) << "\n";
  std::ofstream((fs::path(opt.out_dir) / "config.json").string())
      << summary["config"].dump(2) << "\n";

  std::cout << "game: " << to_string(sys.game.variant)
            << "  terminal: x=" << out.terminal.x << " g=" << out.terminal.g
            << "  converged_to: " << to_string(out.label) << "\n";
  std::cout << "guarantee: " << to_string(out.verdict.theorem)
            << (out.verdict.satisfied ? " satisfied" : " not satisfied") << " ("
            << out.verdict.detail << ")\n";
  return kExitOk;
}

struct SweepOptions {
  ExperimentOptions base;
  std::vector<double> grid_alpha, grid_beta, grid_k, grid_h, grid_x0, grid_g0;
  int workers = 0;
};

// Canonical payoff with the requested gaps, preserving the base game class.
PayoffMatrix payoff_with_gaps(const GameClass& base, double alpha,
                              double beta) {
  switch (base.variant) {
    case GameVariant::Coordination: return {alpha, 0.0, 0.0, beta};
    case GameVariant::DominantAction1: return {alpha, beta, 0.0, 0.0};
    case GameVariant::DominantAction2: return {0.0, 0.0, alpha, beta};
    case GameVariant::AntiCoordination: return {0.0, beta, alpha, 0.0};
    case GameVariant::Degenerate:
      throw std::invalid_argument(
          "sweep: alpha/beta grid needs a non-degenerate base game");
  }
  return {};
}

int cmd_sweep(const SweepOptions& sw) {
  ExperimentOptions base = sw.base;
  PayoffMatrix base_payoff;
  GameClass base_game;
  try {
    validate_run(base);
    base_payoff = build_payoff(base);
    base_game = classify(base_payoff);
  } catch (const std::exception& e) {
    std::cerr << "sweep: " << e.what() << "\n";
    return kExitUsage;
  }

  const bool any_grid = !sw.grid_alpha.empty() || !sw.grid_beta.empty() ||
                        !sw.grid_k.empty() || !sw.grid_h.empty() ||
                        !sw.grid_x0.empty() || !sw.grid_g0.empty();
  if (!any_grid) {
    std::cerr << "sweep: empty grid (provide at least one of --grid-alpha, "
                 "--grid-beta, --grid-k, --grid-h, --grid-x0, --grid-g0)\n";
    return kExitUsage;
  }
  const auto axis = [](const std::vector<double>& grid, double fallback) {
    return grid.empty() ? std::vector<double>{fallback} : grid;
  };
  const std::vector<double> alphas = axis(sw.grid_alpha, base_game.alpha);
  const std::vector<double> betas = axis(sw.grid_beta, base_game.beta);
  const std::vector<double> ks = axis(sw.grid_k, base.k);
  const std::vector<double> hs = axis(sw.grid_h, base.h);
  const std::vector<double> x0s = axis(sw.grid_x0, base.x0);
  const std::vector<double> g0s = axis(sw.grid_g0, base.g0);
  const bool gaps_swept = !sw.grid_alpha.empty() || !sw.grid_beta.empty();

  struct Case {
    PayoffMatrix payoff;
    ControllerSpec control;
    double x0;
    double alpha, beta, k, h, g0;
  };
  std::vector<Case> cases;
  try {
    for (double alpha : alphas)
      for (double beta : betas)
        for (double k : ks)
          for (double h : hs)
            for (double g0 : g0s)
              for (double x0 : x0s) {
                Case cs;
                cs.payoff = gaps_swept ? payoff_with_gaps(base_game, alpha, beta)
                                       : base_payoff;
                ExperimentOptions o = base;
                o.k = k;
                o.h = h;
                o.g0 = g0;
                cs.control = build_controller(o);
                cs.x0 = x0;
                cs.alpha = alpha;
                cs.beta = beta;
                cs.k = k;
                cs.h = h;
                cs.g0 = g0;
                cases.push_back(cs);
              }
  } catch (const std::exception& e) {
    std::cerr << "sweep: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cases.empty()) {
    std::cerr << "sweep: empty grid\n";
    return kExitUsage;
  }

  fs::create_directories(base.out_dir);
  const IntegratorConfig integ{base.dt, base.t_end, base.record_every, 1e-12};
  const bool want_csv =
      std::count(base.formats.begin(), base.formats.end(), "csv") > 0;
  const bool want_svg =
      std::count(base.formats.begin(), base.formats.end(), "svg") > 0;

  struct Row {
    std::string text;
  };
  std::vector<Row> rows(cases.size());

  auto run_case = [&](std::size_t i) {
    const Case& cs = cases[i];
    char name[32];
    std::snprintf(name, sizeof(name), "case_%04zu", i);
    const fs::path dir = fs::path(base.out_dir) / name;
    fs::create_directories(dir);

    std::string label = "error";
    std::string hypothesis = "n/a";
    std::string t_settle = "";
    std::string note;
    try {
      const ControlledSystem sys = make_system(cs.payoff, cs.control);
      const ValidityVerdict verdict = check_validity(sys.game, sys.control);
      if (verdict.theorem != Theorem::NotApplicable) {
        hypothesis = verdict.satisfied ? "satisfied" : "hypothesis_not_satisfied";
      }
      const RunOutcome out = run_one(sys, cs.x0, integ, dir, want_csv, want_svg);
      label = to_string(out.label);
      if (out.t_settle) t_settle = format_double(*out.t_settle);

      json summary;
      ExperimentOptions o = base;
      o.k = cs.k;
      o.h = cs.h;
      o.g0 = cs.g0;
      o.x0 = cs.x0;
      summary["config"] = resolved_config_json(o, cs.payoff, cs.control);
      summary["game"] = game_json(sys.game);
      summary["hypothesis"] = hypothesis;
      summary.update(outcome_json(out));
      std::ofstream((dir / "summary.json").string()) << summary.dump(2) << "\n";
      std::ofstream((dir / "config.json").string())
          << summary["config"].dump(2) << "\n";
    } catch (const std::exception& e) {
      note = e.what();
      label = "error";
    }

    std::ostringstream row;
    row << name << ',' << format_double(cs.alpha) << ','
        << format_double(cs.beta) << ',' << format_double(cs.k) << ','
        << format_double(cs.h) << ',' << format_double(cs.x0) << ','
        << format_double(cs.g0) << ',' << hypothesis << ',' << label << ','
        << t_settle;
    if (!note.empty()) row << ",\"" << note << '"';
    rows[i].text = row.str();
  };

  const int nworkers =
      std::min<int>(resolve_workers(sw.workers), static_cast<int>(cases.size()));
  if (nworkers <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) run_case(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < nworkers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cases.size();
             i = next.fetch_add(1)) {
          run_case(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  std::ofstream agg((fs::path(base.out_dir) / "sweep.csv").string());
  agg << "case_id,alpha,beta,k,h,x0,g0,hypothesis,converged_to,t_settle\n";
  for (const Row& r : rows) agg << r.text << "\n";
  std::cout << "sweep: " << cases.size() << " cases written to "
            << base.out_dir << "\n";
  return kExitOk;
}

int verify_ode_suite(Suite suite, int workers) {
  const SuiteConfig cfg = default_suite_config(suite);
  const SuiteReport report = run_suite(suite, cfg, workers);
  std::cout << to_string(suite) << ": " << report.cases_passed << "/"
            << report.cases_total << " cases passed\n";
  for (const SuiteFailure& f : report.failures) {
    std::cout << "  FAIL " << f.params << "  terminal x=" << f.terminal.x
              << " g=" << f.terminal.g << "  " << f.violated << "\n";
  }
  return report.cases_passed == report.cases_total ? kExitOk
                                                   : kExitVerifyFailure;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int verify_abm(int workers) {
  struct GameCase {
    const char* name;
    PayoffMatrix payoff;
    double x0;
  };
  const std::vector<GameCase> games = {
      {"minority", {0.0, 1.0, 1.0, 0.0}, 0.95},
      {"coordination", {1.0, 0.0, 0.0, 1.0}, 0.8},
  };
  const std::vector<int> sizes = {100, 1000, 10000};
  const int n_seeds = 20;
  const double t_end = 10.0;

  bool all_ok = true;
  for (const GameCase& gc : games) {
    const ControlledSystem sys = make_system(gc.payoff, ControllerSpec::none());

    std::vector<std::vector<double>> devs(sizes.size(),
                                          std::vector<double>(n_seeds));
    struct Job {
      std::size_t size_idx;
      int seed;
    };
    std::vector<Job> jobs;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
      for (int seed = 0; seed < n_seeds; ++seed) jobs.push_back({si, seed});
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < jobs.size();
           i = next.fetch_add(1)) {
        const Job& job = jobs[i];
        AbmConfig cfg{sizes[job.size_idx],
                      static_cast<std::uint64_t>(job.seed + 1), 0.0};
        devs[job.size_idx][static_cast<std::size_t>(job.seed)] =
            compare_to_ode(sys, gc.x0, cfg, t_end).sup_deviation;
      }
    };
    const int nworkers =
        std::min<int>(resolve_workers(workers), static_cast<int>(jobs.size()));
    if (nworkers <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }

    std::vector<double> medians;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
      medians.push_back(median(devs[si]));
    }
    const bool small_dev = medians.back() < 0.05;
    const bool monotone =
        medians[0] > medians[1] && medians[1] > medians[2];
    std::cout << "abm " << gc.name << ": median sup|x_abm - x_ode| = ";
    for (std::size_t si = 0; si < sizes.size(); ++si) {
      std::cout << "N=" << sizes[si] << ":" << medians[si]
                << (si + 1 < sizes.size() ? ", " : "");
    }
    std::cout << "  [N=10000 < 0.05: " << (small_dev ? "ok" : "FAIL")
              << ", decreasing in N: " << (monotone ? "ok" : "FAIL") << "]\n";
    all_ok = all_ok && small_dev && monotone;
  }
  return all_ok ? kExitOk : kExitVerifyFailure;
}

int cmd_verify(const std::string& suite, int workers) {
  try {
    if (suite == "prop2") return verify_ode_suite(Suite::Prop2, workers);
    if (suite == "thm1") return verify_ode_suite(Suite::Thm1, workers);
    if (suite == "thm2") return verify_ode_suite(Suite::Thm2, workers);
    if (suite == "thm3") return verify_ode_suite(Suite::Thm3, workers);
    if (suite == "abm") return verify_abm(workers);
  } catch (const IntegrationError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  std::cerr << "verify: unknown suite '" << suite
            << "' (expected prop2, thm1, thm2, thm3 or abm)\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptive-gain control of replicator dynamics in 2-action games"};
  app.require_subcommand(1);

  // classify
  std::vector<double> entries;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify a payoff matrix");
  classify_cmd->add_option("entries", entries, "payoff entries a b c d")
      ->expected(4)
      ->required();

  // simulate
  ExperimentOptions sim_opt;
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "integrate one controlled trajectory");
  simulate_cmd->set_config("--config", "", "config file (TOML/INI keys)");
  add_experiment_options(simulate_cmd, sim_opt);

  // sweep
  SweepOptions sweep_opt;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "cartesian parameter sweep");
  sweep_cmd->set_config("--config", "", "config file (TOML/INI keys)");
  add_experiment_options(sweep_cmd, sweep_opt.base);
  sweep_cmd->add_option("--grid-alpha", sweep_opt.grid_alpha,
                        "alpha values (rebuilds a canonical payoff)")
      ->delimiter(',');
  sweep_cmd->add_option("--grid-beta", sweep_opt.grid_beta, "beta values")
      ->delimiter(',');
  sweep_cmd->add_option("--grid-k", sweep_opt.grid_k, "k values")
      ->delimiter(',');
  sweep_cmd->add_option("--grid-h", sweep_opt.grid_h, "h values")
      ->delimiter(',');
  sweep_cmd->add_option("--grid-x0", sweep_opt.grid_x0, "x0 values")
      ->delimiter(',');
  sweep_cmd->add_option("--grid-g0", sweep_opt.grid_g0, "g0 values")
      ->delimiter(',');
  sweep_cmd->add_option("--workers", sweep_opt.workers,
                        "worker threads (default: EVOGAIN_WORKERS or hardware)");

  // verify
  std::string suite;
  int verify_workers = 0;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a numerical certification suite");
  verify_cmd->add_option("suite", suite, "prop2, thm1, thm2, thm3 or abm")
      ->required();
  verify_cmd->add_option("--workers", verify_workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(entries);
    if (simulate_cmd->parsed()) return cmd_simulate(sim_opt);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opt);
    if (verify_cmd->parsed()) return cmd_verify(suite, verify_workers);
  } catch (const IntegrationError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
