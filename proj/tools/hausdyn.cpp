// Command-line front end: calibrate the housing market model, solve the
// forward-looking system, and run the impulse-response and tax-sweep
// experiments. See the README for the config schema and output formats.

#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "hausdyn/config.hpp"
#include "hausdyn/csv.hpp"
#include "hausdyn/plot.hpp"
#include "hausdyn/verify.hpp"

namespace {

using namespace hausdyn;

void print_kv(const char* key, double value) {
  std::printf("%s = %s\n", key, format_number(value).c_str());
}

struct Solved {
  ModelCoefficients coeffs;
  LinearSystem sys;
  PolicyFunction policy;
};

Solved solve_at(const Calibration& cal, const TaxPolicy& tax) {
  Solved s;
  s.coeffs = compute_coefficients(cal, tax);
  s.sys = linearize(cal, s.coeffs);
  s.policy = solve_saddle_path(s.sys);
  return s;
}

std::filesystem::path prepare_output_dir(const RunConfig& cfg) {
  std::filesystem::path dir(cfg.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw io_error("cannot create output directory " + dir.string());
  return dir;
}

bool wants(const RunConfig& cfg, OutputFormat format) {
  for (OutputFormat f : cfg.formats) {
    if (f == format) return true;
  }
  return false;
}

int cmd_steady(const RunConfig& cfg) {
  const Calibration& cal = cfg.calibration;
  print_kv("alpha", cal.alpha);
  print_kv("gamma", cal.gamma);
  print_kv("delta", cal.delta);
  print_kv("n_bar", cal.n_bar);
  print_kv("pi_bar", cal.pi_bar);
  print_kv("R_bar", cal.R_bar);
  print_kv("Rm_bar", cal.Rm_bar);
  print_kv("c_over_h", cal.c_over_h);
  print_kv("q_bar", cal.q_bar);
  print_kv("h_bar", cal.h_bar);
  print_kv("tau_s", cfg.tax_policy.tau_s);
  print_kv("tau_f", cfg.tax_policy.tau_f);
  print_kv("beta", derive_beta(cal));
  print_kv("demand_residual", steady_state_demand_residual(cal, cfg.tax_policy));
  std::printf("# demand_residual is the steady-state gap between the marginal-rate-of-\n"
              "# substitution and user-cost sides of the housing optimality condition;\n"
              "# the baseline calibration leaves it nonzero on purpose\n");
  return 0;
}

int cmd_coeffs(const RunConfig& cfg) {
  const Solved s = solve_at(cfg.calibration, cfg.tax_policy);
  print_kv("theta", s.coeffs.theta);
  print_kv("beta", s.coeffs.beta);
  print_kv("r", s.coeffs.r);
  print_kv("w1", s.coeffs.w1);
  print_kv("w2", s.coeffs.w2);
  print_kv("w3", s.coeffs.w3);
  print_kv("kappa", s.coeffs.kappa);
  print_kv("k1", s.coeffs.k1);
  print_kv("a_hh", s.sys.a_hh);
  print_kv("a_hq", s.sys.a_hq);
  print_kv("a_hn", s.sys.a_hn);
  print_kv("d_qh", s.sys.d_qh);
  print_kv("d_qq1", s.sys.d_qq1);
  print_kv("d_qR", s.sys.d_qR);
  const auto roots = endogenous_roots(s.sys);
  print_kv("root_stable", std::abs(roots[0]) < std::abs(roots[1]) ? std::abs(roots[0])
                                                                  : std::abs(roots[1]));
  print_kv("root_unstable", std::abs(roots[0]) < std::abs(roots[1]) ? std::abs(roots[1])
                                                                    : std::abs(roots[0]));
  print_kv("phi_h", s.policy.phi_h);
  print_kv("phi_R", s.policy.phi_R);
  print_kv("phi_n", s.policy.phi_n);
  print_kv("closed_loop_h_root", s.policy.closed_loop_h_root);
  return 0;
}

int cmd_irf(const RunConfig& cfg) {
  const Solved s = solve_at(cfg.calibration, cfg.tax_policy);
  const ImpulseResponse irf = impulse_response(s.policy, s.sys, cfg.shock, cfg.horizon);
  const std::filesystem::path dir = prepare_output_dir(cfg);
  const std::string stem =
      cfg.shock.kind == ShockKind::interest_rate ? "irf_interest" : "irf_population";
  if (wants(cfg, OutputFormat::csv)) {
    emit_csv(irf, dir / (stem + ".csv"));
    std::printf("wrote %s\n", (dir / (stem + ".csv")).string().c_str());
  }
  if (wants(cfg, OutputFormat::svg)) {
    render_plot(irf, cfg.tax_policy, cfg.shock.kind, dir / (stem + ".svg"));
    std::printf("wrote %s\n", (dir / (stem + ".svg")).string().c_str());
  }
  std::printf("shock = %s, size_sd = %s\n", shock_name(cfg.shock.kind),
              format_number(cfg.shock.size_sd).c_str());
  print_kv("peak_abs", irf.peak_abs);
  print_kv("sum_sq", irf.sum_sq);
  std::printf("half_life = %d\n", irf.half_life);
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  const SweepResult sweep =
      run_sweep(cfg.calibration, cfg.experiment, cfg.tau_grid, cfg.horizon,
                cfg.shock.size_sd);
  const std::filesystem::path dir = prepare_output_dir(cfg);
  const std::string stem = experiment_name(cfg.experiment);
  if (wants(cfg, OutputFormat::csv)) {
    emit_csv(sweep, dir / (stem + ".csv"));
    std::printf("wrote %s\n", (dir / (stem + ".csv")).string().c_str());
  }
  if (wants(cfg, OutputFormat::svg)) {
    render_plot(sweep, dir / (stem + ".svg"));
    std::printf("wrote %s\n", (dir / (stem + ".svg")).string().c_str());
  }
  std::printf("experiment = %s (%s shock)\n", stem.c_str(),
              shock_name(experiment_shock(cfg.experiment)));
  for (const SweepEntry& entry : sweep.entries) {
    std::printf("tau_s = %s, tau_f = %s: peak_abs = %s, sum_sq = %s, half_life = %d\n",
                format_number(entry.tax.tau_s).c_str(),
                format_number(entry.tax.tau_f).c_str(),
                format_number(entry.irf.peak_abs).c_str(),
                format_number(entry.irf.sum_sq).c_str(), entry.irf.half_life);
  }
  return 0;
}

int cmd_simulate(const RunConfig& cfg) {
  const Solved s = solve_at(cfg.calibration, cfg.tax_policy);
  const SimulatedPaths paths = stochastic_simulate(s.policy, s.sys, cfg.seed, cfg.periods);
  const std::filesystem::path dir = prepare_output_dir(cfg);
  if (wants(cfg, OutputFormat::csv)) {
    emit_csv(paths, dir / "simulation.csv");
    std::printf("wrote %s\n", (dir / "simulation.csv").string().c_str());
  }
  double mean_q = 0.0, var_R = 0.0, mean_R = 0.0;
  for (double v : paths.q_hat) mean_q += v;
  for (double v : paths.R_hat) mean_R += v;
  mean_q /= cfg.periods;
  mean_R /= cfg.periods;
  for (double v : paths.R_hat) var_R += (v - mean_R) * (v - mean_R);
  var_R /= cfg.periods;
  std::printf("periods = %d, seed = %llu\n", cfg.periods,
              static_cast<unsigned long long>(cfg.seed));
  print_kv("mean_q_hat", mean_q);
  print_kv("sample_var_R_hat", var_R);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const VerifyReport report = run_verification(cfg);
  for (const PropertyResult& r : report.results) {
    std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
  }
  const int failures =
      static_cast<int>(report.results.size()) -
      static_cast<int>(std::count_if(report.results.begin(), report.results.end(),
                                     [](const PropertyResult& r) { return r.pass; }));
  std::printf("%d of %zu checks passed\n", static_cast<int>(report.results.size()) - failures,
              report.results.size());
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hausdyn: housing-market dynamics under interest-rate and population shocks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string experiment;
  std::uint64_t seed = 0;
  bool seed_given = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "path to a key = value config file");
    cmd->add_option("--out", out_dir, "output directory (overrides output_dir)");
    cmd->add_option("--seed", seed, "RNG seed (overrides seed)")
        ->each([&](const std::string&) { seed_given = true; });
    cmd->add_option("--experiment", experiment, "sweep experiment, fig1..fig6");
    return cmd;
  };

  CLI::App* steady = add_common(app.add_subcommand("steady", "steady-state values and diagnostics"));
  CLI::App* coeffs = add_common(app.add_subcommand("coeffs", "reduced-form coefficients and policy function"));
  CLI::App* irf = add_common(app.add_subcommand("irf", "impulse response at the configured tax policy"));
  CLI::App* sweep = add_common(app.add_subcommand("sweep", "impulse responses across a tax grid"));
  CLI::App* simulate = add_common(app.add_subcommand("simulate", "seeded stochastic simulation"));
  CLI::App* verify = add_common(app.add_subcommand("verify", "run the model property suite"));

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (steady->parsed()) cfg.command = Command::steady;
    if (coeffs->parsed()) cfg.command = Command::coeffs;
    if (irf->parsed()) cfg.command = Command::irf;
    if (sweep->parsed()) cfg.command = Command::sweep;
    if (simulate->parsed()) cfg.command = Command::simulate;
    if (verify->parsed()) cfg.command = Command::verify;
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    if (seed_given) cfg.seed = seed;
    if (!experiment.empty()) {
      bool found = false;
      for (Experiment e : {Experiment::fig1, Experiment::fig2, Experiment::fig3,
                           Experiment::fig4, Experiment::fig5, Experiment::fig6}) {
        if (experiment == experiment_name(e)) {
          cfg.experiment = e;
          found = true;
        }
      }
      if (!found) {
        std::fprintf(stderr, "error: --experiment must be fig1..fig6, got '%s'\n",
                     experiment.c_str());
        return 2;
      }
    }

    switch (cfg.command) {
      case Command::steady: return cmd_steady(cfg);
      case Command::coeffs: return cmd_coeffs(cfg);
      case Command::irf: return cmd_irf(cfg);
      case Command::sweep: return cmd_sweep(cfg);
      case Command::simulate: return cmd_simulate(cfg);
      case Command::verify: return cmd_verify(cfg);
    }
  } catch (const parse_error& e) {
    std::fprintf(stderr, "config error (line %d): %s\n", e.line, e.what());
    return 2;
  } catch (const validation_error& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const solve_error& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
