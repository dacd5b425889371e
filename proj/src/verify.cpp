#include "hausdyn/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace hausdyn {

namespace {

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

double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

const std::vector<double> kFineGrid = {0.0, 0.02, 0.04, 0.06, 0.08, 0.10};

using CheckFn = std::function<PropertyResult()>;

void run_check(VerifyReport& report, const std::string& name, const CheckFn& fn) {
  try {
    PropertyResult result = fn();
    result.name = name;
    report.results.push_back(std::move(result));
  } catch (const std::exception& e) {
    report.results.push_back({name, false, e.what()});
  }
}

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const PropertyResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

VerifyReport run_verification(const RunConfig& cfg) {
  VerifyReport report;
  const Calibration& cal = cfg.calibration;
  const int horizon = cfg.horizon;

  run_check(report, "coefficient-identities", [&]() -> PropertyResult {
    double worst = 0.0;
    for (double ts : kFineGrid) {
      for (double tf : kFineGrid) {
        const ModelCoefficients c = compute_coefficients(cal, {ts, tf});
        worst = std::max(worst, std::abs(c.w1 + c.w2 - 1.0));
        // the demand equation must hold exactly at the steady state
        const double lhs = std::log(cal.q_bar);
        const double rhs = c.k1 - c.w1 * std::log(cal.h_bar) + c.w2 * std::log(cal.q_bar)
                         + c.w3 * (cal.R_bar - cal.Rm_bar) - c.w2 * (cal.R_bar - cal.pi_bar);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    return {"", worst < 1e-12, "max identity residual = " + fmt(worst)};
  });

  run_check(report, "coefficient-monotonicity", [&]() -> PropertyResult {
    std::vector<double> w3_s, w3_f, w1_f;
    for (double rate : kFineGrid) {
      w3_s.push_back(compute_coefficients(cal, {rate, 0.0}).w3);
      w3_f.push_back(compute_coefficients(cal, {0.0, rate}).w3);
      w1_f.push_back(compute_coefficients(cal, {0.0, rate}).w1);
    }
    bool ok = strictly_decreasing(w3_s) && strictly_decreasing(w3_f) &&
              strictly_decreasing(w1_f);
    const ModelCoefficients base = compute_coefficients(cal, {0.0, 0.0});
    for (double rate : kFineGrid) {
      const ModelCoefficients c = compute_coefficients(cal, {rate, 0.0});
      ok = ok && c.w1 == base.w1 && c.kappa == base.kappa;
    }
    return {"", ok, ok ? "w3 and w1 fall along their tax grids; kappa tax-independent"
                       : "a coefficient moved the wrong way along the tax grid"};
  });

  run_check(report, "saddle-path", [&]() -> PropertyResult {
    std::mt19937_64 engine(0x5add1e);
    double worst = 0.0;
    for (double ts : {0.0, 0.05, 0.10}) {
      for (double tf : {0.0, 0.05, 0.10}) {
        const Solved s = solve_at(cal, {ts, tf});
        const auto roots = endogenous_roots(s.sys);
        const int explosive = (std::abs(roots[0]) > 1.0 ? 1 : 0) +
                              (std::abs(roots[1]) > 1.0 ? 1 : 0);
        if (explosive != 1) {
          return {"", false,
                  "expected exactly one explosive root at tau_s=" + fmt(ts) +
                      ", tau_f=" + fmt(tf) + ", found " + fmt(explosive)};
        }
        for (int i = 0; i < 1000; ++i) {
          const double h = 0.2 * uniform01(engine) - 0.1;
          const double R = 0.2 * uniform01(engine) - 0.1;
          const double n = 0.2 * uniform01(engine) - 0.1;
          worst = std::max(worst, std::abs(policy_residual(s.policy, s.sys, h, R, n)));
        }
      }
    }
    return {"", worst < 1e-10, "max policy residual on random states = " + fmt(worst)};
  });

  run_check(report, "oracle-equivalence", [&]() -> PropertyResult {
    std::mt19937_64 engine(20260810);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      Calibration c = cal;
      double a;
      do {
        a = cal.alpha * (0.8 + 0.4 * uniform01(engine));
      } while (a >= 0.995);
      c.alpha = a;
      c.delta = cal.delta * (0.8 + 0.4 * uniform01(engine));
      c.n_bar = cal.n_bar * (0.8 + 0.4 * uniform01(engine));
      const TaxPolicy tax{0.1 * uniform01(engine), 0.1 * uniform01(engine)};
      const Solved s = solve_at(c, tax);
      for (ShockKind kind : {ShockKind::interest_rate, ShockKind::population_growth}) {
        const ImpulseResponse irf = impulse_response(s.policy, s.sys, {kind, 1.0}, horizon);
        StateDeviation initial;
        if (kind == ShockKind::interest_rate) initial.R_hat = -s.sys.sigma_R;
        else initial.n_hat = s.sys.sigma_n;
        const DeviationPath oracle =
            extended_path_oracle(s.sys, initial, horizon, horizon + 2000);
        for (int t = 0; t < horizon; ++t) {
          worst = std::max(worst, std::abs(irf.q_hat[t] - oracle.q_hat[t]));
          worst = std::max(worst, std::abs(irf.h_hat[t] - oracle.h_hat[t]));
        }
      }
    }
    return {"", worst < 1e-6,
            "max |saddle-path - extended-path| over 20 perturbed calibrations = " + fmt(worst)};
  });

  run_check(report, "interest-impact-sign", [&]() -> PropertyResult {
    const Solved s = solve_at(cal, cfg.tax_policy);
    const ImpulseResponse irf =
        impulse_response(s.policy, s.sys, {ShockKind::interest_rate, 1.0}, horizon);
    return {"", irf.q_hat[0] > 0.0, "q_hat[0] = " + fmt(irf.q_hat[0])};
  });

  run_check(report, "interest-path-nonnegative", [&]() -> PropertyResult {
    const Solved s = solve_at(cal, cfg.tax_policy);
    const ImpulseResponse irf =
        impulse_response(s.policy, s.sys, {ShockKind::interest_rate, 1.0}, horizon);
    double min_q = irf.q_hat[0];
    int arg_min = 0;
    for (int t = 1; t < horizon; ++t) {
      if (irf.q_hat[t] < min_q) {
        min_q = irf.q_hat[t];
        arg_min = t;
      }
    }
    return {"", min_q >= 0.0,
            "min q_hat = " + fmt(min_q) + " at t = " + fmt(arg_min) +
                (min_q < 0.0 ? " (stock-adjustment undershoot)" : "")};
  });

  run_check(report, "population-impact-sign", [&]() -> PropertyResult {
    const Solved s = solve_at(cal, cfg.tax_policy);
    const ImpulseResponse irf =
        impulse_response(s.policy, s.sys, {ShockKind::population_growth, 1.0}, horizon);
    return {"", irf.q_hat[0] > 0.0, "q_hat[0] = " + fmt(irf.q_hat[0])};
  });

  const auto metric_path = [&](Experiment e, bool peak) {
    const SweepResult sweep = run_sweep(cal, e, kFineGrid, horizon);
    std::vector<double> out;
    for (const SweepEntry& entry : sweep.entries) {
      out.push_back(peak ? entry.irf.peak_abs : entry.irf.sum_sq);
    }
    return out;
  };

  run_check(report, "interest-monotone-in-stock-tax", [&]() -> PropertyResult {
    const bool ok = strictly_increasing(metric_path(Experiment::fig1, true)) &&
                    strictly_increasing(metric_path(Experiment::fig1, false));
    return {"", ok, "peak_abs and sum_sq along the tau_s grid"};
  });

  run_check(report, "interest-monotone-in-flow-tax", [&]() -> PropertyResult {
    const bool ok = strictly_increasing(metric_path(Experiment::fig2, true)) &&
                    strictly_increasing(metric_path(Experiment::fig2, false));
    return {"", ok, "peak_abs and sum_sq along the tau_f grid"};
  });

  run_check(report, "population-damped-by-flow-tax", [&]() -> PropertyResult {
    const bool ok = strictly_decreasing(metric_path(Experiment::fig5, true)) &&
                    strictly_decreasing(metric_path(Experiment::fig5, false));
    return {"", ok, "peak_abs and sum_sq along the tau_f grid"};
  });

  run_check(report, "stock-tax-neutral-under-population-shock", [&]() -> PropertyResult {
    const SweepResult sweep = run_sweep(cal, Experiment::fig4, kFineGrid, horizon);
    double worst = 0.0;
    for (std::size_t i = 1; i < sweep.entries.size(); ++i) {
      for (int t = 0; t < horizon; ++t) {
        worst = std::max(worst, std::abs(sweep.entries[i].irf.q_hat[t] -
                                         sweep.entries[0].irf.q_hat[t]));
      }
    }
    return {"", worst < 1e-12, "max q_hat spread across the tau_s grid = " + fmt(worst)};
  });

  run_check(report, "interest-taxes-reinforce", [&]() -> PropertyResult {
    const ReinforcementReport r =
        compare_reinforcement(cal, ShockKind::interest_rate, {0.05, 0.05}, horizon);
    return {"", r.joint_exceeds_each_single,
            "joint deviation " + fmt(r.dev_joint) + " vs singles " + fmt(r.dev_stock_only) +
                ", " + fmt(r.dev_flow_only)};
  });

  run_check(report, "linearization-order", [&]() -> PropertyResult {
    const Solved s = solve_at(cal, cfg.tax_policy);
    const auto residual_at = [&](double eps) {
      const double dirs[][3] = {{1, 1, 1}, {1, -1, 1}, {-1, 1, -1}, {1, 0, 0},
                                {0, 1, 0}, {0, 0, 1},  {-1, -1, -1}};
      double worst = 0.0;
      for (const auto& d : dirs) {
        const double nl = nonlinear_stock_step(cal, s.coeffs.kappa, eps * d[0], eps * d[1],
                                               eps * d[2]);
        const double lin = s.sys.a_hh * (eps * d[0]) + s.sys.a_hq * (eps * d[1]) +
                           s.sys.a_hn * (eps * d[2]);
        worst = std::max(worst, std::abs(nl - lin));
      }
      return worst;
    };
    const double r1 = residual_at(1e-2);
    const double r2 = residual_at(1e-3);
    const double order = std::log(r1 / r2) / std::log(10.0);
    return {"", order >= 1.9, "empirical order = " + fmt(order)};
  });

  run_check(report, "simulation-variance", [&]() -> PropertyResult {
    const Solved s = solve_at(cal, cfg.tax_policy);
    const int periods = 200000;
    const SimulatedPaths paths = stochastic_simulate(s.policy, s.sys, cfg.seed, periods);
    double mean = 0.0;
    for (double v : paths.R_hat) mean += v;
    mean /= periods;
    double var = 0.0;
    for (double v : paths.R_hat) var += (v - mean) * (v - mean);
    var /= periods;
    const double target =
        s.sys.sigma_R * s.sys.sigma_R / (1.0 - s.sys.rho_R * s.sys.rho_R);
    if (target == 0.0) {
      return {"", var == 0.0, "degenerate zero-variance process"};
    }
    const double rel = std::abs(var - target) / target;
    return {"", rel < 0.02,
            "sample var(R_hat) = " + fmt(var) + ", target " + fmt(target) +
                ", relative error " + fmt(rel)};
  });

  run_check(report, "irf-matches-single-innovation-simulation", [&]() -> PropertyResult {
    const Solved s = solve_at(cal, cfg.tax_policy);
    double worst = 0.0;
    for (ShockKind kind : {ShockKind::interest_rate, ShockKind::population_growth}) {
      const ImpulseResponse irf = impulse_response(s.policy, s.sys, {kind, 1.0}, horizon);
      std::vector<double> e_R(horizon, 0.0), e_n(horizon, 0.0);
      if (kind == ShockKind::interest_rate) e_R[0] = s.sys.sigma_R;
      else e_n[0] = s.sys.sigma_n;
      const SimulatedPaths sim = simulate_with_innovations(s.policy, s.sys, e_R, e_n);
      for (int t = 0; t < horizon; ++t) {
        worst = std::max(worst, std::abs(irf.q_hat[t] - sim.q_hat[t]));
      }
    }
    return {"", worst == 0.0, "max |irf - simulation| = " + fmt(worst)};
  });

  return report;
}

}  // namespace hausdyn
