#include "hausdyn/simulation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hausdyn {

double GaussianRng::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller on uniforms built straight from the 64-bit stream; u1 in
  // (0,1] keeps the log finite
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

ShockKind experiment_shock(Experiment e) {
  switch (e) {
    case Experiment::fig1:
    case Experiment::fig2:
    case Experiment::fig3:
      return ShockKind::interest_rate;
    case Experiment::fig4:
    case Experiment::fig5:
    case Experiment::fig6:
      return ShockKind::population_growth;
  }
  throw validation_error("unknown experiment");
}

const char* experiment_name(Experiment e) {
  switch (e) {
    case Experiment::fig1: return "fig1";
    case Experiment::fig2: return "fig2";
    case Experiment::fig3: return "fig3";
    case Experiment::fig4: return "fig4";
    case Experiment::fig5: return "fig5";
    case Experiment::fig6: return "fig6";
  }
  throw validation_error("unknown experiment");
}

SimulatedPaths simulate_with_innovations(const PolicyFunction& policy, const LinearSystem& sys,
                                         std::span<const double> e_R,
                                         std::span<const double> e_n) {
  if (e_R.size() != e_n.size()) {
    throw validation_error("innovation sequences must have equal length");
  }
  const std::size_t periods = e_R.size();
  SimulatedPaths p;
  p.q_hat.resize(periods);
  p.h_hat.resize(periods);
  p.R_hat.resize(periods);
  p.n_hat.resize(periods);

  double h = 0.0, R = 0.0, n = 0.0;
  for (std::size_t t = 0; t < periods; ++t) {
    R = sys.rho_R * R - e_R[t];  // interest innovations enter with a minus sign
    n = sys.rho_n * n + e_n[t];
    const double q = policy.phi_h * h + policy.phi_R * R + policy.phi_n * n;
    p.q_hat[t] = q;
    p.h_hat[t] = h;
    p.R_hat[t] = R;
    p.n_hat[t] = n;
    h = sys.a_hh * h + sys.a_hq * q + sys.a_hn * n;
  }
  return p;
}

ImpulseResponse impulse_response(const PolicyFunction& policy, const LinearSystem& sys,
                                 const ShockSpec& shock, int horizon) {
  if (horizon < 1) throw validation_error("horizon must be >= 1");
  if (!(shock.size_sd >= 0.0)) throw validation_error("size_sd must be >= 0");

  std::vector<double> e_R(horizon, 0.0), e_n(horizon, 0.0);
  if (shock.kind == ShockKind::interest_rate) {
    e_R[0] = shock.size_sd * sys.sigma_R;
  } else {
    e_n[0] = shock.size_sd * sys.sigma_n;
  }
  SimulatedPaths paths = simulate_with_innovations(policy, sys, e_R, e_n);

  ImpulseResponse irf;
  irf.horizon = horizon;
  irf.q_hat = std::move(paths.q_hat);
  irf.h_hat = std::move(paths.h_hat);
  irf.x_hat = (shock.kind == ShockKind::interest_rate) ? std::move(paths.R_hat)
                                                       : std::move(paths.n_hat);

  int peak_idx = 0;
  for (int t = 0; t < horizon; ++t) {
    const double mag = std::abs(irf.q_hat[t]);
    irf.sum_sq += irf.q_hat[t] * irf.q_hat[t];
    if (mag > irf.peak_abs) {
      irf.peak_abs = mag;
      peak_idx = t;
    }
  }
  if (irf.peak_abs == 0.0) {
    irf.half_life = 0;
  } else {
    irf.half_life = horizon;  // not reached inside the window
    for (int t = peak_idx + 1; t < horizon; ++t) {
      if (std::abs(irf.q_hat[t]) <= 0.5 * irf.peak_abs) {
        irf.half_life = t;
        break;
      }
    }
  }
  return irf;
}

SimulatedPaths stochastic_simulate(const PolicyFunction& policy, const LinearSystem& sys,
                                   std::uint64_t seed, int periods) {
  if (periods < 1) throw validation_error("periods must be >= 1");
  GaussianRng rng(seed);
  std::vector<double> e_R(periods), e_n(periods);
  for (int t = 0; t < periods; ++t) {
    e_R[t] = sys.sigma_R * rng.next();
    e_n[t] = sys.sigma_n * rng.next();
  }
  return simulate_with_innovations(policy, sys, e_R, e_n);
}

SweepResult run_sweep(const Calibration& cal, Experiment experiment,
                      std::span<const double> tax_grid, int horizon, double size_sd) {
  if (tax_grid.empty()) throw validation_error("tax grid must be nonempty");

  SweepResult out;
  out.experiment = experiment;
  out.entries.reserve(tax_grid.size());
  const ShockSpec shock{experiment_shock(experiment), size_sd};

  for (double rate : tax_grid) {
    TaxPolicy tax;
    switch (experiment) {
      case Experiment::fig1:
      case Experiment::fig4:
        tax.tau_s = rate;
        break;
      case Experiment::fig2:
      case Experiment::fig5:
        tax.tau_f = rate;
        break;
      case Experiment::fig3:
      case Experiment::fig6:
        tax.tau_s = rate;
        tax.tau_f = rate;
        break;
    }
    const auto tag = [&](const std::string& what) {
      std::ostringstream msg;
      msg << what << " at grid point tau_s=" << tax.tau_s << ", tau_f=" << tax.tau_f;
      return msg.str();
    };
    try {
      const ModelCoefficients coeffs = compute_coefficients(cal, tax);
      const LinearSystem sys = linearize(cal, coeffs);
      const PolicyFunction policy = solve_saddle_path(sys);
      out.entries.push_back({tax, impulse_response(policy, sys, shock, horizon)});
    } catch (const solve_error& e) {
      throw solve_error(e.kind, e.root1, e.root2, tag(e.what()));
    } catch (const validation_error& e) {
      throw validation_error(tag(e.what()));
    }
  }
  return out;
}

ReinforcementReport compare_reinforcement(const Calibration& cal, ShockKind shock,
                                          const TaxPolicy& pair, int horizon) {
  if (!(pair.tau_s > 0.0 && pair.tau_f > 0.0)) {
    throw validation_error("reinforcement comparison needs both tax rates positive");
  }

  const auto peak_at = [&](TaxPolicy tax) {
    const ModelCoefficients coeffs = compute_coefficients(cal, tax);
    const LinearSystem sys = linearize(cal, coeffs);
    const PolicyFunction policy = solve_saddle_path(sys);
    return impulse_response(policy, sys, ShockSpec{shock, 1.0}, horizon).peak_abs;
  };

  ReinforcementReport r;
  r.shock = shock;
  r.peak_baseline = peak_at({0.0, 0.0});
  r.peak_stock_only = peak_at({pair.tau_s, 0.0});
  r.peak_flow_only = peak_at({0.0, pair.tau_f});
  r.peak_joint = peak_at(pair);
  r.dev_stock_only = std::abs(r.peak_stock_only - r.peak_baseline);
  r.dev_flow_only = std::abs(r.peak_flow_only - r.peak_baseline);
  r.dev_joint = std::abs(r.peak_joint - r.peak_baseline);
  r.joint_exceeds_each_single =
      r.dev_joint > r.dev_stock_only && r.dev_joint > r.dev_flow_only;
  return r;
}

}  // namespace hausdyn
