#ifndef HAUSDYN_SIMULATION_HPP
#define HAUSDYN_SIMULATION_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hausdyn/solver.hpp"

namespace hausdyn {

enum class ShockKind { interest_rate, population_growth };

struct ShockSpec {
  ShockKind kind = ShockKind::interest_rate;
  double size_sd = 1.0;  // impulse magnitude in standard deviations, >= 0
};

struct ImpulseResponse {
  int horizon = 0;
  std::vector<double> q_hat;
  std::vector<double> h_hat;
  std::vector<double> x_hat;  // path of the shocked exogenous variable
  double peak_abs = 0.0;      // max_t |q_hat[t]|
  double sum_sq = 0.0;        // sum_t q_hat[t]^2
  int half_life = 0;          // first t past the peak with |q_hat| <= peak/2;
                              // horizon if not reached inside the window
};

// The six sweep experiments: which shock hits and which tax walks the grid.
//   fig1  interest rate   x  tau_s grid (tau_f = 0)
//   fig2  interest rate   x  tau_f grid (tau_s = 0)
//   fig3  interest rate   x  joint grid (tau_s = tau_f)
//   fig4  population      x  tau_s grid
//   fig5  population      x  tau_f grid
//   fig6  population      x  joint grid
enum class Experiment { fig1, fig2, fig3, fig4, fig5, fig6 };

ShockKind experiment_shock(Experiment e);
const char* experiment_name(Experiment e);

struct SweepEntry {
  TaxPolicy tax;
  ImpulseResponse irf;
};

struct SweepResult {
  Experiment experiment = Experiment::fig1;
  std::vector<SweepEntry> entries;
};

// Deterministic standard-normal stream (mt19937_64 + Box-Muller); a given
// seed produces the same draws on every platform.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Single one-time innovation of size_sd standard deviations at t = 0, all
// other innovations zero. The interest impulse is a positive e_R, which
// enters the rate process with a minus sign, so the price response at t = 0
// is positive.
ImpulseResponse impulse_response(const PolicyFunction& policy, const LinearSystem& sys,
                                 const ShockSpec& shock, int horizon);

struct SimulatedPaths {
  std::vector<double> q_hat, h_hat, R_hat, n_hat;
};

// Propagates the given innovation sequences from a zero initial state.
// e_R and e_n must have equal length; entry t is the innovation hitting
// period t.
SimulatedPaths simulate_with_innovations(const PolicyFunction& policy, const LinearSystem& sys,
                                         std::span<const double> e_R,
                                         std::span<const double> e_n);

// Gaussian innovations scaled by sigma_R / sigma_n from a seeded generator;
// identical seeds give bit-identical paths.
SimulatedPaths stochastic_simulate(const PolicyFunction& policy, const LinearSystem& sys,
                                   std::uint64_t seed, int periods);

// Re-derives coefficients, linear system, and policy at every grid point,
// then computes that point's impulse response. Solver and validation errors
// are rethrown tagged with the offending grid point.
SweepResult run_sweep(const Calibration& cal, Experiment experiment,
                      std::span<const double> tax_grid, int horizon, double size_sd = 1.0);

struct ReinforcementReport {
  ShockKind shock = ShockKind::interest_rate;
  double peak_baseline = 0.0;    // (0, 0)
  double peak_stock_only = 0.0;  // (tau_s, 0)
  double peak_flow_only = 0.0;   // (0, tau_f)
  double peak_joint = 0.0;       // (tau_s, tau_f)
  double dev_stock_only = 0.0;   // |peak - baseline|
  double dev_flow_only = 0.0;
  double dev_joint = 0.0;
  bool joint_exceeds_each_single = false;
};

// Peak responses under no tax, each tax alone, and both taxes together.
// Requires both rates of `pair` to be strictly positive.
ReinforcementReport compare_reinforcement(const Calibration& cal, ShockKind shock,
                                          const TaxPolicy& pair, int horizon = 40);

}  // namespace hausdyn

#endif  // HAUSDYN_SIMULATION_HPP
