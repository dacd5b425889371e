#include "hausdyn/calibration.hpp"

#include <cmath>
#include <sstream>

namespace hausdyn {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw validation_error(msg);
}

}  // namespace

Calibration default_calibration() { return Calibration{}; }

void validate(const Calibration& cal) {
  require(cal.alpha > 0.0 && cal.alpha < 1.0, "alpha must be in (0,1)");
  require(cal.gamma > 0.0 && cal.gamma < 1.0, "gamma must be in (0,1)");
  require(cal.delta > 0.0 && cal.delta < 1.0, "delta must be in (0,1)");
  require(cal.n_bar > 0.0, "n_bar must be > 0");
  require(cal.pi_bar > -1.0, "pi_bar must be > -1");
  require(cal.R_bar > 0.0, "R_bar must be > 0");
  require(cal.Rm_bar > 0.0, "Rm_bar must be > 0");
  require(cal.c_over_h > 0.0, "c_over_h must be > 0");
  require(cal.q_bar > 0.0, "q_bar must be > 0");
  require(cal.h_bar > 0.0, "h_bar must be > 0");
  require(cal.rho_R >= 0.0 && cal.rho_R < 1.0, "rho_R must be in [0,1)");
  require(cal.rho_n >= 0.0 && cal.rho_n < 1.0, "rho_n must be in [0,1)");
  require(cal.sigma_R >= 0.0, "sigma_R must be >= 0");
  require(cal.sigma_n >= 0.0, "sigma_n must be >= 0");
}

void validate(const TaxPolicy& tax) {
  require(tax.tau_s >= 0.0, "tau_s must be >= 0");
  require(tax.tau_f >= 0.0, "tau_f must be >= 0");
}

double derive_beta(const Calibration& cal) {
  const double beta = (1.0 + cal.pi_bar) / (1.0 + cal.R_bar);
  if (!(beta > 0.0 && beta < 1.0)) {
    std::ostringstream msg;
    msg << "discount factor (1+pi_bar)/(1+R_bar) = " << beta
        << " is outside (0,1); needs R_bar > pi_bar > -1";
    throw validation_error(msg.str());
  }
  return beta;
}

ModelCoefficients compute_coefficients(const Calibration& cal, const TaxPolicy& tax) {
  validate(cal);
  validate(tax);

  ModelCoefficients c{};
  c.theta = 1.0 - cal.gamma + tax.tau_f + tax.tau_s;
  require(c.theta > 0.0, "theta = 1 - gamma + tau_f + tau_s must be positive");
  c.beta = derive_beta(cal);
  c.r = cal.R_bar - cal.pi_bar;

  const double mrs = ((1.0 - cal.alpha) / cal.alpha) * cal.c_over_h;
  const double resale = ((1.0 - cal.delta) * (1.0 + tax.tau_f) - c.r) * cal.q_bar;
  require(resale > 0.0,
          "(1 - delta)(1 + tau_f) - (R_bar - pi_bar) must be positive");
  c.w1 = mrs / (mrs + resale);
  c.w2 = 1.0 - c.w1;

  const double premium = (1.0 + cal.Rm_bar - cal.R_bar) * c.beta;
  c.w3 = premium / (premium + c.theta);

  c.kappa = (cal.n_bar + cal.delta) * cal.h_bar / cal.q_bar;

  // intercept chosen so the demand equation holds exactly at the steady state
  c.k1 = (1.0 - c.w2) * std::log(cal.q_bar) + c.w1 * std::log(cal.h_bar)
       - c.w3 * (cal.R_bar - cal.Rm_bar) + c.w2 * (cal.R_bar - cal.pi_bar);

  require(c.w1 > 0.0 && c.w1 < 1.0, "w1 must lie in (0,1)");
  require(c.w3 > 0.0 && c.w3 < 1.0, "w3 must lie in (0,1)");
  require(c.kappa > 0.0, "kappa must be positive");
  require(1.0 / c.w2 > 1.0, "forward root 1/w2 must lie outside the unit circle");
  return c;
}

double steady_state_demand_residual(const Calibration& cal, const TaxPolicy& tax) {
  validate(cal);
  validate(tax);
  const double theta = 1.0 - cal.gamma + tax.tau_f + tax.tau_s;
  const double mrs = ((1.0 - cal.alpha) / cal.alpha) * cal.c_over_h;
  const double user_cost =
      cal.q_bar * (theta + (1.0 + cal.Rm_bar - cal.R_bar) * cal.gamma)
    - cal.q_bar * ((1.0 + tax.tau_f) * (1.0 - cal.delta) - cal.R_bar + cal.pi_bar);
  return mrs - user_cost;
}

}  // namespace hausdyn
