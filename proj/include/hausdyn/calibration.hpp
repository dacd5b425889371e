#ifndef HAUSDYN_CALIBRATION_HPP
#define HAUSDYN_CALIBRATION_HPP

#include <stdexcept>

namespace hausdyn {

// Thrown when a parameter set violates one of the documented constraints.
// The message names the offending field or quantity.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Annual-frequency calibration of the housing market model: one period is
// one year, all rates are annual decimals, innovation sizes are standard
// deviations. The defaults are the baseline parameterization.
struct Calibration {
  double alpha = 0.85;      // consumption share in utility, in (0,1)
  double gamma = 0.80;      // loan-to-value ratio, in (0,1)
  double delta = 0.02;      // housing depreciation rate, in (0,1)
  double n_bar = 0.01;      // steady-state population growth rate
  double pi_bar = 0.03;     // steady-state inflation rate
  double R_bar = 0.05;      // steady-state nominal interest rate
  double Rm_bar = 0.08;     // steady-state nominal mortgage rate
  double c_over_h = 0.267;  // steady-state consumption/housing ratio
  double q_bar = 1.0;       // steady-state real housing price
  double h_bar = 1.0;       // steady-state per-capita housing stock
  double rho_R = 0.8;       // AR(1) persistence of the log interest rate
  double rho_n = 0.8;       // AR(1) persistence of log population growth
  double sigma_R = 0.1;     // s.d. of the interest-rate innovation
  double sigma_n = 0.1;     // s.d. of the population-growth innovation
};

// Per-period housing taxes: tau_s is levied on the value of the housing
// stock held, tau_f on the value of net housing investment.
struct TaxPolicy {
  double tau_s = 0.0;
  double tau_f = 0.0;
};

// Reduced-form quantities implied by a (Calibration, TaxPolicy) pair.
//
// The demand side is the log-linear equation
//
//   ln q[t] = k1 - w1 ln h[t] + w2 E_t ln q[t+1]
//             + w3 (R[t+1] - Rm[t+1]) - w2 (R[t+1] - pi[t+1])
//
// with weights fixed by the steady state,
//
//   w1 = m / (m + ((1-delta)(1+tau_f) - r) q),   m = ((1-alpha)/alpha) c/h
//   w2 = 1 - w1
//   w3 = (1+Rm-R) beta / ((1+Rm-R) beta + theta)
//   theta = 1 - gamma + tau_f + tau_s
//
// and k1 backed out so the equation holds exactly at the steady state.
// The supply side is the stock accumulation law
//
//   h[t+1] - h[t] = kappa q[t] - (n[t] + delta) h[t]
//
// whose steady state pins kappa = (n + delta) h / q.
struct ModelCoefficients {
  double theta;
  double beta;   // subjective discount factor, (1+pi)/(1+R)
  double r;      // steady-state real interest rate, R - pi
  double w1;
  double w2;
  double w3;
  double kappa;
  double k1;     // demand intercept
};

Calibration default_calibration();

void validate(const Calibration& cal);
void validate(const TaxPolicy& tax);

// Discount factor consistent with the steady state of the savings Euler
// condition. Rejects values outside (0,1).
double derive_beta(const Calibration& cal);

// Evaluates all reduced-form coefficients. Throws validation_error when an
// input constraint or a coefficient invariant (w1 in (0,1), w3 in (0,1),
// kappa > 0, 1/w2 > 1) fails. Pure: equal inputs give identical outputs.
ModelCoefficients compute_coefficients(const Calibration& cal, const TaxPolicy& tax);

// Gap between the marginal-rate-of-substitution side and the user-cost side
// of the intratemporal housing optimality condition, evaluated at the steady
// state. Diagnostic only: the baseline sets c/h independently, so a nonzero
// gap is reported, never raised.
double steady_state_demand_residual(const Calibration& cal, const TaxPolicy& tax);

}  // namespace hausdyn

#endif  // HAUSDYN_CALIBRATION_HPP
