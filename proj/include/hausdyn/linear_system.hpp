#ifndef HAUSDYN_LINEAR_SYSTEM_HPP
#define HAUSDYN_LINEAR_SYSTEM_HPP

#include "hausdyn/calibration.hpp"

namespace hausdyn {

// First-order dynamics in log deviations from the steady state,
// x_hat = ln x[t] - ln x_bar:
//
//   stock:   h_hat[t+1] = a_hh h_hat[t] + a_hq q_hat[t] + a_hn n_hat[t]
//   demand:  q_hat[t]   = d_qh h_hat[t] + d_qq1 E_t q_hat[t+1] + d_qR R_hat[t]
//   shocks:  R_hat[t+1] = rho_R R_hat[t] - e_R[t+1]
//            n_hat[t+1] = rho_n n_hat[t] + e_n[t+1]
//
// a_hh = 1 - delta - n_bar, a_hq = kappa q_bar / h_bar, a_hn = -n_bar,
// d_qh = -w1, d_qq1 = w2, d_qR = (w3 - w2) R_bar rho_R.
//
// The interest-rate terms of the demand equation are level deviations, so
// the log deviation enters scaled by R_bar, and the expected next-period
// rate is substituted with rho_R R_hat[t]. Inflation and the mortgage rate
// stay at their steady-state values. Note the interest innovation's minus
// sign: a positive e_R lowers the rate and raises the price.
struct LinearSystem {
  double a_hh, a_hq, a_hn;
  double d_qh, d_qq1, d_qR;
  double rho_R, rho_n;
  double sigma_R, sigma_n;  // innovation scales, carried along for simulation
};

// Builds the deviation-form system. Validity of the inputs is the caller's
// responsibility; what is checked (to 1e-12) is that `coeffs` really is the
// reduced form of `cal`: beta, r, kappa, w2 = 1 - w1, w3 against theta, and
// the steady-state consistency of k1. Throws validation_error otherwise.
LinearSystem linearize(const Calibration& cal, const ModelCoefficients& coeffs);

// One step of the exact stock accumulation law evaluated through levels and
// mapped back to log deviations; used to measure how fast the linear stock
// equation loses accuracy away from the steady state.
double nonlinear_stock_step(const Calibration& cal, double kappa,
                            double h_hat, double q_hat, double n_hat);

}  // namespace hausdyn

#endif  // HAUSDYN_LINEAR_SYSTEM_HPP
