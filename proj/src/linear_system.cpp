#include "hausdyn/linear_system.hpp"

#include <cmath>
#include <sstream>

namespace hausdyn {

namespace {

void check_close(double got, double implied, const char* name) {
  if (!(std::abs(got - implied) <= 1e-12)) {
    std::ostringstream msg;
    msg << "coefficients inconsistent with calibration: " << name << " is " << got
        << " but the calibration implies " << implied;
    throw validation_error(msg.str());
  }
}

}  // namespace

LinearSystem linearize(const Calibration& cal, const ModelCoefficients& coeffs) {
  check_close(coeffs.beta, (1.0 + cal.pi_bar) / (1.0 + cal.R_bar), "beta");
  check_close(coeffs.r, cal.R_bar - cal.pi_bar, "r");
  check_close(coeffs.kappa, (cal.n_bar + cal.delta) * cal.h_bar / cal.q_bar, "kappa");
  check_close(coeffs.w2, 1.0 - coeffs.w1, "w2");
  const double premium = (1.0 + cal.Rm_bar - cal.R_bar) * coeffs.beta;
  check_close(coeffs.w3, premium / (premium + coeffs.theta), "w3");
  check_close(coeffs.k1,
              (1.0 - coeffs.w2) * std::log(cal.q_bar) + coeffs.w1 * std::log(cal.h_bar)
                  - coeffs.w3 * (cal.R_bar - cal.Rm_bar)
                  + coeffs.w2 * (cal.R_bar - cal.pi_bar),
              "k1");

  LinearSystem sys{};
  sys.a_hh = 1.0 - cal.delta - cal.n_bar;
  sys.a_hq = coeffs.kappa * cal.q_bar / cal.h_bar;
  sys.a_hn = -cal.n_bar;
  sys.d_qh = -coeffs.w1;
  sys.d_qq1 = coeffs.w2;
  sys.d_qR = (coeffs.w3 - coeffs.w2) * cal.R_bar * cal.rho_R;
  sys.rho_R = cal.rho_R;
  sys.rho_n = cal.rho_n;
  sys.sigma_R = cal.sigma_R;
  sys.sigma_n = cal.sigma_n;
  return sys;
}

double nonlinear_stock_step(const Calibration& cal, double kappa,
                            double h_hat, double q_hat, double n_hat) {
  const double h = cal.h_bar * std::exp(h_hat);
  const double q = cal.q_bar * std::exp(q_hat);
  const double n = cal.n_bar * std::exp(n_hat);
  const double h_next = (1.0 - cal.delta - n) * h + kappa * q;
  return std::log(h_next / cal.h_bar);
}

}  // namespace hausdyn
