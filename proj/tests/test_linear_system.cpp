#include <doctest.h>

#include <cmath>

#include "hausdyn/linear_system.hpp"

using namespace hausdyn;

TEST_CASE("baseline linearization") {
  const Calibration cal = default_calibration();
  const ModelCoefficients c = compute_coefficients(cal, {});
  const LinearSystem sys = linearize(cal, c);

  CHECK(sys.a_hh == doctest::Approx(0.97).epsilon(1e-14));
  CHECK(sys.a_hq == doctest::Approx(0.03).epsilon(1e-14));
  CHECK(sys.a_hn == -0.01);
  CHECK(sys.d_qh == -c.w1);
  CHECK(sys.d_qq1 == c.w2);

  // (w3 - w2) R_bar rho_R, against the frozen value and the direct product
  CHECK(sys.d_qR == doctest::Approx(-0.0047381033210923294).epsilon(1e-12));
  CHECK(sys.d_qR == doctest::Approx((c.w3 - c.w2) * 0.05 * 0.8).epsilon(1e-15));
  CHECK(sys.d_qR < 0.0);  // w3 < w2: higher rates depress the price

  CHECK(sys.rho_R == cal.rho_R);
  CHECK(sys.rho_n == cal.rho_n);
  CHECK(sys.sigma_R == cal.sigma_R);
  CHECK(sys.sigma_n == cal.sigma_n);
}

TEST_CASE("degenerate stock dynamics: no depreciation, no population growth") {
  Calibration cal = default_calibration();
  cal.delta = 0.0;
  cal.n_bar = 0.0;

  // reduced form built by hand since kappa = 0 cannot come out of
  // compute_coefficients
  ModelCoefficients c{};
  c.theta = 1.0 - cal.gamma;
  c.beta = (1.0 + cal.pi_bar) / (1.0 + cal.R_bar);
  c.r = cal.R_bar - cal.pi_bar;
  const double mrs = ((1.0 - cal.alpha) / cal.alpha) * cal.c_over_h;
  c.w1 = mrs / (mrs + ((1.0 - cal.delta) - c.r) * cal.q_bar);
  c.w2 = 1.0 - c.w1;
  const double premium = (1.0 + cal.Rm_bar - cal.R_bar) * c.beta;
  c.w3 = premium / (premium + c.theta);
  c.kappa = 0.0;
  c.k1 = -c.w3 * (cal.R_bar - cal.Rm_bar) + c.w2 * (cal.R_bar - cal.pi_bar);

  const LinearSystem sys = linearize(cal, c);
  CHECK(sys.a_hh == 1.0);  // pure unit-root stock
  CHECK(sys.a_hn == 0.0);
  CHECK(sys.a_hq == 0.0);
}

TEST_CASE("linearize rejects coefficients from a different calibration") {
  const Calibration cal = default_calibration();
  ModelCoefficients c = compute_coefficients(cal, {});

  ModelCoefficients wrong_kappa = c;
  wrong_kappa.kappa += 1e-6;
  CHECK_THROWS_AS(linearize(cal, wrong_kappa), validation_error);

  ModelCoefficients wrong_beta = c;
  wrong_beta.beta += 1e-6;
  CHECK_THROWS_AS(linearize(cal, wrong_beta), validation_error);

  ModelCoefficients wrong_w2 = c;
  wrong_w2.w2 += 1e-9;
  CHECK_THROWS_AS(linearize(cal, wrong_w2), validation_error);

  // coefficients computed under a tax are inconsistent with k1/w3 checks
  // only through theta-dependent terms; swapping calibrations must trip
  Calibration other = cal;
  other.R_bar = 0.06;
  CHECK_THROWS_AS(linearize(other, c), validation_error);
}

TEST_CASE("tax dependence of the system entries") {
  const Calibration cal = default_calibration();
  const LinearSystem base = linearize(cal, compute_coefficients(cal, {}));
  const LinearSystem stock_taxed = linearize(cal, compute_coefficients(cal, {0.08, 0.0}));
  const LinearSystem flow_taxed = linearize(cal, compute_coefficients(cal, {0.0, 0.08}));

  // stock equation never moves with taxes
  for (const LinearSystem* sys : {&stock_taxed, &flow_taxed}) {
    CHECK(sys->a_hh == base.a_hh);
    CHECK(sys->a_hq == base.a_hq);
    CHECK(sys->a_hn == base.a_hn);
  }
  // tau_s reaches only the interest loading (through w3)
  CHECK(stock_taxed.d_qh == base.d_qh);
  CHECK(stock_taxed.d_qq1 == base.d_qq1);
  CHECK(stock_taxed.d_qR != base.d_qR);
  // tau_f reaches everything on the demand side
  CHECK(flow_taxed.d_qh != base.d_qh);
  CHECK(flow_taxed.d_qR != base.d_qR);
}

TEST_CASE("linear stock law is second-order accurate") {
  const Calibration cal = default_calibration();
  const ModelCoefficients c = compute_coefficients(cal, {});
  const LinearSystem sys = linearize(cal, c);

  const auto residual_at = [&](double eps) {
    const double dirs[][3] = {{1, 1, 1}, {1, -1, 1}, {-1, 1, -1}, {1, 0, 0},
                              {0, 1, 0}, {0, 0, 1},  {-1, -1, -1}};
    double worst = 0.0;
    for (const auto& d : dirs) {
      const double nl =
          nonlinear_stock_step(cal, c.kappa, eps * d[0], eps * d[1], eps * d[2]);
      const double lin =
          sys.a_hh * eps * d[0] + sys.a_hq * eps * d[1] + sys.a_hn * eps * d[2];
      worst = std::max(worst, std::abs(nl - lin));
    }
    return worst;
  };

  // halving the deviation must roughly quarter the residual
  const double r1 = residual_at(1e-2);
  const double r2 = residual_at(5e-3);
  CHECK(std::log2(r1 / r2) >= 1.9);

  // and over a decade the empirical order stays quadratic
  const double r3 = residual_at(1e-3);
  CHECK(std::log10(r1 / r3) >= 1.9);
}
