#include "hausdyn/solver.hpp"

#include <cmath>
#include <sstream>

namespace hausdyn {

namespace {

// Both roots this close to the unit circle is a calibration problem, not a
// solvable model; refuse to pick one.
constexpr double kUnitCircleTie = 1e-10;

std::string describe(std::complex<double> mu1, std::complex<double> mu2) {
  std::ostringstream os;
  os << "closed-loop roots " << mu1.real();
  if (mu1.imag() != 0.0) os << (mu1.imag() < 0 ? " - " : " + ") << std::abs(mu1.imag()) << "i";
  os << " and " << mu2.real();
  if (mu2.imag() != 0.0) os << (mu2.imag() < 0 ? " - " : " + ") << std::abs(mu2.imag()) << "i";
  os << " (moduli " << std::abs(mu1) << ", " << std::abs(mu2) << ")";
  return os.str();
}

// Index of the unique root strictly inside the unit circle; throws otherwise.
int select_stable(std::complex<double> mu1, std::complex<double> mu2) {
  const double m1 = std::abs(mu1);
  const double m2 = std::abs(mu2);
  if (std::abs(m1 - 1.0) <= kUnitCircleTie && std::abs(m2 - 1.0) <= kUnitCircleTie) {
    throw solve_error(solve_error::Kind::indeterminacy, mu1, mu2,
                      "both roots sit on the unit circle: " + describe(mu1, mu2));
  }
  const bool s1 = m1 < 1.0;
  const bool s2 = m2 < 1.0;
  if (s1 && s2) {
    throw solve_error(solve_error::Kind::indeterminacy, mu1, mu2,
                      "both roots stable, solution indeterminate: " + describe(mu1, mu2));
  }
  if (!s1 && !s2) {
    throw solve_error(solve_error::Kind::no_stable_root, mu1, mu2,
                      "no stable root: " + describe(mu1, mu2));
  }
  return s1 ? 0 : 1;
}

}  // namespace

std::array<std::complex<double>, 2> endogenous_roots(const LinearSystem& sys) {
  if (!(sys.d_qq1 > 0.0)) {
    throw validation_error("d_qq1 must be positive for a forward-looking demand equation");
  }
  // companion matrix of (h_hat, q_hat):  [a_hh, a_hq; -d_qh/d_qq1, 1/d_qq1]
  const double trace = sys.a_hh + 1.0 / sys.d_qq1;
  const double det = (sys.a_hh + sys.a_hq * sys.d_qh) / sys.d_qq1;
  const double disc = trace * trace - 4.0 * det;
  if (disc < 0.0) {
    const double re = 0.5 * trace;
    const double im = 0.5 * std::sqrt(-disc);
    return {std::complex<double>(re, im), std::complex<double>(re, -im)};
  }
  const double sq = std::sqrt(disc);
  const double s = 0.5 * (trace + std::copysign(sq, trace));
  const double mu1 = s;
  const double mu2 = (s != 0.0) ? det / s : 0.0;
  return {std::complex<double>(mu1, 0.0), std::complex<double>(mu2, 0.0)};
}

PolicyFunction solve_saddle_path(const LinearSystem& sys) {
  if (!(sys.d_qq1 > 0.0)) {
    throw validation_error("d_qq1 must be positive for a forward-looking demand equation");
  }

  const double A = sys.d_qq1 * sys.a_hq;
  const double B = sys.d_qq1 * sys.a_hh - 1.0;
  const double C = sys.d_qh;

  double phi_h;
  double mu_stable;
  if (A == 0.0) {
    // supply unresponsive: the stock evolves on its own and the quadratic
    // degenerates to a linear equation
    const std::complex<double> mu1(sys.a_hh, 0.0);
    const std::complex<double> mu2(1.0 / sys.d_qq1, 0.0);
    const int idx = select_stable(mu1, mu2);
    if (idx != 0) {
      throw solve_error(solve_error::Kind::no_stable_root, mu1, mu2,
                        "stock root is explosive and the policy cannot stabilize it: " +
                            describe(mu1, mu2));
    }
    phi_h = -C / B;  // = d_qh / (1 - d_qq1 a_hh)
    mu_stable = sys.a_hh;
  } else {
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) {
      const double re_phi = -0.5 * B / A;
      const double im_phi = 0.5 * std::sqrt(-disc) / std::abs(A);
      const std::complex<double> mu1 = sys.a_hh + sys.a_hq * std::complex<double>(re_phi, im_phi);
      const std::complex<double> mu2 = sys.a_hh + sys.a_hq * std::complex<double>(re_phi, -im_phi);
      select_stable(mu1, mu2);  // a conjugate pair has equal moduli: always throws
      throw solve_error(solve_error::Kind::no_stable_root, mu1, mu2,
                        "complex root pair: " + describe(mu1, mu2));
    }
    const double sq = std::sqrt(disc);
    const double s = -0.5 * (B + std::copysign(sq, B));
    const double phi1 = s / A;
    const double phi2 = (s != 0.0) ? C / s : 0.0;
    const double mu1 = sys.a_hh + sys.a_hq * phi1;
    const double mu2 = sys.a_hh + sys.a_hq * phi2;
    const int idx = select_stable({mu1, 0.0}, {mu2, 0.0});
    phi_h = (idx == 0) ? phi1 : phi2;
    mu_stable = (idx == 0) ? mu1 : mu2;
  }

  // matching coefficients on R_hat and n_hat, linear once phi_h is fixed;
  // both denominators equal d_qq1 (mu_unstable - rho), nonzero at a saddle
  // with rho in [0,1)
  const double den_R = 1.0 - sys.d_qq1 * (sys.rho_R + sys.a_hq * phi_h);
  const double den_n = 1.0 - sys.d_qq1 * (sys.rho_n + sys.a_hq * phi_h);
  if (den_R == 0.0 || den_n == 0.0) {
    throw validation_error("shock persistence resonates with the unstable root");
  }

  PolicyFunction policy{};
  policy.phi_h = phi_h;
  policy.phi_R = sys.d_qR / den_R;
  policy.phi_n = sys.d_qq1 * sys.a_hn * phi_h / den_n;
  policy.closed_loop_h_root = mu_stable;
  return policy;
}

double policy_residual(const PolicyFunction& policy, const LinearSystem& sys,
                       double h_hat, double R_hat, double n_hat) {
  const double q = policy.phi_h * h_hat + policy.phi_R * R_hat + policy.phi_n * n_hat;
  const double h_next = sys.a_hh * h_hat + sys.a_hq * q + sys.a_hn * n_hat;
  const double q_next_expected = policy.phi_h * h_next
                               + policy.phi_R * sys.rho_R * R_hat
                               + policy.phi_n * sys.rho_n * n_hat;
  return q - (sys.d_qh * h_hat + sys.d_qq1 * q_next_expected + sys.d_qR * R_hat);
}

DeviationPath extended_path_oracle(const LinearSystem& sys, const StateDeviation& initial,
                                   int horizon, int truncation) {
  if (horizon < 1) throw validation_error("horizon must be >= 1");
  if (truncation < horizon + 200) {
    throw validation_error("truncation must be at least horizon + 200");
  }

  const auto solve_once = [&](int T) {
    std::vector<double> R(T + 1), n(T + 1);
    R[0] = initial.R_hat;
    n[0] = initial.n_hat;
    for (int t = 1; t <= T; ++t) {
      R[t] = sys.rho_R * R[t - 1];
      n[t] = sys.rho_n * n[t - 1];
    }

    // backward pass: q_hat[t] = a[t] h_hat[t] + c[t], terminal q_hat[T] = 0
    std::vector<double> a(T + 1, 0.0), c(T + 1, 0.0);
    for (int t = T - 1; t >= 0; --t) {
      const double den = 1.0 - sys.d_qq1 * a[t + 1] * sys.a_hq;
      if (den == 0.0 || !std::isfinite(den)) {
        throw no_convergence_error("backward pass degenerated; system not saddle-path stable");
      }
      a[t] = (sys.d_qh + sys.d_qq1 * a[t + 1] * sys.a_hh) / den;
      c[t] = (sys.d_qq1 * (a[t + 1] * sys.a_hn * n[t] + c[t + 1]) + sys.d_qR * R[t]) / den;
    }

    DeviationPath path;
    path.q_hat.resize(horizon);
    path.h_hat.resize(horizon);
    double h = initial.h_hat;
    for (int t = 0; t < horizon; ++t) {
      const double q = a[t] * h + c[t];
      path.q_hat[t] = q;
      path.h_hat[t] = h;
      h = sys.a_hh * h + sys.a_hq * q + sys.a_hn * n[t];
    }
    return path;
  };

  const DeviationPath coarse = solve_once(truncation);
  const DeviationPath fine = solve_once(2 * truncation);
  double worst = 0.0;
  for (int t = 0; t < horizon; ++t) {
    worst = std::max(worst, std::abs(coarse.q_hat[t] - fine.q_hat[t]));
    worst = std::max(worst, std::abs(coarse.h_hat[t] - fine.h_hat[t]));
  }
  if (!(worst < 1e-8)) {
    std::ostringstream msg;
    msg << "doubling the truncation moved the path by " << worst
        << " (tolerance 1e-8); increase the truncation";
    throw no_convergence_error(msg.str());
  }
  return fine;
}

}  // namespace hausdyn
