#ifndef HAUSDYN_SOLVER_HPP
#define HAUSDYN_SOLVER_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hausdyn/linear_system.hpp"

namespace hausdyn {

// Linear feedback rule for the jump variable:
//   q_hat = phi_h h_hat + phi_R R_hat + phi_n n_hat
struct PolicyFunction {
  double phi_h;
  double phi_R;
  double phi_n;
  double closed_loop_h_root;  // a_hh + a_hq phi_h, inside the unit circle
};

class solve_error : public std::runtime_error {
 public:
  enum class Kind { no_stable_root, indeterminacy };

  solve_error(Kind kind, std::complex<double> root1, std::complex<double> root2,
              const std::string& what)
      : std::runtime_error(what), kind(kind), root1(root1), root2(root2) {}

  Kind kind;
  std::complex<double> root1, root2;  // closed-loop roots of the (h, q) block
};

class no_convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Characteristic roots of the endogenous (h_hat, q_hat) block. A unique
// stable solution requires exactly one of them outside the unit circle.
std::array<std::complex<double>, 2> endogenous_roots(const LinearSystem& sys);

// Unique stable solution by undetermined coefficients. phi_h is the root of
//
//   d_qq1 a_hq phi^2 + (d_qq1 a_hh - 1) phi + d_qh = 0
//
// whose closed-loop stock root a_hh + a_hq phi lies inside the unit circle
// (the closed form -d_qh-over-denominator when a_hq = 0); phi_R and phi_n
// follow by matching coefficients on R_hat and n_hat. Throws solve_error
// when both roots are stable (indeterminacy), both explosive, or both sit
// within 1e-10 of the unit circle.
PolicyFunction solve_saddle_path(const LinearSystem& sys);

// q_hat(state) minus the demand equation evaluated under the policy; zero
// for the exact solution up to rounding.
double policy_residual(const PolicyFunction& policy, const LinearSystem& sys,
                       double h_hat, double R_hat, double n_hat);

struct StateDeviation {
  double h_hat = 0.0;
  double R_hat = 0.0;
  double n_hat = 0.0;
};

struct DeviationPath {
  std::vector<double> q_hat;
  std::vector<double> h_hat;
};

// Independent perfect-foresight solution of the two-point boundary problem
// with terminal condition q_hat = 0 after `truncation` periods. A backward
// pass on the demand equation turns it into a time-varying affine rule
// q_hat[t] = a[t] h_hat[t] + c[t]; a forward pass then simulates the stock
// from the given initial state, expectations replaced by realized values.
// Returns the first `horizon` periods computed at twice the requested
// truncation, after checking that the doubling moved no returned value by
// 1e-8 or more (no_convergence_error otherwise, i.e. the truncation is too
// short for this system). Requires truncation >= horizon + 200.
DeviationPath extended_path_oracle(const LinearSystem& sys, const StateDeviation& initial,
                                   int horizon, int truncation);

}  // namespace hausdyn

#endif  // HAUSDYN_SOLVER_HPP
