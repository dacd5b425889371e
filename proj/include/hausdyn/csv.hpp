#ifndef HAUSDYN_CSV_HPP
#define HAUSDYN_CSV_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "hausdyn/simulation.hpp"

namespace hausdyn {

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 12-significant-digit decimal rendering; equal values always give equal
// bytes (negative zero normalized away).
std::string format_number(double value);

// period,q_hat,h_hat,x_hat
std::string irf_csv(const ImpulseResponse& irf);
// tau_s,tau_f,period,q_hat,h_hat,x_hat — one block of rows per grid point
std::string sweep_csv(const SweepResult& sweep);
// period,q_hat,h_hat,R_hat,n_hat
std::string paths_csv(const SimulatedPaths& paths);

void write_file(const std::filesystem::path& path, const std::string& content);

void emit_csv(const ImpulseResponse& irf, const std::filesystem::path& path);
void emit_csv(const SweepResult& sweep, const std::filesystem::path& path);
void emit_csv(const SimulatedPaths& paths, const std::filesystem::path& path);

}  // namespace hausdyn

#endif  // HAUSDYN_CSV_HPP
