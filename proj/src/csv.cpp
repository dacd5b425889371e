#include "hausdyn/csv.hpp"

#include <cstdio>
#include <fstream>

namespace hausdyn {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // fold -0 into 0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string irf_csv(const ImpulseResponse& irf) {
  std::string out = "period,q_hat,h_hat,x_hat\n";
  for (int t = 0; t < irf.horizon; ++t) {
    out += std::to_string(t);
    out += ',';
    out += format_number(irf.q_hat[t]);
    out += ',';
    out += format_number(irf.h_hat[t]);
    out += ',';
    out += format_number(irf.x_hat[t]);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = "tau_s,tau_f,period,q_hat,h_hat,x_hat\n";
  for (const SweepEntry& entry : sweep.entries) {
    const std::string taxes =
        format_number(entry.tax.tau_s) + ',' + format_number(entry.tax.tau_f) + ',';
    for (int t = 0; t < entry.irf.horizon; ++t) {
      out += taxes;
      out += std::to_string(t);
      out += ',';
      out += format_number(entry.irf.q_hat[t]);
      out += ',';
      out += format_number(entry.irf.h_hat[t]);
      out += ',';
      out += format_number(entry.irf.x_hat[t]);
      out += '\n';
    }
  }
  return out;
}

std::string paths_csv(const SimulatedPaths& paths) {
  std::string out = "period,q_hat,h_hat,R_hat,n_hat\n";
  for (std::size_t t = 0; t < paths.q_hat.size(); ++t) {
    out += std::to_string(t);
    out += ',';
    out += format_number(paths.q_hat[t]);
    out += ',';
    out += format_number(paths.h_hat[t]);
    out += ',';
    out += format_number(paths.R_hat[t]);
    out += ',';
    out += format_number(paths.n_hat[t]);
    out += '\n';
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw io_error("write failed for " + path.string());
}

void emit_csv(const ImpulseResponse& irf, const std::filesystem::path& path) {
  write_file(path, irf_csv(irf));
}

void emit_csv(const SweepResult& sweep, const std::filesystem::path& path) {
  write_file(path, sweep_csv(sweep));
}

void emit_csv(const SimulatedPaths& paths, const std::filesystem::path& path) {
  write_file(path, paths_csv(paths));
}

}  // namespace hausdyn
