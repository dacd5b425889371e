#ifndef HAUSDYN_CONFIG_HPP
#define HAUSDYN_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "hausdyn/simulation.hpp"

namespace hausdyn {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line_arg)
      : std::runtime_error(what), line(line_arg) {}
  int line;
};

enum class Command { steady, coeffs, irf, sweep, simulate, verify };
enum class OutputFormat { csv, svg };

// Flat key = value run configuration ('#' starts a comment). Unknown and
// duplicate keys are rejected; missing keys keep the baseline defaults
// below. See the README for the full schema.
struct RunConfig {
  Calibration calibration;
  Command command = Command::verify;
  Experiment experiment = Experiment::fig1;
  ShockSpec shock;
  TaxPolicy tax_policy;
  std::vector<double> tau_grid = {0.0, 0.05, 0.10};
  int horizon = 40;
  std::uint64_t seed = 42;
  int periods = 1000;
  std::string output_dir = "out";
  std::vector<OutputFormat> formats = {OutputFormat::csv, OutputFormat::svg};
};

// Throws parse_error (with the offending line) on malformed input and
// validation_error (naming the constraint) on out-of-range values.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& file);

// Canonical document that parses back to the same configuration, numeric
// fields preserved to full precision.
std::string format_config(const RunConfig& config);

const char* command_name(Command c);
const char* shock_name(ShockKind k);

}  // namespace hausdyn

#endif  // HAUSDYN_CONFIG_HPP
