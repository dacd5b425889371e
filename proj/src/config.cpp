#include "hausdyn/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace hausdyn {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, const std::string& key, int line) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) {
    throw parse_error("key '" + key + "': expected a number, got '" + value + "'", line);
  }
  return out;
}

int parse_int(const std::string& value, const std::string& key, int line) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw parse_error("key '" + key + "': expected an integer, got '" + value + "'", line);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& value, const std::string& key, int line) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw parse_error("key '" + key + "': expected an unsigned integer, got '" + value + "'",
                      line);
  }
  return out;
}

// comma-separated items, with or without surrounding brackets
std::vector<std::string> split_list(std::string value, const std::string& key, int line) {
  value = trim(value);
  if (!value.empty() && value.front() == '[') {
    if (value.back() != ']') {
      throw parse_error("key '" + key + "': unterminated list '" + value + "'", line);
    }
    value = value.substr(1, value.size() - 2);
  }
  std::vector<std::string> items;
  std::string item;
  std::istringstream stream(value);
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      throw parse_error("key '" + key + "': empty list element", line);
    }
    items.push_back(item);
  }
  if (items.empty()) {
    throw parse_error("key '" + key + "': list must not be empty", line);
  }
  return items;
}

Command parse_command(const std::string& value, int line) {
  if (value == "steady") return Command::steady;
  if (value == "coeffs") return Command::coeffs;
  if (value == "irf") return Command::irf;
  if (value == "sweep") return Command::sweep;
  if (value == "simulate") return Command::simulate;
  if (value == "verify") return Command::verify;
  throw parse_error("key 'command': unknown command '" + value + "'", line);
}

Experiment parse_experiment_value(const std::string& value, int line) {
  if (value == "fig1") return Experiment::fig1;
  if (value == "fig2") return Experiment::fig2;
  if (value == "fig3") return Experiment::fig3;
  if (value == "fig4") return Experiment::fig4;
  if (value == "fig5") return Experiment::fig5;
  if (value == "fig6") return Experiment::fig6;
  throw parse_error("key 'experiment': expected fig1..fig6, got '" + value + "'", line);
}

ShockKind parse_shock(const std::string& value, int line) {
  if (value == "interest-rate") return ShockKind::interest_rate;
  if (value == "population-growth") return ShockKind::population_growth;
  throw parse_error(
      "key 'shock': expected interest-rate or population-growth, got '" + value + "'", line);
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value, int line) {
  Calibration& cal = cfg.calibration;
  if (key == "alpha") cal.alpha = parse_double(value, key, line);
  else if (key == "gamma") cal.gamma = parse_double(value, key, line);
  else if (key == "delta") cal.delta = parse_double(value, key, line);
  else if (key == "n_bar") cal.n_bar = parse_double(value, key, line);
  else if (key == "pi_bar") cal.pi_bar = parse_double(value, key, line);
  else if (key == "R_bar") cal.R_bar = parse_double(value, key, line);
  else if (key == "Rm_bar") cal.Rm_bar = parse_double(value, key, line);
  else if (key == "c_over_h") cal.c_over_h = parse_double(value, key, line);
  else if (key == "q_bar") cal.q_bar = parse_double(value, key, line);
  else if (key == "h_bar") cal.h_bar = parse_double(value, key, line);
  else if (key == "rho_R") cal.rho_R = parse_double(value, key, line);
  else if (key == "rho_n") cal.rho_n = parse_double(value, key, line);
  else if (key == "sigma_R") cal.sigma_R = parse_double(value, key, line);
  else if (key == "sigma_n") cal.sigma_n = parse_double(value, key, line);
  else if (key == "tau_s") cfg.tax_policy.tau_s = parse_double(value, key, line);
  else if (key == "tau_f") cfg.tax_policy.tau_f = parse_double(value, key, line);
  else if (key == "command") cfg.command = parse_command(value, line);
  else if (key == "experiment") cfg.experiment = parse_experiment_value(value, line);
  else if (key == "shock") cfg.shock.kind = parse_shock(value, line);
  else if (key == "shock_size_sd") cfg.shock.size_sd = parse_double(value, key, line);
  else if (key == "tau_grid") {
    cfg.tau_grid.clear();
    for (const std::string& item : split_list(value, key, line)) {
      cfg.tau_grid.push_back(parse_double(item, key, line));
    }
  } else if (key == "horizon") cfg.horizon = parse_int(value, key, line);
  else if (key == "seed") cfg.seed = parse_u64(value, key, line);
  else if (key == "periods") cfg.periods = parse_int(value, key, line);
  else if (key == "output_dir") {
    if (value.empty()) throw parse_error("key 'output_dir': must not be empty", line);
    cfg.output_dir = value;
  } else if (key == "formats") {
    cfg.formats.clear();
    for (const std::string& item : split_list(value, key, line)) {
      if (item == "csv") cfg.formats.push_back(OutputFormat::csv);
      else if (item == "svg") cfg.formats.push_back(OutputFormat::svg);
      else throw parse_error("key 'formats': expected csv or svg, got '" + item + "'", line);
    }
  } else {
    throw parse_error("unknown key '" + key + "'", line);
  }
}

void validate_run(const RunConfig& cfg) {
  validate(cfg.calibration);
  validate(cfg.tax_policy);
  if (!(cfg.shock.size_sd >= 0.0)) throw validation_error("shock_size_sd must be >= 0");
  if (cfg.horizon < 1) throw validation_error("horizon must be >= 1");
  if (cfg.periods < 1) throw validation_error("periods must be >= 1");
  for (double rate : cfg.tau_grid) {
    if (!(rate >= 0.0)) throw validation_error("tau_grid entries must be >= 0");
  }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw parse_error("expected 'key = value', got '" + line + "'", line_no);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw parse_error("missing key before '='", line_no);
    if (!seen.insert(key).second) throw parse_error("duplicate key '" + key + "'", line_no);
    apply_key(cfg, key, value, line_no);
  }
  validate_run(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw parse_error("cannot read config file " + file.string(), 0);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

namespace {

std::string full_precision(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

std::string format_config(const RunConfig& cfg) {
  const Calibration& cal = cfg.calibration;
  std::ostringstream out;
  out << "# hausdyn run configuration\n";
  out << "alpha = " << full_precision(cal.alpha) << "\n";
  out << "gamma = " << full_precision(cal.gamma) << "\n";
  out << "delta = " << full_precision(cal.delta) << "\n";
  out << "n_bar = " << full_precision(cal.n_bar) << "\n";
  out << "pi_bar = " << full_precision(cal.pi_bar) << "\n";
  out << "R_bar = " << full_precision(cal.R_bar) << "\n";
  out << "Rm_bar = " << full_precision(cal.Rm_bar) << "\n";
  out << "c_over_h = " << full_precision(cal.c_over_h) << "\n";
  out << "q_bar = " << full_precision(cal.q_bar) << "\n";
  out << "h_bar = " << full_precision(cal.h_bar) << "\n";
  out << "rho_R = " << full_precision(cal.rho_R) << "\n";
  out << "rho_n = " << full_precision(cal.rho_n) << "\n";
  out << "sigma_R = " << full_precision(cal.sigma_R) << "\n";
  out << "sigma_n = " << full_precision(cal.sigma_n) << "\n";
  out << "tau_s = " << full_precision(cfg.tax_policy.tau_s) << "\n";
  out << "tau_f = " << full_precision(cfg.tax_policy.tau_f) << "\n";
  out << "command = " << command_name(cfg.command) << "\n";
  out << "experiment = " << experiment_name(cfg.experiment) << "\n";
  out << "shock = " << shock_name(cfg.shock.kind) << "\n";
  out << "shock_size_sd = " << full_precision(cfg.shock.size_sd) << "\n";
  out << "tau_grid = [";
  for (std::size_t i = 0; i < cfg.tau_grid.size(); ++i) {
    if (i > 0) out << ", ";
    out << full_precision(cfg.tau_grid[i]);
  }
  out << "]\n";
  out << "horizon = " << cfg.horizon << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "periods = " << cfg.periods << "\n";
  out << "output_dir = " << cfg.output_dir << "\n";
  out << "formats = ";
  for (std::size_t i = 0; i < cfg.formats.size(); ++i) {
    if (i > 0) out << ", ";
    out << (cfg.formats[i] == OutputFormat::csv ? "csv" : "svg");
  }
  out << "\n";
  return out.str();
}

const char* command_name(Command c) {
  switch (c) {
    case Command::steady: return "steady";
    case Command::coeffs: return "coeffs";
    case Command::irf: return "irf";
    case Command::sweep: return "sweep";
    case Command::simulate: return "simulate";
    case Command::verify: return "verify";
  }
  return "?";
}

const char* shock_name(ShockKind k) {
  return k == ShockKind::interest_rate ? "interest-rate" : "population-growth";
}

}  // namespace hausdyn
