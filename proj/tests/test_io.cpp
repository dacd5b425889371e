#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hausdyn/csv.hpp"
#include "hausdyn/plot.hpp"

using namespace hausdyn;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ImpulseResponse zero_irf(int horizon) {
  ImpulseResponse irf;
  irf.horizon = horizon;
  irf.q_hat.assign(horizon, 0.0);
  irf.h_hat.assign(horizon, 0.0);
  irf.x_hat.assign(horizon, 0.0);
  return irf;
}

SweepResult baseline_sweep(Experiment e) {
  const std::vector<double> grid = {0.0, 0.05, 0.10};
  return run_sweep(default_calibration(), e, grid, 40);
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
  size_t count = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.05) == "0.05");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-2.5e-7) == "-2.5e-07");
}

TEST_CASE("zero impulse response serializes to zero rows") {
  CHECK(irf_csv(zero_irf(2)) == "period,q_hat,h_hat,x_hat\n0,0,0,0\n1,0,0,0\n");
}

TEST_CASE("csv emission is byte-deterministic") {
  const SweepResult sweep = baseline_sweep(Experiment::fig1);
  const auto dir = std::filesystem::temp_directory_path();
  const auto file_a = dir / "hausdyn_sweep_a.csv";
  const auto file_b = dir / "hausdyn_sweep_b.csv";
  emit_csv(sweep, file_a);
  emit_csv(sweep, file_b);
  CHECK(slurp(file_a) == slurp(file_b));
  CHECK(slurp(file_a) == sweep_csv(sweep));
  std::filesystem::remove(file_a);
  std::filesystem::remove(file_b);
}

TEST_CASE("fig4 sweep rows vary the stock tax while the price columns repeat") {
  const SweepResult sweep = baseline_sweep(Experiment::fig4);
  const std::string csv = sweep_csv(sweep);

  std::vector<std::vector<std::string>> rows;
  std::istringstream stream(csv);
  std::string line;
  std::getline(stream, line);
  CHECK(line == "tau_s,tau_f,period,q_hat,h_hat,x_hat");
  while (std::getline(stream, line)) {
    std::vector<std::string> cells;
    std::istringstream cell_stream(line);
    std::string cell;
    while (std::getline(cell_stream, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 6);
    rows.push_back(cells);
  }
  REQUIRE(rows.size() == 3 * 40);

  for (int t = 0; t < 40; ++t) {
    CHECK(rows[t][0] == "0");
    CHECK(rows[40 + t][0] == "0.05");
    CHECK(rows[80 + t][0] == "0.1");
    // identical price path across the tau_s grid, to the printed digit
    CHECK(rows[t][3] == rows[40 + t][3]);
    CHECK(rows[t][3] == rows[80 + t][3]);
  }
}

TEST_CASE("simulated paths csv layout") {
  SimulatedPaths paths;
  paths.q_hat = {1.0, 2.0};
  paths.h_hat = {0.0, 0.5};
  paths.R_hat = {-0.1, -0.08};
  paths.n_hat = {0.0, 0.0};
  CHECK(paths_csv(paths) ==
        "period,q_hat,h_hat,R_hat,n_hat\n0,1,0,-0.1,0\n1,2,0.5,-0.08,0\n");
}

TEST_CASE("write_file reports unwritable paths") {
  CHECK_THROWS_AS(write_file("/nonexistent-dir-hausdyn/x.csv", "data"), io_error);
}

TEST_CASE("sweep plot carries one line per grid point and labelled axes") {
  const SweepResult sweep = baseline_sweep(Experiment::fig1);
  const std::string svg = sweep_svg(sweep);

  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_occurrences(svg, "<polyline") == 3);
  CHECK(svg.find("τ_s=0<") != std::string::npos);
  CHECK(svg.find("τ_s=0.05") != std::string::npos);
  CHECK(svg.find("τ_s=0.1") != std::string::npos);
  CHECK(svg.find(">periods<") != std::string::npos);
  CHECK(svg.find(">log deviation of q<") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  // determinism
  CHECK(sweep_svg(sweep) == svg);
}

TEST_CASE("joint-grid plot labels both taxes") {
  const SweepResult sweep = baseline_sweep(Experiment::fig6);
  const std::string svg = sweep_svg(sweep);
  CHECK(svg.find("τ_s=τ_f=0.05") != std::string::npos);
}

TEST_CASE("single impulse-response plot") {
  const Calibration cal = default_calibration();
  const LinearSystem sys = linearize(cal, compute_coefficients(cal, {}));
  const PolicyFunction policy = solve_saddle_path(sys);
  const ImpulseResponse irf =
      impulse_response(policy, sys, {ShockKind::population_growth, 1.0}, 40);
  const std::string svg = irf_svg(irf, {0.0, 0.02}, ShockKind::population_growth);
  CHECK(count_occurrences(svg, "<polyline") == 1);
  CHECK(svg.find("τ_s=0, τ_f=0.02") != std::string::npos);
  CHECK(svg.find("population-growth shock") != std::string::npos);
}
