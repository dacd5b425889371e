#include <doctest.h>

#include "hausdyn/config.hpp"

using namespace hausdyn;

TEST_CASE("empty document yields the baseline defaults") {
  const RunConfig cfg = parse_config("");
  CHECK(cfg.calibration.alpha == 0.85);
  CHECK(cfg.calibration.gamma == 0.80);
  CHECK(cfg.calibration.delta == 0.02);
  CHECK(cfg.calibration.c_over_h == 0.267);
  CHECK(cfg.calibration.sigma_R == 0.1);
  CHECK(cfg.tax_policy.tau_s == 0.0);
  CHECK(cfg.tax_policy.tau_f == 0.0);
  CHECK(cfg.horizon == 40);
  CHECK(cfg.shock.kind == ShockKind::interest_rate);
  CHECK(cfg.shock.size_sd == 1.0);
  CHECK(cfg.tau_grid == std::vector<double>{0.0, 0.05, 0.10});
  CHECK(cfg.periods == 1000);
  CHECK(cfg.output_dir == "out");
  REQUIRE(cfg.formats.size() == 2);
  CHECK(cfg.formats[0] == OutputFormat::csv);
  CHECK(cfg.formats[1] == OutputFormat::svg);
}

TEST_CASE("keys parse and land in the right fields") {
  const RunConfig cfg = parse_config(
      "# comment line\n"
      "alpha = 0.9\n"
      "R_bar = 0.06   # trailing comment\n"
      "tau_s = 0.02\n"
      "tau_grid = [0, 0.05, 0.1]\n"
      "shock = population-growth\n"
      "shock_size_sd = 2.5\n"
      "horizon = 60\n"
      "seed = 18446744073709551615\n"
      "periods = 12\n"
      "command = sweep\n"
      "experiment = fig5\n"
      "output_dir = results\n"
      "formats = svg\n");
  CHECK(cfg.calibration.alpha == 0.9);
  CHECK(cfg.calibration.R_bar == 0.06);
  CHECK(cfg.tax_policy.tau_s == 0.02);
  CHECK(cfg.tau_grid == std::vector<double>{0.0, 0.05, 0.1});
  CHECK(cfg.shock.kind == ShockKind::population_growth);
  CHECK(cfg.shock.size_sd == 2.5);
  CHECK(cfg.horizon == 60);
  CHECK(cfg.seed == 18446744073709551615ull);
  CHECK(cfg.periods == 12);
  CHECK(cfg.command == Command::sweep);
  CHECK(cfg.experiment == Experiment::fig5);
  CHECK(cfg.output_dir == "results");
  REQUIRE(cfg.formats.size() == 1);
  CHECK(cfg.formats[0] == OutputFormat::svg);
}

TEST_CASE("parse errors carry the line and the key") {
  try {
    parse_config("alpha = 0.9\nnot_a_key = 1\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("not_a_key") != std::string::npos);
  }

  try {
    parse_config("alpha 0.9\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 1);
  }

  try {
    parse_config("alpha = zero\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("alpha") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_config("alpha = 0.9\nalpha = 0.8\n"), parse_error);
  CHECK_THROWS_AS(parse_config("tau_grid = [0, 0.05\n"), parse_error);
  CHECK_THROWS_AS(parse_config("formats = pdf\n"), parse_error);
  CHECK_THROWS_AS(parse_config("shock = oil-price\n"), parse_error);
  CHECK_THROWS_AS(parse_config("experiment = fig7\n"), parse_error);
}

TEST_CASE("validation errors name the violated constraint") {
  try {
    parse_config("sigma_R = -0.1\n");
    FAIL("expected validation_error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()) == "sigma_R must be >= 0");
  }

  CHECK_THROWS_AS(parse_config("horizon = 0\n"), validation_error);
  CHECK_THROWS_AS(parse_config("periods = -5\n"), validation_error);
  CHECK_THROWS_AS(parse_config("rho_R = 1.0\n"), validation_error);
  CHECK_THROWS_AS(parse_config("tau_grid = [0, -0.05]\n"), validation_error);
  CHECK_THROWS_AS(parse_config("shock_size_sd = -1\n"), validation_error);
}

TEST_CASE("format_config round-trips every field at full precision") {
  RunConfig cfg;
  cfg.calibration.alpha = 1.0 / 3.0;
  cfg.calibration.rho_R = 0.123456789012345678;
  cfg.calibration.sigma_n = 0.05 * (1.0 + 1e-15);
  cfg.tax_policy.tau_f = 0.07;
  cfg.command = Command::irf;
  cfg.experiment = Experiment::fig6;
  cfg.shock = {ShockKind::population_growth, 1.75};
  cfg.tau_grid = {0.0, 1.0 / 7.0};
  cfg.horizon = 17;
  cfg.seed = 987654321;
  cfg.periods = 99;
  cfg.output_dir = "some/dir";
  cfg.formats = {OutputFormat::svg};

  const RunConfig back = parse_config(format_config(cfg));
  CHECK(back.calibration.alpha == cfg.calibration.alpha);
  CHECK(back.calibration.rho_R == cfg.calibration.rho_R);
  CHECK(back.calibration.sigma_n == cfg.calibration.sigma_n);
  CHECK(back.tax_policy.tau_f == cfg.tax_policy.tau_f);
  CHECK(back.command == cfg.command);
  CHECK(back.experiment == cfg.experiment);
  CHECK(back.shock.kind == cfg.shock.kind);
  CHECK(back.shock.size_sd == cfg.shock.size_sd);
  CHECK(back.tau_grid == cfg.tau_grid);
  CHECK(back.horizon == cfg.horizon);
  CHECK(back.seed == cfg.seed);
  CHECK(back.periods == cfg.periods);
  CHECK(back.output_dir == cfg.output_dir);
  CHECK(back.formats == cfg.formats);
}
