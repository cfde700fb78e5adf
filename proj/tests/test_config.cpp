#include "ergodyn/config.hpp"
#include "ergodyn/errors.hpp"

#include <doctest.h>

#include <numbers>
#include <string>

using namespace ergodyn;

namespace {

std::string message_of(const std::string& text) {
  try {
    (void)parse_key_values(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("key = value parsing with comments and lists") {
  const auto kv = parse_key_values("# header\nscenario = two-mode-separable\n  theta = pi/8  # trailing\n\ncutoffs = 3, 4\n");
  CHECK(kv.at("scenario") == "two-mode-separable");
  CHECK(kv.at("theta") == "pi/8");
  ScenarioConfig cfg;
  apply(cfg, kv);
  CHECK(cfg.theta == doctest::Approx(std::numbers::pi / 8));
  CHECK(cfg.cutoffs == std::vector<int>{3, 4});
}

TEST_CASE("malformed config lines report the line number") {
  CHECK(message_of("theta = 1\nbogus\n").find("line 2") != std::string::npos);
  CHECK(message_of("theta = 1\nnot_a_key = 2\n").find("unknown key 'not_a_key'") != std::string::npos);
  CHECK_THROWS_AS(read_config_file("/nonexistent/dir/x.cfg"), ValidationError);
}

TEST_CASE("real literals") {
  CHECK(parse_real("3*pi/8") == doctest::Approx(3 * std::numbers::pi / 8));
  CHECK(parse_real("sqrt2") == doctest::Approx(std::numbers::sqrt2));
  CHECK(parse_real(" 1e-3 ") == 1e-3);
  CHECK_THROWS_AS(parse_real("abc"), ValidationError);
  CHECK_THROWS_AS(parse_real("1/0/2"), ValidationError);
}

TEST_CASE("field-level errors from apply") {
  ScenarioConfig cfg;
  auto err = [&cfg](const std::string& key, const std::string& value) {
    try {
      apply(cfg, {{key, value}});
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(err("n", "1.5").find("field 'n'") != std::string::npos);
  CHECK(err("theta", "x").find("field 'theta'") != std::string::npos);
  CHECK(err("engine", "euler").find("engine") != std::string::npos);
  CHECK(err("scenario", "nope").find("unknown scenario") != std::string::npos);
  CHECK(err("comparison", "maybe").find("field 'comparison'") != std::string::npos);
  CHECK(err("engine", "rk4").empty());
  CHECK(cfg.engine == Engine::rk4);
}

TEST_CASE("cross-field validation") {
  ScenarioConfig cfg;
  cfg.n = 3;
  cfg.cutoffs = {2};
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  cfg.cutoffs = {3};
  CHECK_NOTHROW(validate(cfg));
  cfg.E0 = 2.0;
  CHECK_THROWS_AS(validate(cfg), ValidationError);

  ScenarioConfig moon;
  moon.scenario = "moon-degenerate";
  moon.M = 2;
  moon.N = 1;
  moon.omega_b = 1.5;
  CHECK_THROWS_AS(validate(moon), ValidationError);
  moon.omega_b = 2.0;
  CHECK_NOTHROW(validate(moon));

  ScenarioConfig pert;
  pert.scenario = "moon-perturbative";
  pert.steps = 1000;
  CHECK_THROWS_AS(validate(pert), ValidationError);
  pert.steps = 1001;
  pert.eps = 0.5;
  CHECK_THROWS_AS(validate(pert), ValidationError);

  ScenarioConfig custom;
  custom.scenario = "custom-state";
  custom.omegas = {1.0};
  custom.cutoffs = {2};
  custom.amplitudes_re = {1.0, 1.0};
  CHECK_THROWS_AS(validate(custom), ValidationError);
}

TEST_CASE("numeric setters used by sweeps") {
  ScenarioConfig cfg;
  CHECK(is_numeric_key("theta"));
  CHECK(is_numeric_key("n"));
  CHECK_FALSE(is_numeric_key("scenario"));
  set_numeric(cfg, "n", 4.0);
  CHECK(cfg.n == 4);
  CHECK_THROWS_AS(set_numeric(cfg, "n", 4.5), ValidationError);
  CHECK_THROWS_AS(set_numeric(cfg, "nope", 1.0), ValidationError);
}
