#include "ergodyn/errors.hpp"
#include "ergodyn/scenarios.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace ergodyn;
using std::numbers::pi;

namespace {

ScenarioConfig quick(const std::string& name) {
  ScenarioConfig cfg;
  cfg.scenario = name;
  cfg.t_max = 5.0;
  cfg.steps = 201;
  return cfg;
}

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

}  // namespace

TEST_CASE("every scenario runs with all engines and agrees") {
  for (const auto& name : scenario_names()) {
    ScenarioConfig cfg = quick(name);
    if (name == "multimode-product") {
      cfg.omegas = {1.0, 1.5};
      cfg.occupations = {1, 2};
    } else if (name == "moon-degenerate") {
      cfg.M = 2;
      cfg.omega_b = 2.0;
    } else if (name == "custom-state") {
      cfg.omegas = {1.0};
      cfg.cutoffs = {2};
      cfg.amplitudes_re = {1.0, 0.0, 1.0};
    }
    CAPTURE(name);
    const ScenarioResult r = run_scenario(cfg);
    CHECK_FALSE(r.disagreement);
    CHECK(r.summary.count("dimension") == 1);
    CHECK(r.series.size() == 201);
    if (r.summary.count("max_residual_rk4")) CHECK(r.summary.at("max_residual_rk4") < kRk4Tolerance);
  }
}

TEST_CASE("eigenstates are stationary") {
  ScenarioConfig cfg = quick("single-eigenstate");
  cfg.n = 2;
  const ScenarioResult r = run_scenario(cfg);
  CHECK(spread(r.series.channel("p_n")) < 1e-14);
  CHECK(r.series.channel("p_n").front() == doctest::Approx(1.0));
}

TEST_CASE("comparison mode exposes constant standard-dynamics populations") {
  ScenarioConfig cfg = quick("two-mode-separable");
  cfg.comparison = true;
  cfg.engine = Engine::exponential;
  const ScenarioResult r = run_scenario(cfg);
  for (const char* ch : {"std_p_00", "std_p_n0", "std_p_0m", "std_p_nm"}) CHECK(spread(r.series.channel(ch)) < 1e-12);
  CHECK(r.series.has_channel("delta_p_00"));
  CHECK(r.summary.at("max_deviation_standard") > 0.1);
}

TEST_CASE("analytic engine alone") {
  ScenarioConfig cfg = quick("entangled-noon");
  cfg.engine = Engine::analytic;
  const ScenarioResult r = run_scenario(cfg);
  CHECK(r.series.has_channel("p_00"));
  CHECK(r.summary.count("max_residual_analytic") == 0);

  ScenarioConfig custom = quick("custom-state");
  custom.omegas = {1.0, 2.0};
  custom.cutoffs = {1, 1};
  custom.amplitudes_re = {1.0, 1.0, 1.0, 0.0};  // chi mixes two energies
  custom.engine = Engine::analytic;
  CHECK_THROWS_AS(run_scenario(custom), ValidationError);
}

TEST_CASE("dimension cap is enforced") {
  ScenarioConfig cfg = quick("multimode-product");
  cfg.omegas = {1.0, 1.0, 1.0, 1.0};
  cfg.occupations = {9, 9, 9, 9};
  CHECK_THROWS_AS(run_scenario(cfg), SizingError);
  cfg.occupations = {1, 1, 1, 1};
  cfg.dim_cap = 8;
  CHECK_THROWS_AS(run_scenario(cfg), SizingError);
}

TEST_CASE("multimode periodicity flag") {
  ScenarioConfig cfg = quick("multimode-product");
  cfg.omegas = {std::numbers::sqrt2, std::numbers::sqrt2};
  cfg.occupations = {1, 3};
  cfg.base_omega = 1.0;
  cfg.engine = Engine::exponential;
  CHECK(run_scenario(cfg).summary.at("periodic") == 1.0);
}

TEST_CASE("sweep over theta reproduces omega_osc = sin(theta) dE") {
  ScenarioConfig cfg = quick("single-mode-superposition");
  cfg.engine = Engine::exponential;
  cfg.omega = 1.5;
  const std::vector<double> thetas{0.0, pi / 8, pi / 4, 3 * pi / 8, pi / 2};
  const SweepTable t = sweep(cfg, "theta", thetas);
  REQUIRE(t.rows.size() == thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i)
    CHECK(t.rows[i].at("omega_osc") == doctest::Approx(std::sin(thetas[i]) * 1.5).epsilon(1e-12));
  CHECK(sweep(cfg, "theta", {}).rows.empty());
  CHECK_THROWS_AS(sweep(cfg, "scenario", {1.0}), ValidationError);
  CHECK_THROWS_AS(sweep(cfg, "n", {-1.0}), ValidationError);
}

TEST_CASE("sweep over eps: Dyson residual drops by about 100 per decade") {
  ScenarioConfig cfg = quick("moon-perturbative");
  cfg.N = 2;
  cfg.phi = pi / 3;
  cfg.t_max = pi;
  cfg.steps = 401;
  cfg.engine = Engine::exponential;
  const SweepTable t = sweep(cfg, "eps", {1e-2, 1e-3});
  const double ratio = t.rows[0].at("max_residual_dyson") / t.rows[1].at("max_residual_dyson");
  CHECK(ratio > 50.0);
  CHECK(ratio < 200.0);
}

TEST_CASE("catalog matches the scenario names") {
  const auto& cat = scenario_catalog();
  REQUIRE(cat.size() == scenario_names().size());
  for (std::size_t i = 0; i < cat.size(); ++i) CHECK(cat[i].name == scenario_names()[i]);
}
