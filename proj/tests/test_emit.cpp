#include "ergodyn/emit.hpp"
#include "ergodyn/scenarios.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace ergodyn;

TEST_CASE("two-channel, three-point CSV") {
  TimeSeries s(uniform_grid(1.0, 3));
  s.add_channel("a", {1.0, 0.25, 0.1}, true);
  s.add_channel("b", {0.0, 0.75, 0.9}, true);
  const std::string csv = to_csv(s);
  CHECK(csv ==
        "t,a,b\n"
        "0,1,0\n"
        "0.5,0.25,0.75\n"
        "1,0.10000000000000001,0.90000000000000002\n");
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("CSV round trip reproduces the series exactly") {
  ScenarioConfig cfg;
  cfg.scenario = "two-mode-separable";
  cfg.t_max = 3.0;
  cfg.steps = 101;
  cfg.engine = Engine::exponential;
  const ScenarioResult r = run_scenario(cfg);
  const CsvTable t = parse_csv(to_csv(r.series));
  REQUIRE(t.header.size() == r.series.channels().size() + 1);
  REQUIRE(t.rows.size() == r.series.size());
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    CHECK(t.rows[k][0] == r.series.times()[k]);
    for (std::size_t c = 0; c < r.series.channels().size(); ++c)
      CHECK(t.rows[k][c + 1] == r.series.channels()[c].values[k]);
    // p_00, p_n0, p_0m, p_nm are the first four channels.
    CHECK(std::abs(t.rows[k][1] + t.rows[k][2] + t.rows[k][3] + t.rows[k][4] - 1.0) < 1e-9);
  }
  CHECK_THROWS(parse_csv("t,a\n1,2,3\n"));
}

TEST_CASE("outputs are byte-identical across runs") {
  ScenarioConfig cfg;
  cfg.scenario = "entangled-noon";
  cfg.n = 2;
  cfg.t_max = 4.0;
  cfg.steps = 301;
  const ScenarioResult a = run_scenario(cfg);
  const ScenarioResult b = run_scenario(cfg);
  CHECK(to_csv(a.series) == to_csv(b.series));
  CHECK(summary_json(cfg, a.summary, a.disagreement) == summary_json(cfg, b.summary, b.disagreement));
}

TEST_CASE("JSON summary echoes the config") {
  ScenarioConfig cfg;
  Summary s{{"omega_osc", 0.5}};
  const std::string j = summary_json(cfg, s, std::nullopt);
  CHECK(j.find("\"config\"") != std::string::npos);
  CHECK(j.find("\"scenario\": \"single-mode-superposition\"") != std::string::npos);
  CHECK(j.find("\"omega_osc\": 0.5") != std::string::npos);
  CHECK(j.find("\"disagreement\": null") != std::string::npos);
  CHECK(j.back() == '\n');
}

TEST_CASE("sweep table and file writing") {
  SweepTable t;
  t.parameter = "theta";
  t.values = {0.0, 1.0};
  t.rows = {{{"x", 1.0}}, {{"x", 2.0}, {"y", 3.0}}};
  t.disagreements.resize(2);
  CHECK(sweep_csv(t) == "theta,x,y\n0,1,nan\n1,2,3\n");

  CHECK_THROWS(write_text_file("/nonexistent/dir/out.csv", "x"));
  const std::string path = "emit_test_tmp.csv";
  write_text_file(path, "t,a\n0,1\n");
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "t,a\n0,1\n");
  std::remove(path.c_str());
}
