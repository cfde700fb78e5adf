#pragma once

// Named end-to-end scenarios: build the mode system, initial state and U_p,
// evolve with the requested engines, compare against closed forms and
// (optionally) against standard dynamics.

#include "ergodyn/config.hpp"
#include "ergodyn/dynamics.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ergodyn {

// Scalar summary, keyed by field name (sorted, so emission is deterministic).
using Summary = std::map<std::string, double>;

// Gate tolerances for the engine-disagreement check.
inline constexpr double kAnalyticTolerance = 1e-9;
inline constexpr double kRk4Tolerance = 1e-8;

struct ScenarioResult {
  TimeSeries series;
  Summary summary;
  // Set when two exact routes disagree beyond tolerance.
  std::optional<std::string> disagreement;
};

ScenarioResult run_scenario(const ScenarioConfig& cfg);

struct SweepTable {
  std::string parameter;
  std::vector<double> values;
  std::vector<Summary> rows;
  std::vector<std::optional<std::string>> disagreements;
};

// One row per value, in input order. Rows are independent and run in parallel.
SweepTable sweep(const ScenarioConfig& cfg, const std::string& parameter,
                 const std::vector<double>& values);

struct ScenarioInfo {
  std::string name;
  std::string description;
};
const std::vector<ScenarioInfo>& scenario_catalog();

}  // namespace ergodyn
