#pragma once

// Scenario configuration: flat `key = value` text, lists comma-separated.
// Every key is also accepted as a CLI flag of the same name.

#include "ergodyn/fock.hpp"

#include <map>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace ergodyn {

enum class Engine { analytic, exponential, rk4, all };

std::string_view to_string(Engine e);
Engine parse_engine(std::string_view s);

const std::vector<std::string>& scenario_names();

struct ScenarioConfig {
  std::string scenario = "single-mode-superposition";
  double theta = std::numbers::pi / 4;
  double phi = std::numbers::pi / 4;
  int n = 1;
  int m = 1;
  int N = 1;
  int M = 1;
  double omega = 1.0;
  double omega_a = 1.0;
  double omega_b = 1.0;
  std::vector<double> omegas;
  std::vector<int> occupations;
  double base_omega = 0.0;  // 0 disables the periodicity report
  double E0 = 0.0;
  std::vector<int> cutoffs;  // empty: smallest cutoffs holding the state
  double t_max = 10.0;
  int steps = 1001;
  Engine engine = Engine::all;
  bool comparison = false;
  double eps = 1e-2;
  double r_S = 1e-2;
  double r_E = 6.371e6;
  double L = 1e5;
  double omega_0 = 1.0;
  std::vector<double> amplitudes_re;
  std::vector<double> amplitudes_im;
  std::size_t dim_cap = kDefaultDimensionCap;
};

using KeyValues = std::map<std::string, std::string>;

const std::vector<std::string>& config_keys();

// Parses `key = value` lines; '#' starts a comment. Throws ValidationError
// with the line number on malformed input or unknown keys.
KeyValues parse_key_values(std::string_view text);
KeyValues read_config_file(const std::string& path);

// Applies the pairs in order; field-level ValidationError on bad values.
void apply(ScenarioConfig& cfg, const KeyValues& kv);

// Real literal, "pi", or products/quotients of those ("3*pi/8", "sqrt2").
double parse_real(std::string_view s);

// Sets a numeric field by name; ValidationError for unknown names.
void set_numeric(ScenarioConfig& cfg, const std::string& name, double value);
bool is_numeric_key(const std::string& name);

// Cross-field checks (cutoffs against occupations, grid, scenario rules).
void validate(const ScenarioConfig& cfg);

}  // namespace ergodyn
