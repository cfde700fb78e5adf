// ergodyn command line: run, sweep, compare, list-scenarios, selftest.

#include "ergodyn/acceptance.hpp"
#include "ergodyn/config.hpp"
#include "ergodyn/emit.hpp"
#include "ergodyn/errors.hpp"
#include "ergodyn/scenarios.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitDisagreement = 3;

struct Common {
  std::string config_path;
  std::string out_csv;
  std::string out_json;
  std::map<std::string, std::string> flags;  // only the flags actually given
};

void add_config_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "key = value config file");
  cmd->add_option("--out-csv", c.out_csv, "write the output CSV here");
  cmd->add_option("--out-json", c.out_json, "write the JSON summary here");
  for (const auto& key : ergodyn::config_keys())
    cmd->add_option_function<std::string>(
        "--" + key, [&c, key](const std::string& v) { c.flags[key] = v; }, "config key '" + key + "'");
}

std::size_t dim_cap_from_env() {
  const char* env = std::getenv("ERGODYN_DIM_CAP");
  if (!env || !*env) return ergodyn::kDefaultDimensionCap;
  const std::string s(env);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 1) throw ergodyn::ValidationError("ERGODYN_DIM_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

ergodyn::ScenarioConfig load(const Common& c) {
  ergodyn::ScenarioConfig cfg;
  cfg.dim_cap = dim_cap_from_env();
  if (!c.config_path.empty()) ergodyn::apply(cfg, ergodyn::read_config_file(c.config_path));
  ergodyn::apply(cfg, ergodyn::KeyValues(c.flags.begin(), c.flags.end()));
  return cfg;
}

int do_run(const Common& c, bool comparison) {
  ergodyn::ScenarioConfig cfg = load(c);
  if (comparison) cfg.comparison = true;
  const ergodyn::ScenarioResult r = ergodyn::run_scenario(cfg);
  const std::string json = ergodyn::summary_json(cfg, r.summary, r.disagreement);
  if (!c.out_csv.empty()) ergodyn::write_text_file(c.out_csv, ergodyn::to_csv(r.series));
  if (!c.out_json.empty()) ergodyn::write_text_file(c.out_json, json);
  if (c.out_csv.empty() && c.out_json.empty()) std::cout << json;
  if (r.disagreement) {
    std::cerr << "engine disagreement: " << *r.disagreement << '\n';
    return kExitDisagreement;
  }
  return 0;
}

int do_sweep(const Common& c, const std::string& parameter, const std::string& values_text) {
  const ergodyn::ScenarioConfig cfg = load(c);
  std::vector<double> values;
  std::string item;
  for (std::size_t start = 0; start <= values_text.size();) {
    const auto comma = values_text.find(',', start);
    item = values_text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.find_first_not_of(" \t") != std::string::npos) values.push_back(ergodyn::parse_real(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const ergodyn::SweepTable table = ergodyn::sweep(cfg, parameter, values);
  const std::string csv = ergodyn::sweep_csv(table);
  if (!c.out_csv.empty()) ergodyn::write_text_file(c.out_csv, csv);
  else std::cout << csv;
  int code = 0;
  for (std::size_t i = 0; i < table.disagreements.size(); ++i)
    if (table.disagreements[i]) {
      std::cerr << "engine disagreement at " << parameter << " = " << ergodyn::format_number(table.values[i])
                << ": " << *table.disagreements[i] << '\n';
      code = kExitDisagreement;
    }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Work-driven dynamics of bosonic modes"};
  app.require_subcommand(1);

  Common run_opts, cmp_opts, sweep_opts;
  auto* run = app.add_subcommand("run", "run one scenario");
  add_config_flags(run, run_opts);
  auto* cmp = app.add_subcommand("compare", "run with standard-dynamics comparison channels");
  add_config_flags(cmp, cmp_opts);
  auto* sw = app.add_subcommand("sweep", "summary table over values of one numeric parameter");
  add_config_flags(sw, sweep_opts);
  std::string parameter, values;
  sw->add_option("--parameter", parameter, "numeric config key to sweep")->required();
  sw->add_option("--values", values, "comma-separated values")->required();
  auto* list = app.add_subcommand("list-scenarios", "list the available scenarios");
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*run) return do_run(run_opts, false);
    if (*cmp) return do_run(cmp_opts, true);
    if (*sw) return do_sweep(sweep_opts, parameter, values);
    if (*list) {
      for (const auto& s : ergodyn::scenario_catalog()) std::cout << s.name << "\t" << s.description << '\n';
      return 0;
    }
    if (*self) return ergodyn::run_acceptance(std::cout) ? 0 : 1;
  } catch (const ergodyn::EngineDisagreement& e) {
    std::cerr << "engine disagreement: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::length_error& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
