#include "ergodyn/emit.hpp"

#include "ergodyn/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace ergodyn {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const TimeSeries& series) {
  out << 't';
  for (const auto& ch : series.channels()) out << ',' << ch.name;
  out << '\n';
  for (std::size_t k = 0; k < series.size(); ++k) {
    out << format_number(series.times()[k]);
    for (const auto& ch : series.channels()) out << ',' << format_number(ch.values[k]);
    out << '\n';
  }
}

std::string to_csv(const TimeSeries& series) {
  std::ostringstream out;
  write_csv(out, series);
  return out.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  auto cells = [](const std::string& l) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream s(l);
    while (std::getline(s, cell, ',')) out.push_back(cell);
    return out;
  };
  if (!std::getline(in, line)) throw ValidationError("csv: empty input");
  table.header = cells(line);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto c = cells(line);
    if (c.size() != table.header.size())
      throw ValidationError("csv line " + std::to_string(lineno) + ": wrong number of fields");
    std::vector<double> row;
    for (const auto& v : c) {
      std::size_t used = 0;
      row.push_back(std::stod(v, &used));
      if (used != v.size()) throw ValidationError("csv line " + std::to_string(lineno) + ": bad number");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

nlohmann::ordered_json config_echo(const ScenarioConfig& cfg) {
  nlohmann::ordered_json j;
  j["scenario"] = cfg.scenario;
  j["theta"] = cfg.theta;
  j["phi"] = cfg.phi;
  j["n"] = cfg.n;
  j["m"] = cfg.m;
  j["N"] = cfg.N;
  j["M"] = cfg.M;
  j["omega"] = cfg.omega;
  j["omega_a"] = cfg.omega_a;
  j["omega_b"] = cfg.omega_b;
  j["omegas"] = cfg.omegas;
  j["occupations"] = cfg.occupations;
  j["base_omega"] = cfg.base_omega;
  j["E0"] = cfg.E0;
  j["cutoffs"] = cfg.cutoffs;
  j["t_max"] = cfg.t_max;
  j["steps"] = cfg.steps;
  j["engine"] = std::string(to_string(cfg.engine));
  j["comparison"] = cfg.comparison;
  j["eps"] = cfg.eps;
  j["r_S"] = cfg.r_S;
  j["r_E"] = cfg.r_E;
  j["L"] = cfg.L;
  j["omega_0"] = cfg.omega_0;
  j["amplitudes_re"] = cfg.amplitudes_re;
  j["amplitudes_im"] = cfg.amplitudes_im;
  j["dim_cap"] = cfg.dim_cap;
  return j;
}

}  // namespace

std::string summary_json(const ScenarioConfig& cfg, const Summary& summary,
                         const std::optional<std::string>& disagreement) {
  nlohmann::ordered_json j;
  j["config"] = config_echo(cfg);
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  for (const auto& [k, v] : summary) s[k] = v;
  j["summary"] = s;
  j["disagreement"] = disagreement ? nlohmann::ordered_json(*disagreement) : nlohmann::ordered_json();
  return j.dump(2) + "\n";
}

std::string sweep_csv(const SweepTable& table) {
  std::set<std::string> fields;
  for (const auto& row : table.rows)
    for (const auto& [k, v] : row) fields.insert(k);
  std::ostringstream out;
  out << table.parameter;
  for (const auto& f : fields) out << ',' << f;
  out << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out << format_number(table.values[i]);
    for (const auto& f : fields) {
      const auto it = table.rows[i].find(f);
      out << ',' << (it == table.rows[i].end() ? std::string("nan") : format_number(it->second));
    }
    out << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace ergodyn
