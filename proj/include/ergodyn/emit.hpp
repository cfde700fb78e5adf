#pragma once

// CSV and JSON emission. Numbers are written with 17 significant digits and
// LF line endings so that repeated runs are byte-identical.

#include "ergodyn/config.hpp"
#include "ergodyn/dynamics.hpp"
#include "ergodyn/scenarios.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ergodyn {

std::string format_number(double v);

// Header `t,<channel>...`, no trailing delimiter.
void write_csv(std::ostream& out, const TimeSeries& series);
std::string to_csv(const TimeSeries& series);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
CsvTable parse_csv(const std::string& text);

// {"config": {...}, "summary": {...}, "disagreement": ...}
std::string summary_json(const ScenarioConfig& cfg, const Summary& summary,
                         const std::optional<std::string>& disagreement);

// One row per swept value; columns are the union of summary fields, sorted.
std::string sweep_csv(const SweepTable& table);

// Throws std::runtime_error if the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ergodyn
