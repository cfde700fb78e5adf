#include "ergodyn/config.hpp"

#include "ergodyn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ergodyn {

namespace {

std::string trim(std::string_view s) {
  auto b = s.begin();
  auto e = s.end();
  while (b != e && std::isspace(static_cast<unsigned char>(*b))) ++b;
  while (e != b && std::isspace(static_cast<unsigned char>(*(e - 1)))) --e;
  return std::string(b, e);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

double parse_atom(const std::string& a) {
  if (a == "pi") return std::numbers::pi;
  if (a == "sqrt2") return std::numbers::sqrt2;
  double v = 0.0;
  const char* first = a.data();
  const char* last = a.data() + a.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || a.empty())
    throw ValidationError("not a number: '" + a + "'");
  return v;
}

double parse_product(const std::string& s) {
  double v = 1.0;
  for (const auto& f : split(s, '*')) v *= parse_atom(f);
  return v;
}

int parse_int(const std::string& key, const std::string& s) {
  const double v = parse_real(s);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw ValidationError("field '" + key + "': expected an integer, got '" + s + "'");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ValidationError("field '" + key + "': expected a boolean, got '" + s + "'");
}

std::vector<double> parse_real_list(const std::string& key, const std::string& s) {
  std::vector<double> out;
  if (trim(s).empty()) return out;
  for (const auto& item : split(s, ',')) {
    try {
      out.push_back(parse_real(item));
    } catch (const ValidationError& e) {
      throw ValidationError("field '" + key + "': " + e.what());
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& s) {
  std::vector<int> out;
  if (trim(s).empty()) return out;
  for (const auto& item : split(s, ',')) out.push_back(parse_int(key, item));
  return out;
}

double* real_field(ScenarioConfig& c, const std::string& k) {
  if (k == "theta") return &c.theta;
  if (k == "phi") return &c.phi;
  if (k == "omega") return &c.omega;
  if (k == "omega_a") return &c.omega_a;
  if (k == "omega_b") return &c.omega_b;
  if (k == "base_omega") return &c.base_omega;
  if (k == "E0") return &c.E0;
  if (k == "t_max") return &c.t_max;
  if (k == "eps") return &c.eps;
  if (k == "r_S") return &c.r_S;
  if (k == "r_E") return &c.r_E;
  if (k == "L") return &c.L;
  if (k == "omega_0") return &c.omega_0;
  return nullptr;
}

int* int_field(ScenarioConfig& c, const std::string& k) {
  if (k == "n") return &c.n;
  if (k == "m") return &c.m;
  if (k == "N") return &c.N;
  if (k == "M") return &c.M;
  if (k == "steps") return &c.steps;
  return nullptr;
}

}  // namespace

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::analytic: return "analytic";
    case Engine::exponential: return "exponential";
    case Engine::rk4: return "rk4";
    case Engine::all: return "all";
  }
  return "all";
}

Engine parse_engine(std::string_view s) {
  if (s == "analytic") return Engine::analytic;
  if (s == "exponential") return Engine::exponential;
  if (s == "rk4") return Engine::rk4;
  if (s == "all") return Engine::all;
  throw ValidationError("field 'engine': expected one of analytic, exponential, rk4, all; got '" +
                        std::string(s) + "'");
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{
      "single-mode-superposition", "single-eigenstate", "two-mode-separable",
      "multimode-product",         "entangled-noon",    "moon-degenerate",
      "moon-perturbative",         "gravitational-mzi", "custom-state"};
  return names;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "scenario", "theta",      "phi",   "n",     "m",          "N",
      "M",        "omega",      "omega_a", "omega_b", "omegas",  "occupations",
      "base_omega", "E0",       "cutoffs", "t_max", "steps",      "engine",
      "comparison", "eps",      "r_S",   "r_E",   "L",          "omega_0",
      "amplitudes_re", "amplitudes_im"};
  return keys;
}

double parse_real(std::string_view text) {
  const std::string s = trim(text);
  const auto parts = split(s, '/');
  if (parts.empty() || parts.size() > 2) throw ValidationError("not a number: '" + s + "'");
  double v = parse_product(parts[0]);
  if (parts.size() == 2) {
    const double d = parse_product(parts[1]);
    if (d == 0.0) throw ValidationError("division by zero in '" + s + "'");
    v /= d;
  }
  return v;
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  const auto& keys = config_keys();
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ValidationError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    kv[key] = value;
  }
  return kv;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key_values(buf.str());
}

void apply(ScenarioConfig& cfg, const KeyValues& kv) {
  for (const auto& [key, value] : kv) {
    try {
      if (double* r = real_field(cfg, key)) {
        *r = parse_real(value);
      } else if (int* i = int_field(cfg, key)) {
        *i = parse_int(key, value);
      } else if (key == "scenario") {
        const auto& names = scenario_names();
        if (std::find(names.begin(), names.end(), value) == names.end())
          throw ValidationError("field 'scenario': unknown scenario '" + value + "'");
        cfg.scenario = value;
      } else if (key == "engine") {
        cfg.engine = parse_engine(value);
      } else if (key == "comparison") {
        cfg.comparison = parse_bool(key, value);
      } else if (key == "omegas") {
        cfg.omegas = parse_real_list(key, value);
      } else if (key == "occupations") {
        cfg.occupations = parse_int_list(key, value);
      } else if (key == "cutoffs") {
        cfg.cutoffs = parse_int_list(key, value);
      } else if (key == "amplitudes_re") {
        cfg.amplitudes_re = parse_real_list(key, value);
      } else if (key == "amplitudes_im") {
        cfg.amplitudes_im = parse_real_list(key, value);
      } else {
        throw ValidationError("unknown key '" + key + "'");
      }
    } catch (const ValidationError& e) {
      const std::string what = e.what();
      if (what.rfind("field '", 0) == 0 || what.rfind("unknown key", 0) == 0) throw;
      throw ValidationError("field '" + key + "': " + what);
    }
  }
}

bool is_numeric_key(const std::string& name) {
  ScenarioConfig probe;
  return real_field(probe, name) != nullptr || int_field(probe, name) != nullptr;
}

void set_numeric(ScenarioConfig& cfg, const std::string& name, double value) {
  if (double* r = real_field(cfg, name)) {
    *r = value;
  } else if (int* i = int_field(cfg, name)) {
    if (value != std::floor(value))
      throw ValidationError("parameter '" + name + "' takes integer values");
    *i = static_cast<int>(value);
  } else {
    throw ValidationError("unknown parameter '" + name + "'");
  }
}

namespace {

void fail(const std::string& field, const std::string& msg) {
  throw ValidationError("field '" + field + "': " + msg);
}

void require_positive(const std::string& field, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) fail(field, "must be finite and > 0");
}

void require_occ(const std::string& field, int v) {
  if (v < 1) fail(field, "occupation must be >= 1");
}

void require_cutoffs(const ScenarioConfig& cfg, const std::vector<int>& needed) {
  if (cfg.cutoffs.empty()) return;
  if (cfg.cutoffs.size() != needed.size())
    fail("cutoffs", "expected " + std::to_string(needed.size()) + " entries");
  for (std::size_t i = 0; i < needed.size(); ++i)
    if (cfg.cutoffs[i] < needed[i])
      fail("cutoffs", "cutoff " + std::to_string(cfg.cutoffs[i]) + " of mode " + std::to_string(i) +
                          " is below the referenced occupation " + std::to_string(needed[i]));
}

}  // namespace

void validate(const ScenarioConfig& cfg) {
  if (cfg.steps < 2) fail("steps", "must be >= 2");
  require_positive("t_max", cfg.t_max);
  const std::string& s = cfg.scenario;

  if (s == "single-mode-superposition" || s == "single-eigenstate") {
    require_occ("n", cfg.n);
    require_positive("omega", cfg.omega);
    if (!(cfg.E0 < cfg.omega)) fail("E0", "must be below omega so the vacuum stays the unique ground state");
    require_cutoffs(cfg, {cfg.n});
  } else if (s == "two-mode-separable" || s == "entangled-noon") {
    require_occ("n", cfg.n);
    require_occ("m", cfg.m);
    require_positive("omega_a", cfg.omega_a);
    require_positive("omega_b", cfg.omega_b);
    require_cutoffs(cfg, {cfg.n, cfg.m});
  } else if (s == "multimode-product") {
    if (cfg.occupations.empty()) fail("occupations", "needs at least one mode");
    if (cfg.omegas.size() != cfg.occupations.size())
      fail("omegas", "needs one frequency per entry of 'occupations'");
    for (int o : cfg.occupations) require_occ("occupations", o);
    for (double w : cfg.omegas) require_positive("omegas", w);
    require_cutoffs(cfg, cfg.occupations);
  } else if (s == "moon-degenerate") {
    require_occ("M", cfg.M);
    require_occ("N", cfg.N);
    require_positive("omega_a", cfg.omega_a);
    require_positive("omega_b", cfg.omega_b);
    const double ea = cfg.M * cfg.omega_a;
    const double eb = cfg.N * cfg.omega_b;
    if (std::abs(ea - eb) > 1e-12 * std::max(ea, eb))
      fail("omega_b", "degenerate M00N needs M*omega_a == N*omega_b");
    require_cutoffs(cfg, {cfg.M, cfg.N});
  } else if (s == "moon-perturbative" || s == "gravitational-mzi") {
    require_occ("N", cfg.N);
    if (s == "moon-perturbative") {
      require_positive("omega_a", cfg.omega_a);
      if (!(std::abs(cfg.eps) < 0.1)) fail("eps", "|eps| must be < 0.1");
    } else {
      require_positive("r_S", cfg.r_S);
      require_positive("r_E", cfg.r_E);
      require_positive("L", cfg.L);
      require_positive("omega_0", cfg.omega_0);
      if (!(cfg.L < 0.1 * cfg.r_E)) fail("L", "must satisfy L < 0.1 r_E");
    }
    if ((cfg.steps - 1) % 2 != 0) fail("steps", "must be odd (even interval count for Simpson)");
    require_cutoffs(cfg, {cfg.N, cfg.N});
  } else if (s == "custom-state") {
    if (cfg.omegas.empty()) fail("omegas", "needs at least one mode");
    for (double w : cfg.omegas) require_positive("omegas", w);
    if (cfg.cutoffs.size() != cfg.omegas.size()) fail("cutoffs", "needs one cutoff per mode");
    std::size_t dim = 1;
    for (int c : cfg.cutoffs) {
      if (c < 1) fail("cutoffs", "must be >= 1");
      dim *= static_cast<std::size_t>(c) + 1;
      if (dim > cfg.dim_cap) fail("cutoffs", "dimension exceeds cap of " + std::to_string(cfg.dim_cap));
    }
    if (cfg.amplitudes_re.size() != dim)
      fail("amplitudes_re", "needs " + std::to_string(dim) + " entries (one per basis state)");
    if (!cfg.amplitudes_im.empty() && cfg.amplitudes_im.size() != dim)
      fail("amplitudes_im", "needs " + std::to_string(dim) + " entries or none");
  } else {
    fail("scenario", "unknown scenario '" + s + "'");
  }
}

}  // namespace ergodyn
