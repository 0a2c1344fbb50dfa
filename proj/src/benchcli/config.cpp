/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/benchcli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>

namespace rigidlcp::bench {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || end != value.data() + value.size() || !std::isfinite(v))
    throw ConfigError(key, "expected a number, got '" + value + "'");
  return v;
}

template <typename Int>
Int parse_integer(const std::string& key, const std::string& value) {
  Int v = 0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || end != value.data() + value.size())
    throw ConfigError(key, "expected an integer, got '" + value + "'");
  return v;
}

ScenarioKind parse_scenario(const std::string& value) {
  for (ScenarioKind s : {ScenarioKind::grasp, ScenarioKind::stack, ScenarioKind::incline_slide,
                         ScenarioKind::particle_impact, ScenarioKind::scaling_sweep})
    if (to_string(s) == value) return s;
  throw ConfigError("scenario", "unknown scenario '" + value +
                                    "' (expected grasp, stack, incline-slide, particle-impact or "
                                    "scaling-sweep)");
}

ModelKind parse_model(const std::string& value) {
  for (ModelKind m : {ModelKind::noslip, ModelKind::viscous, ModelKind::pyramid_baseline})
    if (to_string(m) == value) return m;
  throw ConfigError("model", "unknown model '" + value +
                                 "' (expected no-slip, viscous or pyramid-baseline)");
}

}  // namespace

std::string to_string(ScenarioKind s) {
  switch (s) {
    case ScenarioKind::grasp: return "grasp";
    case ScenarioKind::stack: return "stack";
    case ScenarioKind::incline_slide: return "incline-slide";
    case ScenarioKind::particle_impact: return "particle-impact";
    case ScenarioKind::scaling_sweep: return "scaling-sweep";
  }
  return "?";
}

std::string to_string(ModelKind m) {
  switch (m) {
    case ModelKind::noslip: return "no-slip";
    case ModelKind::viscous: return "viscous";
    case ModelKind::pyramid_baseline: return "pyramid-baseline";
  }
  return "?";
}

void ScenarioConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("dt", "must be positive");
  if (steps < 0) throw ConfigError("steps", "must be nonnegative");
  if (mu_v < 0.0) throw ConfigError("mu_v", "must be nonnegative");
  if (mu_c < 0.0) throw ConfigError("mu_c", "must be nonnegative");
  if (duplication < 1) throw ConfigError("duplication", "must be at least 1");
  if (model == ModelKind::pyramid_baseline && solver == LcpSolverKind::ppm)
    throw ConfigError("solver", "the pyramid-baseline LCP is not symmetric; use lemke or enumerate");
}

void set_field(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "scenario") {
    cfg.scenario = parse_scenario(value);
  } else if (key == "model") {
    cfg.model = parse_model(value);
  } else if (key == "solver") {
    try {
      cfg.solver = parse_solver_kind(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("solver", e.what());
    }
  } else if (key == "dt") {
    cfg.dt = parse_double(key, value);
  } else if (key == "steps") {
    cfg.steps = parse_integer<int>(key, value);
  } else if (key == "mu_v") {
    cfg.mu_v = parse_double(key, value);
  } else if (key == "mu_c") {
    cfg.mu_c = parse_double(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "duplication") {
    cfg.duplication = parse_integer<int>(key, value);
  } else {
    throw ConfigError(key, "unknown key");
  }
}

ScenarioConfig parse_config(std::istream& is) {
  ScenarioConfig cfg;
  std::set<std::string> seen;
  std::string line;
  int number = 0;
  while (std::getline(is, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(number), "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError(key, "given more than once");
    set_field(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  return parse_config(in);
}

void write_config(std::ostream& os, const ScenarioConfig& cfg) {
  const auto precision = os.precision(17);
  os << "scenario = " << to_string(cfg.scenario) << '\n'
     << "model = " << to_string(cfg.model) << '\n'
     << "solver = " << to_string(cfg.solver) << '\n'
     << "dt = " << cfg.dt << '\n'
     << "steps = " << cfg.steps << '\n'
     << "mu_v = " << cfg.mu_v << '\n'
     << "mu_c = " << cfg.mu_c << '\n'
     << "seed = " << cfg.seed << '\n'
     << "duplication = " << cfg.duplication << '\n';
  os.precision(precision);
}

std::string label(const ScenarioConfig& cfg) { return to_string(cfg.model) + "/" + to_string(cfg.solver); }

}  // namespace rigidlcp::bench
