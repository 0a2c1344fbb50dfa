/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rigidlcp/contactmodels/problem.hpp"

namespace rigidlcp::bench {

enum class ScenarioKind { grasp, stack, incline_slide, particle_impact, scaling_sweep };
enum class ModelKind { noslip, viscous, pyramid_baseline };

std::string to_string(ScenarioKind s);
std::string to_string(ModelKind m);

/// Invalid configuration; field() names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::stack;
  ModelKind model = ModelKind::noslip;
  LcpSolverKind solver = LcpSolverKind::ppm;
  double dt = 0.01;
  int steps = 100;
  double mu_v = 0.0;
  double mu_c = 100.0;
  std::uint64_t seed = 1;
  int duplication = 1;

  /// Field-level checks; the enumeration size limit needs the scenario and
  /// is checked by run_scenario.
  void validate() const;
};

/// Sets one key (scenario, model, solver, dt, steps, mu_v, mu_c, seed,
/// duplication) from its text value. Throws ConfigError.
void set_field(ScenarioConfig& cfg, const std::string& key, const std::string& value);

/// Flat `key = value` lines; '#' starts a comment. Unknown keys, repeated
/// keys and malformed values throw ConfigError.
ScenarioConfig parse_config(std::istream& is);
ScenarioConfig load_config(const std::string& path);
void write_config(std::ostream& os, const ScenarioConfig& cfg);

/// "model/solver", used to label runs.
std::string label(const ScenarioConfig& cfg);

}  // namespace rigidlcp::bench
