/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rigidlcp/benchcli/config.hpp"
#include "rigidlcp/rigidsim/stepper.hpp"

namespace rigidlcp::bench {

struct StepRecord {
  int step = 0;
  double time = 0.0;  // after the step
  StepMetrics metrics;
  StepResiduals residuals;
  double kinetic_energy = 0.0;
  double f_n_sum = 0.0;
  Vector f_n;
  double drift = 0.0;  // largest tracked center-of-mass displacement so far
  std::vector<double> state;  // per body: position, quaternion (w x y z), v, w
};

struct RunReport {
  ScenarioConfig config;
  std::vector<StepRecord> steps;
  std::vector<std::string> failures;

  double wall_mean() const;
  double wall_stddev() const;  // population standard deviation
  double pivots_per_solve_mean() const;
  std::size_t pivots_per_solve_max() const;
  Index max_system_order() const;
  Index max_lcp_variables() const;
  double max_drift() const;
  double max_active_tangential() const;
  double min_distance() const;
};

/// Runs cfg.steps steps. A solver failure stops the run and is logged in
/// `failures`; configuration problems throw ConfigError. Deterministic given
/// the config, apart from wall times.
RunReport run_scenario(const ScenarioConfig& cfg);

/// Advances `steps` steps, then writes the problem the next step would solve
/// (with its provenance line) in the lcpkit text format.
void dump_problem(const ScenarioConfig& cfg, int steps, std::ostream& os);

/// CSV layouts, first line is the versioned header:
///   # rigidlcp-trajectory v1
///   step,time,b<i>_px,..,b<i>_wz per body,contacts,f_n_sum
///   # rigidlcp-metrics v1
///   step,time,wall_seconds,solves,pivots,max_order,lcp_variables,contacts,
///   kinetic_energy,active_tangential,contact_slip,min_normal_velocity,
///   complementarity,bilateral,min_distance,f_n_sum,drift
void write_trajectory_csv(std::ostream& os, const RunReport& r);
void write_metrics_csv(std::ostream& os, const RunReport& r);

/// Human-readable totals.
void write_summary(std::ostream& os, const RunReport& r);

}  // namespace rigidlcp::bench
