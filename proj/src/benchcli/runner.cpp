/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/benchcli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "rigidlcp/benchcli/scenarios.hpp"
#include "rigidlcp/lcpkit/enumerate.hpp"

namespace rigidlcp::bench {

namespace {

StepResult advance(MultibodySystem& sys, const ScenarioConfig& cfg, const StepOptions& opts) {
  switch (cfg.model) {
    case ModelKind::noslip: return step_noslip(sys, cfg.dt, opts);
    case ModelKind::viscous: return step_viscous(sys, cfg.dt, opts);
    case ModelKind::pyramid_baseline: return step_pyramid(sys, cfg.dt, opts);
  }
  throw ConfigError("model", "unhandled model");
}

std::vector<double> flatten_state(const MultibodySystem& sys) {
  std::vector<double> out;
  for (const RigidBody& b : sys.bodies) {
    const Quat& q = b.orientation;
    for (double x : {b.position.x(), b.position.y(), b.position.z(), q.w(), q.x(), q.y(), q.z(),
                     b.linear_velocity.x(), b.linear_velocity.y(), b.linear_velocity.z(),
                     b.angular_velocity.x(), b.angular_velocity.y(), b.angular_velocity.z()})
      out.push_back(x);
  }
  return out;
}

void check_solver_size(const ScenarioConfig& cfg, const MultibodySystem& sys) {
  if (cfg.solver != LcpSolverKind::enumerate) return;
  const Index n = lcp_size(cfg, sys);
  if (n > kMaxEnumerationSize)
    throw ConfigError("solver", "enumerate is limited to LCPs of size " +
                                    std::to_string(kMaxEnumerationSize) + ", this scenario builds " +
                                    std::to_string(n));
}

template <typename F>
double max_over(const RunReport& r, F value, double init) {
  double out = init;
  for (const StepRecord& s : r.steps) out = std::max(out, value(s));
  return out;
}

}  // namespace

double RunReport::wall_mean() const {
  if (steps.empty()) return 0.0;
  double sum = 0.0;
  for (const StepRecord& s : steps) sum += s.metrics.wall_seconds;
  return sum / static_cast<double>(steps.size());
}

double RunReport::wall_stddev() const {
  if (steps.empty()) return 0.0;
  const double mean = wall_mean();
  double sum = 0.0;
  for (const StepRecord& s : steps) sum += (s.metrics.wall_seconds - mean) * (s.metrics.wall_seconds - mean);
  return std::sqrt(sum / static_cast<double>(steps.size()));
}

double RunReport::pivots_per_solve_mean() const {
  std::size_t pivots = 0;
  std::size_t solves = 0;
  for (const StepRecord& s : steps) {
    pivots += s.metrics.pivots;
    solves += s.metrics.solves;
  }
  return solves ? static_cast<double>(pivots) / static_cast<double>(solves) : 0.0;
}

std::size_t RunReport::pivots_per_solve_max() const {
  std::size_t out = 0;
  for (const StepRecord& s : steps)
    if (s.metrics.solves) out = std::max(out, (s.metrics.pivots + s.metrics.solves - 1) / s.metrics.solves);
  return out;
}

Index RunReport::max_system_order() const {
  Index out = 0;
  for (const StepRecord& s : steps) out = std::max(out, s.metrics.max_system_order);
  return out;
}

Index RunReport::max_lcp_variables() const {
  Index out = 0;
  for (const StepRecord& s : steps) out = std::max(out, s.metrics.lcp_variables);
  return out;
}

double RunReport::max_drift() const {
  return max_over(*this, [](const StepRecord& s) { return s.drift; }, 0.0);
}

double RunReport::max_active_tangential() const {
  return max_over(*this, [](const StepRecord& s) { return s.residuals.active_tangential; }, 0.0);
}

double RunReport::min_distance() const {
  return -max_over(*this, [](const StepRecord& s) { return -s.residuals.min_distance; },
                   -std::numeric_limits<double>::infinity());
}

RunReport run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  Scenario sc = make_scenario(cfg);
  sc.sys.validate();
  check_solver_size(cfg, sc.sys);
  const StepOptions opts = step_options(cfg);

  RunReport report;
  report.config = cfg;
  std::vector<Vec3> start;
  for (int b : sc.tracked) start.push_back(sc.sys.bodies[static_cast<std::size_t>(b)].position);
  double drift = 0.0;
  for (int k = 0; k < cfg.steps; ++k) {
    StepResult r;
    try {
      r = advance(sc.sys, cfg, opts);
    } catch (const StepFailure& e) {
      report.failures.push_back("step " + std::to_string(k) + ": " + e.what());
      break;
    }
    for (std::size_t i = 0; i < sc.tracked.size(); ++i)
      drift = std::max(drift, (sc.sys.bodies[static_cast<std::size_t>(sc.tracked[i])].position - start[i]).norm());
    StepRecord rec;
    rec.step = k;
    rec.time = sc.sys.time;
    rec.metrics = r.metrics;
    rec.residuals = r.residuals;
    rec.kinetic_energy = kinetic_energy(sc.sys);
    rec.f_n_sum = r.f_n.sum();
    rec.f_n = std::move(r.f_n);
    rec.drift = drift;
    rec.state = flatten_state(sc.sys);
    report.steps.push_back(std::move(rec));
  }
  return report;
}

void dump_problem(const ScenarioConfig& cfg, int steps, std::ostream& os) {
  if (steps < 0) throw ConfigError("step", "must be nonnegative");
  cfg.validate();
  Scenario sc = make_scenario(cfg);
  sc.sys.validate();
  const StepOptions opts = step_options(cfg);
  for (int k = 0; k < steps; ++k) advance(sc.sys, cfg, opts);
  switch (cfg.model) {
    case ModelKind::noslip: write_contact_problem(os, noslip_problem(sc.sys, cfg.dt, opts)); break;
    case ModelKind::viscous: write_contact_problem(os, viscous_problem(sc.sys, opts)); break;
    case ModelKind::pyramid_baseline: write_pyramid_problem(os, pyramid_problem(sc.sys, cfg.dt, opts)); break;
  }
}

void write_trajectory_csv(std::ostream& os, const RunReport& r) {
  const auto precision = os.precision(17);
  os << "# rigidlcp-trajectory v1\nstep,time";
  const std::size_t bodies = r.steps.empty() ? 0 : r.steps.front().state.size() / 13;
  static const char* const kFields[] = {"px", "py", "pz", "qw", "qx", "qy", "qz",
                                        "vx", "vy", "vz", "wx", "wy", "wz"};
  for (std::size_t b = 0; b < bodies; ++b)
    for (const char* f : kFields) os << ",b" << b << '_' << f;
  os << ",contacts,f_n_sum\n";
  for (const StepRecord& s : r.steps) {
    os << s.step << ',' << s.time;
    for (double x : s.state) os << ',' << x;
    os << ',' << s.metrics.contacts << ',' << s.f_n_sum << '\n';
  }
  os.precision(precision);
}

void write_metrics_csv(std::ostream& os, const RunReport& r) {
  const auto precision = os.precision(17);
  os << "# rigidlcp-metrics v1\n"
     << "step,time,wall_seconds,solves,pivots,max_order,lcp_variables,contacts,kinetic_energy,"
        "active_tangential,contact_slip,min_normal_velocity,complementarity,bilateral,"
        "min_distance,f_n_sum,drift\n";
  for (const StepRecord& s : r.steps) {
    const StepMetrics& m = s.metrics;
    const StepResiduals& q = s.residuals;
    os << s.step << ',' << s.time << ',' << m.wall_seconds << ',' << m.solves << ',' << m.pivots << ','
       << m.max_system_order << ',' << m.lcp_variables << ',' << m.contacts << ',' << s.kinetic_energy
       << ',' << q.active_tangential << ',' << q.contact_slip << ',' << q.min_normal_velocity << ','
       << q.complementarity << ',' << q.bilateral << ',' << q.min_distance << ',' << s.f_n_sum << ','
       << s.drift << '\n';
  }
  os.precision(precision);
}

void write_summary(std::ostream& os, const RunReport& r) {
  const ScenarioConfig& c = r.config;
  os << "scenario        " << to_string(c.scenario) << '\n'
     << "model/solver    " << label(c) << '\n'
     << "steps           " << r.steps.size() << " of " << c.steps << '\n'
     << "failures        " << r.failures.size() << '\n'
     << "wall per step   " << r.wall_mean() << " s (sd " << r.wall_stddev() << ")\n"
     << "pivots/solve    mean " << r.pivots_per_solve_mean() << ", max " << r.pivots_per_solve_max() << '\n'
     << "max order       " << r.max_system_order() << '\n'
     << "lcp variables   " << r.max_lcp_variables() << '\n'
     << "max drift       " << r.max_drift() << '\n'
     << "min distance    " << (r.steps.empty() ? 0.0 : r.min_distance()) << '\n'
     << "max tangential  " << r.max_active_tangential() << '\n';
  for (const std::string& f : r.failures) os << "failure: " << f << '\n';
}

}  // namespace rigidlcp::bench
