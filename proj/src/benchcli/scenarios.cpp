/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/benchcli/scenarios.hpp"

#include <numbers>
#include <random>

#include "rigidlcp/rigidsim/collision.hpp"

namespace rigidlcp::bench {

namespace {

const Vec3 kHalfUnit = Vec3::Constant(0.5);

int add_box(MultibodySystem& sys, const Vec3& position, const Quat& orientation = Quat::Identity()) {
  RigidBody b;
  b.mass = 1.0;
  b.inertia = Mat3::Identity() / 6.0;
  b.position = position;
  b.orientation = orientation;
  const int id = sys.add_body(b);
  sys.geometries.push_back(Geometry::box(id, kHalfUnit));
  return id;
}

Scenario grasp() {
  Scenario s;
  // Grippers push inward and carry the weight of the whole assembly.
  const double weight = 9.8;
  const int left = add_box(s.sys, Vec3(-1.5, 0, 0));
  const int held_left = add_box(s.sys, Vec3(-0.5, 0, 0));
  const int held_right = add_box(s.sys, Vec3(0.5, 0, 0));
  const int right = add_box(s.sys, Vec3(1.5, 0, 0));
  s.sys.bodies[static_cast<std::size_t>(left)].applied_force = Vec3(50.0, 0, 2.0 * weight);
  s.sys.bodies[static_cast<std::size_t>(right)].applied_force = Vec3(-50.0, 0, 2.0 * weight);
  s.sys.bodies[static_cast<std::size_t>(left)].name = "gripper-left";
  s.sys.bodies[static_cast<std::size_t>(right)].name = "gripper-right";
  s.tracked = {held_left, held_right};
  return s;
}

Scenario stack() {
  Scenario s;
  s.sys.geometries.push_back(Geometry::plane(Vec3::UnitZ(), 0.0));
  s.tracked = {add_box(s.sys, Vec3(0, 0, 0.5)), add_box(s.sys, Vec3(0, 0, 1.5))};
  return s;
}

Scenario incline() {
  Scenario s;
  const double angle = std::numbers::pi / 6.0;
  const Vec3 n(std::sin(angle), 0.0, std::cos(angle));
  s.sys.geometries.push_back(Geometry::plane(n, 0.0));
  s.tracked = {add_box(s.sys, 0.5 * n, Quat(Eigen::AngleAxisd(angle, Vec3::UnitY())))};
  return s;
}

Scenario particle_impact(std::uint64_t seed) {
  Scenario s;
  s.sys.geometries.push_back(Geometry::plane(Vec3::UnitZ(), 0.0));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lateral(-1.0, 1.0);
  std::uniform_real_distribution<double> down(0.5, 1.5);
  for (int i = 0; i < 3; ++i) {
    RigidBody p;
    p.position = Vec3(2.0 * i, 0, 0);
    const double vx = lateral(rng);
    const double vy = lateral(rng);
    p.linear_velocity = Vec3(vx, vy, -down(rng));
    const int id = s.sys.add_body(p);
    s.sys.geometries.push_back(Geometry::sphere(id, 0.0));
    s.tracked.push_back(id);
  }
  return s;
}

}  // namespace

Scenario make_scenario(const ScenarioConfig& cfg) {
  switch (cfg.scenario) {
    case ScenarioKind::grasp: return grasp();
    case ScenarioKind::stack:
    case ScenarioKind::scaling_sweep: return stack();
    case ScenarioKind::incline_slide: return incline();
    case ScenarioKind::particle_impact: return particle_impact(cfg.seed);
  }
  throw ConfigError("scenario", "unhandled scenario");
}

StepOptions step_options(const ScenarioConfig& cfg) {
  StepOptions opts;
  opts.solver = cfg.solver;
  opts.mu_v = cfg.mu_v;
  opts.mu_c = cfg.mu_c;
  opts.collision.duplication = cfg.duplication;
  return opts;
}

Index lcp_size(const ScenarioConfig& cfg, const MultibodySystem& sys) {
  const auto n = static_cast<Index>(generate_contacts(sys, step_options(cfg).collision).size());
  return cfg.model == ModelKind::pyramid_baseline ? 6 * n : n;
}

}  // namespace rigidlcp::bench
