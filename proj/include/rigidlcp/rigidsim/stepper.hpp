/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

#include "rigidlcp/contactmodels/problem.hpp"
#include "rigidlcp/contactmodels/pyramid.hpp"
#include "rigidlcp/rigidsim/collision.hpp"
#include "rigidlcp/rigidsim/multibody.hpp"

namespace rigidlcp {

enum class ImpactModel { frictionless, noslip };

struct StepOptions {
  LcpSolverKind solver = LcpSolverKind::ppm;
  PpmOptions ppm{};
  CollisionOptions collision{};
  // Per-contact viscous coefficient (viscous model).
  double mu_v = 0.0;
  // Coulomb coefficient (pyramid baseline).
  double mu_c = 0.0;
  // Impacts met by step_viscous are resolved with this model first.
  ImpactModel impact = ImpactModel::frictionless;
};

struct StepResiduals {
  double active_tangential = 0.0;  // max |S_S v|, |T_T v| over the active rows
  double contact_slip = 0.0;       // max |S v|, |T v| over every contact
  double min_normal_velocity = 0.0;
  double complementarity = 0.0;  // |f_n^T N v|
  double bilateral = 0.0;        // |J v|_inf
  double min_distance = 0.0;     // signed distance of the generated contacts
};

struct StepMetrics {
  std::size_t pivots = 0;
  Index max_system_order = 0;
  Index lcp_variables = 0;
  Index contacts = 0;
  double wall_seconds = 0.0;
  std::size_t solves = 0;
};

struct StepResult {
  Vector v;  // velocity after the step
  Vector f_n;
  Vector f_s;
  Vector f_t;
  Vector f_j;
  StepResiduals residuals;
  StepMetrics metrics;
};

/// Solver failure during a step, carrying the offending problem in the
/// lcpkit text format.
class StepFailure : public std::runtime_error {
 public:
  StepFailure(const std::string& what, std::string dump)
      : std::runtime_error(what), dump_(std::move(dump)) {}
  const std::string& problem_dump() const { return dump_; }

 private:
  std::string dump_;
};

/// Velocity-level no-slip step followed by the position update with the new
/// velocity (symplectic Euler).
StepResult step_noslip(MultibodySystem& sys, double dt, const StepOptions& opts = {});

/// Friction-pyramid baseline step, solved with Lemke (or enumeration), then the
/// same position update.
StepResult step_pyramid(MultibodySystem& sys, double dt, const StepOptions& opts = {});

/// RK4 step of the acceleration-level viscous model. Approaching contacts are
/// resolved first with resolve_impact; separating contacts are dropped; the
/// contact set and Jacobians are held fixed across the substeps.
StepResult step_viscous(MultibodySystem& sys, double dt, const StepOptions& opts = {});

/// dt = 0 velocity-level resolution of approaching contacts. Does nothing
/// (zero impulses) when no contact approaches faster than tol.impact_speed.
StepResult resolve_impact(MultibodySystem& sys, ImpactModel model, const StepOptions& opts = {});

/// The problem step_noslip would solve at the current state.
ContactProblem noslip_problem(const MultibodySystem& sys, double dt, const StepOptions& opts = {});

/// The problem step_pyramid would solve at the current state.
PyramidProblem pyramid_problem(const MultibodySystem& sys, double dt, const StepOptions& opts = {});

/// The first RK4 stage problem of step_viscous, after impact resolution on a
/// copy of the state.
ContactProblem viscous_problem(const MultibodySystem& sys, const StepOptions& opts = {});

}  // namespace rigidlcp
