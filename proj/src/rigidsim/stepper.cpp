/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/rigidsim/stepper.hpp"

#include <array>
#include <chrono>
#include <limits>
#include <sstream>

#include "rigidlcp/contactmodels/find_indices.hpp"
#include "rigidlcp/contactmodels/noslip.hpp"
#include "rigidlcp/contactmodels/pyramid.hpp"
#include "rigidlcp/contactmodels/viscous.hpp"
#include "rigidlcp/lcpkit/enumerate.hpp"
#include "rigidlcp/lcpkit/lemke.hpp"

namespace rigidlcp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double min_distance(const std::vector<ContactPoint>& contacts) {
  double d = 0.0;
  for (const ContactPoint& c : contacts) d = std::min(d, c.distance);
  return d;
}

double safe_inf_norm(const Vector& v) { return v.size() ? inf_norm(v) : 0.0; }
double safe_min(const Vector& v) { return v.size() ? v.minCoeff() : 0.0; }

ContactSolution solve_or_dump(const ContactProblem& p, const StepOptions& opts) {
  try {
    return solve_contact_problem(p, opts.solver, opts.ppm);
  } catch (const std::exception& e) {
    std::ostringstream os;
    write_contact_problem(os, p);
    throw StepFailure(std::string("contact solve failed: ") + e.what(), os.str());
  }
}

// Splits multipliers ordered like ActiveRows::stack into per-row vectors.
void split_multipliers(const ActiveRows& active, const Vector& lambda, Index contacts,
                       Index bilateral, StepResult& r) {
  r.f_j = Vector::Zero(bilateral);
  r.f_s = Vector::Zero(contacts);
  r.f_t = Vector::Zero(contacts);
  Index k = 0;
  for (Index i : active.j) r.f_j(i) = lambda(k++);
  auto si = active.s.begin();
  auto ti = active.t.begin();
  while (si != active.s.end() || ti != active.t.end()) {
    if (ti == active.t.end() || (si != active.s.end() && *si <= *ti)) {
      r.f_s(*si++) = lambda(k++);
    } else {
      r.f_t(*ti++) = lambda(k++);
    }
  }
}

void velocity_residuals(const JacobianBundle& jb, const Matrix& tangential_active, const Vector& v,
                        StepResult& r) {
  const Vector nv = multiply(jb.N, v);
  r.residuals.min_normal_velocity = safe_min(nv);
  r.residuals.complementarity = r.f_n.size() ? std::abs(r.f_n.dot(nv)) : 0.0;
  r.residuals.contact_slip =
      std::max(safe_inf_norm(multiply(jb.S, v)), safe_inf_norm(multiply(jb.T, v)));
  r.residuals.active_tangential =
      tangential_active.rows() ? safe_inf_norm(multiply(tangential_active, v)) : 0.0;
  r.residuals.bilateral = jb.J.rows() ? safe_inf_norm(multiply(jb.J, v)) : 0.0;
}

void record_solve(const LcpSolution& s, StepMetrics& m) {
  m.pivots += s.pivots;
  m.max_system_order = std::max(m.max_system_order, s.max_system_order);
  ++m.solves;
}

struct Assembly {
  std::vector<ContactPoint> contacts;
  JacobianBundle jb;
};

Assembly assemble(const MultibodySystem& sys, const StepOptions& opts) {
  Assembly a;
  a.contacts = generate_contacts(sys, opts.collision);
  a.jb = system_jacobians(sys, a.contacts);
  return a;
}

// Velocity-level solve shared by the no-slip step and impact resolution.
StepResult velocity_solve(const SystemView& view, const Assembly& a, double dt,
                          const ActiveRows& active, const StepOptions& opts) {
  const ContactProblem p = build_noslip_mlcp(view, a.jb, dt, active);
  const ContactSolution s = solve_or_dump(p, opts);
  StepResult r;
  r.v = s.u;
  r.f_n = s.f_n;
  split_multipliers(active, s.multipliers, a.jb.contact_count(), a.jb.bilateral_count(), r);
  ActiveRows tangential = active;
  tangential.j.clear();
  velocity_residuals(a.jb, tangential.stack(Matrix(0, view.dof()), a.jb.S, a.jb.T), s.u, r);
  r.residuals.min_distance = min_distance(a.contacts);
  record_solve(s.lcp, r.metrics);
  r.metrics.lcp_variables = a.jb.contact_count();
  r.metrics.contacts = a.jb.contact_count();
  return r;
}

// Contacts kept by a viscous step: separating ones are dropped.
JacobianBundle viscous_bundle(const MultibodySystem& sys, const StepOptions& opts,
                              std::vector<ContactPoint>& kept) {
  const Assembly all = assemble(sys, opts);
  const Vector nv = multiply(all.jb.N, sys.velocity());
  kept.clear();
  for (std::size_t i = 0; i < all.contacts.size(); ++i)
    if (nv(static_cast<Index>(i)) <= opts.ppm.tol.impact_speed) kept.push_back(all.contacts[i]);
  JacobianBundle jb = system_jacobians(sys, kept);
  jb.mu_v = Vector::Constant(static_cast<Index>(kept.size()), opts.mu_v);
  return jb;
}

}  // namespace

ContactProblem noslip_problem(const MultibodySystem& sys, double dt, const StepOptions& opts) {
  const Assembly a = assemble(sys, opts);
  const SystemView view = sys.view();
  const ActiveRows active = find_indices(*view.inertia, a.jb.J, a.jb.S, a.jb.T, opts.ppm.tol);
  return build_noslip_mlcp(view, a.jb, dt, active);
}

StepResult step_noslip(MultibodySystem& sys, double dt, const StepOptions& opts) {
  require(dt > 0.0, "step_noslip: dt must be positive");
  const auto start = Clock::now();
  const Assembly a = assemble(sys, opts);
  const SystemView view = sys.view();
  const ActiveRows active = find_indices(*view.inertia, a.jb.J, a.jb.S, a.jb.T, opts.ppm.tol);
  StepResult r = velocity_solve(view, a, dt, active, opts);
  sys.set_velocity(r.v);
  sys.integrate_positions(dt);
  sys.time += dt;
  r.metrics.wall_seconds = seconds_since(start);
  return r;
}

PyramidProblem pyramid_problem(const MultibodySystem& sys, double dt, const StepOptions& opts) {
  Assembly a = assemble(sys, opts);
  a.jb.mu_c = opts.mu_c;
  return build_pyramid_baseline_lcp(sys.view(), a.jb, dt, opts.ppm.tol);
}

ContactProblem viscous_problem(const MultibodySystem& sys, const StepOptions& opts) {
  MultibodySystem copy = sys;
  resolve_impact(copy, opts.impact, opts);
  std::vector<ContactPoint> kept;
  const JacobianBundle jb = viscous_bundle(copy, opts, kept);
  return build_viscous_mlcp(copy.view(), jb, opts.ppm.tol);
}

StepResult step_pyramid(MultibodySystem& sys, double dt, const StepOptions& opts) {
  require(dt > 0.0, "step_pyramid: dt must be positive");
  require(opts.solver != LcpSolverKind::ppm,
          "step_pyramid: the pyramid LCP is not symmetric; use lemke or enumerate");
  const auto start = Clock::now();
  Assembly a = assemble(sys, opts);
  a.jb.mu_c = opts.mu_c;
  const PyramidProblem p = build_pyramid_baseline_lcp(sys.view(), a.jb, dt, opts.ppm.tol);
  LcpSolution s;
  try {
    s = opts.solver == LcpSolverKind::lemke ? solve_lcp_lemke(p.lcp) : solve_lcp_enumerate(p.lcp);
  } catch (const std::exception& e) {
    std::ostringstream os;
    write_pyramid_problem(os, p);
    throw StepFailure(std::string("pyramid solve failed: ") + e.what(), os.str());
  }
  const PyramidProblem::Impulses imp = p.interpret(s.z);
  StepResult r;
  r.v = imp.v_plus;
  r.f_n = imp.f_n;
  r.f_s = imp.f_s;
  r.f_t = imp.f_t;
  r.f_j = Vector(0);
  velocity_residuals(a.jb, Matrix(0, sys.dof()), r.v, r);
  r.residuals.min_distance = min_distance(a.contacts);
  record_solve(s, r.metrics);
  r.metrics.lcp_variables = p.variable_count();
  r.metrics.contacts = a.jb.contact_count();
  sys.set_velocity(r.v);
  sys.integrate_positions(dt);
  sys.time += dt;
  r.metrics.wall_seconds = seconds_since(start);
  return r;
}

StepResult resolve_impact(MultibodySystem& sys, ImpactModel model, const StepOptions& opts) {
  const auto start = Clock::now();
  const Assembly a = assemble(sys, opts);
  SystemView view = sys.view();
  const Vector nv = multiply(a.jb.N, view.v);
  if (nv.size() == 0 || nv.minCoeff() >= -opts.ppm.tol.impact_speed) {
    StepResult r;
    r.v = view.v;
    r.f_n = Vector::Zero(a.jb.contact_count());
    r.f_s = r.f_t = r.f_n;
    r.f_j = Vector::Zero(a.jb.bilateral_count());
    velocity_residuals(a.jb, Matrix(0, sys.dof()), r.v, r);
    r.residuals.min_distance = min_distance(a.contacts);
    r.metrics.contacts = a.jb.contact_count();
    r.metrics.wall_seconds = seconds_since(start);
    return r;
  }
  const Matrix none(0, sys.dof());
  const ActiveRows active = model == ImpactModel::noslip
                                ? find_indices(*view.inertia, a.jb.J, a.jb.S, a.jb.T, opts.ppm.tol)
                                : find_indices(*view.inertia, a.jb.J, none, none, opts.ppm.tol);
  view.f = Vector::Zero(sys.dof());
  StepResult r = velocity_solve(view, a, 0.0, active, opts);
  sys.set_velocity(r.v);
  r.metrics.wall_seconds = seconds_since(start);
  return r;
}

StepResult step_viscous(MultibodySystem& sys, double dt, const StepOptions& opts) {
  require(dt > 0.0, "step_viscous: dt must be positive");
  const auto start = Clock::now();
  StepMetrics impact_metrics;
  {
    const StepResult impact = resolve_impact(sys, opts.impact, opts);
    if (impact.metrics.solves) impact_metrics = impact.metrics;
  }

  std::vector<ContactPoint> kept;
  const JacobianBundle jb = viscous_bundle(sys, opts, kept);
  const Vector v0 = sys.velocity();
  const auto inertia = sys.inertia();

  StepResult r;
  r.metrics = impact_metrics;
  MultibodySystem stage = sys;
  const auto accel = [&](const Vector& v, Vector& f_n, Vector& f_j) {
    stage.set_velocity(v);
    const SystemView view{inertia, v, stage.generalized_force()};
    const ContactProblem p = build_viscous_mlcp(view, jb, opts.ppm.tol);
    const ContactSolution s = solve_or_dump(p, opts);
    record_solve(s.lcp, r.metrics);
    f_n = s.f_n;
    f_j = Vector::Zero(jb.bilateral_count());
    for (std::size_t k = 0; k < p.active.j.size(); ++k) f_j(p.active.j[k]) = s.multipliers(static_cast<Index>(k));
    return s.u;
  };

  std::array<Vector, 4> fn, fj, k;
  const Vector va = v0;
  k[0] = accel(va, fn[0], fj[0]);
  const Vector vb = v0 + 0.5 * dt * k[0];
  k[1] = accel(vb, fn[1], fj[1]);
  const Vector vc = v0 + 0.5 * dt * k[1];
  k[2] = accel(vc, fn[2], fj[2]);
  const Vector vd = v0 + dt * k[2];
  k[3] = accel(vd, fn[3], fj[3]);

  const Vector v1 = v0 + dt / 6.0 * (k[0] + 2.0 * k[1] + 2.0 * k[2] + k[3]);
  const Vector v_mean = (va + 2.0 * vb + 2.0 * vc + vd) / 6.0;
  r.v = v1;
  r.f_n = (fn[0] + 2.0 * fn[1] + 2.0 * fn[2] + fn[3]) / 6.0;
  r.f_j = (fj[0] + 2.0 * fj[1] + 2.0 * fj[2] + fj[3]) / 6.0;
  r.f_s = -jb.mu_v.cwiseProduct(multiply(jb.S, v_mean));
  r.f_t = -jb.mu_v.cwiseProduct(multiply(jb.T, v_mean));
  velocity_residuals(jb, Matrix(0, sys.dof()), v1, r);
  r.residuals.min_distance = min_distance(kept);
  r.metrics.lcp_variables = jb.contact_count();
  r.metrics.contacts = jb.contact_count();

  sys.set_velocity(v1);
  sys.integrate_positions(dt, v_mean);
  sys.time += dt;
  r.metrics.wall_seconds = seconds_since(start);
  return r;
}

}  // namespace rigidlcp
