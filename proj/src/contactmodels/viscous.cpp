/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/contactmodels/viscous.hpp"

#include "rigidlcp/contactmodels/find_indices.hpp"

namespace rigidlcp {

Vector viscous_f_star(const SystemView& sys, const JacobianBundle& jb) {
  const Vector mu = jb.mu_v_or_zero();
  const Vector sv = mu.cwiseProduct(multiply(jb.S, sys.v));
  const Vector tv = mu.cwiseProduct(multiply(jb.T, sys.v));
  return -sys.f + multiply_transpose(jb.S, sv) + multiply_transpose(jb.T, tv);
}

ContactProblem build_viscous_mlcp(const SystemView& sys, const JacobianBundle& jb,
                                  const Tolerances& tol) {
  sys.validate();
  jb.validate();
  require(jb.dof() == sys.dof(), "build_viscous_mlcp: Jacobian columns do not match the system");
  const Index m = sys.dof();
  const Matrix none(0, m);
  ActiveRows active = find_indices(*sys.inertia, jb.J, none, none, tol);
  const Matrix x = active.stack(jb.J, none, none);
  const Vector j_drift = select(jb.j_drift_or_zero(), active.j);
  return assemble_contact_problem(Provenance::viscous, sys, jb.N, std::move(active), x,
                                  viscous_f_star(sys, jb), j_drift, jb.n_drift_or_zero());
}

}  // namespace rigidlcp
