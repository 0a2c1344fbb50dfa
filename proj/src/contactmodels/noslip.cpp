/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/contactmodels/noslip.hpp"

#include <cmath>

namespace rigidlcp {

ContactProblem build_noslip_mlcp(const SystemView& sys, const JacobianBundle& jb, double dt,
                                 const ActiveRows& active) {
  sys.validate();
  jb.validate();
  require(jb.dof() == sys.dof(), "build_noslip_mlcp: Jacobian columns do not match the system");
  require(dt >= 0.0 && std::isfinite(dt), "build_noslip_mlcp: dt must be finite and >= 0");
  const Matrix x = active.stack(jb.J, jb.S, jb.T);
  const Vector g = -(sys.inertia->multiply(sys.v) + dt * sys.f);
  return assemble_contact_problem(Provenance::noslip, sys, jb.N, active, x, g,
                                  Vector::Zero(x.rows()), Vector::Zero(jb.contact_count()));
}

}  // namespace rigidlcp
