/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/contactmodels/pyramid.hpp"

#include <ostream>

#include "rigidlcp/contactmodels/find_indices.hpp"
#include "rigidlcp/lcpkit/lcp_io.hpp"

namespace rigidlcp {

PyramidProblem build_pyramid_baseline_lcp(const SystemView& sys, const JacobianBundle& jb, double dt,
                                          const Tolerances& tol) {
  sys.validate();
  jb.validate();
  require(jb.dof() == sys.dof(), "build_pyramid_baseline_lcp: Jacobian columns do not match");
  require(dt >= 0.0, "build_pyramid_baseline_lcp: dt must be >= 0");
  const Index m = sys.dof();
  const Index n = jb.contact_count();
  const Matrix none(0, m);
  const ActiveRows active = find_indices(*sys.inertia, jb.J, none, none, tol);

  PyramidProblem p;
  p.contacts = n;
  p.saddle = std::make_shared<SaddlePointSolver>(sys.inertia, active.stack(jb.J, none, none));
  p.free = p.saddle->solve(sys.inertia->multiply(sys.v) + dt * sys.f);
  p.normal_rows_ = jb.N;
  p.friction_rows_.resize(4 * n, m);
  for (Index i = 0; i < n; ++i) {
    p.friction_rows_.row(4 * i) = jb.S.row(i);
    p.friction_rows_.row(4 * i + 1) = -jb.S.row(i);
    p.friction_rows_.row(4 * i + 2) = jb.T.row(i);
    p.friction_rows_.row(4 * i + 3) = -jb.T.row(i);
  }

  Matrix g(5 * n, m);
  g << p.normal_rows_, p.friction_rows_;
  const Matrix pg = p.saddle->solve_columns(g.transpose());
  const Matrix k = multiply(g, pg);

  Matrix q_matrix = Matrix::Zero(6 * n, 6 * n);
  q_matrix.topLeftCorner(5 * n, 5 * n) = 0.5 * (k + k.transpose());
  for (Index i = 0; i < n; ++i) {
    for (Index d = 0; d < 4; ++d) {
      q_matrix(n + 4 * i + d, 5 * n + i) = 1.0;
      q_matrix(5 * n + i, n + 4 * i + d) = -1.0;
    }
    q_matrix(5 * n + i, i) = jb.mu_c;
  }
  Vector q = Vector::Zero(6 * n);
  q.head(5 * n) = multiply(g, p.free);
  p.lcp = LcpProblem::explicit_form(std::move(q_matrix), std::move(q));
  return p;
}

PyramidProblem::Impulses PyramidProblem::interpret(const Vector& z) const {
  const Index n = contacts;
  require(z.size() == 6 * n, "PyramidProblem::interpret: wrong solution length");
  Impulses out;
  out.f_n = z.head(n);
  const Vector beta = z.segment(n, 4 * n);
  out.f_s.resize(n);
  out.f_t.resize(n);
  for (Index i = 0; i < n; ++i) {
    out.f_s(i) = beta(4 * i) - beta(4 * i + 1);
    out.f_t(i) = beta(4 * i + 2) - beta(4 * i + 3);
  }
  const Vector impulse =
      multiply_transpose(normal_rows_, out.f_n) + multiply_transpose(friction_rows_, beta);
  out.v_plus = free + saddle->solve(impulse);
  return out;
}

void write_pyramid_problem(std::ostream& os, const PyramidProblem& p) {
  os << "# provenance pyramid-baseline\n";
  write_lcp(os, p.lcp);
}

}  // namespace rigidlcp
