/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/lcpkit/mlcp.hpp"

namespace rigidlcp {

void MlcpProblem::validate() const {
  const Index nx = A.rows();
  const Index ny = B.rows();
  require_square(A, "MLCP block A");
  require_square(B, "MLCP block B");
  require(C.rows() == nx && C.cols() == ny, "MLCP block C must be " + std::to_string(nx) + "x" +
                                                std::to_string(ny));
  require(D.rows() == ny && D.cols() == nx, "MLCP block D must be " + std::to_string(ny) + "x" +
                                                std::to_string(nx));
  require(g.size() == nx, "MLCP vector g length mismatch");
  require(h.size() == ny, "MLCP vector h length mismatch");
  for (const Matrix* m : {&A, &B, &C, &D}) require_finite(*m, "MLCP block");
  require_finite(g, "MLCP g");
  require_finite(h, "MLCP h");
}

MlcpBackSubstitution::MlcpBackSubstitution(std::shared_ptr<const LuFactor> a_factor, Matrix c,
                                           Vector g)
    : a_factor_(std::move(a_factor)), c_(std::move(c)), g_(std::move(g)) {}

Vector MlcpBackSubstitution::recover(const Vector& y) const {
  require(y.size() == c_.cols(), "MlcpBackSubstitution::recover: length mismatch");
  return -a_factor_->solve(Vector(multiply(c_, y) + g_));
}

ReducedMlcp mlcp_reduce(const MlcpProblem& p, const Tolerances& tol) {
  p.validate();
  auto outcome = lu_factor(p.A, tol);
  if (auto* s = std::get_if<SingularPivot>(&outcome))
    throw SingularMatrixError("mlcp_reduce: equality block A is singular at pivot " +
                                  std::to_string(s->index) +
                                  "; select independent constraint rows first",
                              s->index);
  auto lu = std::make_shared<const LuFactor>(std::get<LuFactor>(std::move(outcome)));
  const Matrix a_inv_c = lu->solve(p.C);
  const Vector a_inv_g = lu->solve(p.g);
  Matrix f = p.B - multiply(p.D, a_inv_c);
  Vector e = p.h - multiply(p.D, a_inv_g);
  return {LcpProblem::explicit_form(std::move(f), std::move(e)),
          MlcpBackSubstitution(std::move(lu), p.C, p.g)};
}

}  // namespace rigidlcp
