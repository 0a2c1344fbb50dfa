/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/matrixcore/saddle_solver.hpp"

namespace rigidlcp {

SaddlePointSolver::SaddlePointSolver(std::shared_ptr<const BlockDiagInertia> inertia, Matrix rows,
                                     const Tolerances& tol)
    : inertia_(std::move(inertia)), rows_(std::move(rows)), schur_(tol) {
  require(inertia_ != nullptr, "SaddlePointSolver: null inertia");
  require(rows_.cols() == inertia_->dim(), "SaddlePointSolver: constraint rows have " +
                                               std::to_string(rows_.cols()) + " columns, expected " +
                                               std::to_string(inertia_->dim()));
  inv_m_rows_t_ = inertia_->solve_columns(rows_.transpose());
  // Rows are appended one at a time so each pivot is judged against the same
  // running trace a greedy row selection in this order would have used.
  const Matrix schur = multiply(rows_, inv_m_rows_t_);
  for (Index i = 0; i < schur.rows(); ++i) {
    if (auto pivot = schur_.append(schur.col(i).head(i + 1)))
      throw SingularMatrixError("saddle-point system is singular: constraint row " +
                                    std::to_string(i) + " is dependent",
                                i);
  }
}

Vector SaddlePointSolver::solve(const Vector& r) const {
  return solve_full(r, Vector::Zero(rows_.rows())).u;
}

SaddlePointSolver::Solution SaddlePointSolver::apply(const Vector& r, const Vector& c) const {
  Vector u = inertia_->solve(r);
  Vector lambda = schur_.solve(c - multiply(rows_, u));
  u += multiply(inv_m_rows_t_, lambda);
  return {u, lambda};
}

SaddlePointSolver::Solution SaddlePointSolver::solve_full(const Vector& r, const Vector& c) const {
  require(r.size() == dim(), "SaddlePointSolver::solve: length mismatch");
  require(c.size() == rows_.rows(), "SaddlePointSolver::solve: constraint rhs length mismatch");
  if (rows_.rows() == 0) return {inertia_->solve(r), Vector(0)};
  // One step of iterative refinement: the Schur complement of nearly
  // dependent rows is ill conditioned, and X u = c must hold tightly.
  Solution s = apply(r, c);
  const Vector r_res = r - inertia_->multiply(s.u) + multiply_transpose(rows_, s.multipliers);
  const Vector c_res = c - multiply(rows_, s.u);
  const Solution d = apply(r_res, c_res);
  s.u += d.u;
  s.multipliers += d.multipliers;
  return s;
}

}  // namespace rigidlcp
