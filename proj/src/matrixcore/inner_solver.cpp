/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/matrixcore/block_inertia.hpp"

#include "rigidlcp/matrixcore/counters.hpp"

namespace rigidlcp {

Matrix InnerSolver::solve_columns(const Matrix& b) const {
  Matrix x(b.rows(), b.cols());
  for (Index c = 0; c < b.cols(); ++c) x.col(c) = solve(Vector(b.col(c)));
  return x;
}

DenseSpdSolver::DenseSpdSolver(std::shared_ptr<const CholeskyFactor> factor)
    : factor_(std::move(factor)) {}

std::shared_ptr<DenseSpdSolver> DenseSpdSolver::from_matrix(const Matrix& a) {
  return std::make_shared<DenseSpdSolver>(
      std::make_shared<const CholeskyFactor>(cholesky_factor_or_throw(a)));
}

Index DenseSpdSolver::dim() const { return factor_->order(); }

Vector DenseSpdSolver::solve(const Vector& b) const { return factor_->solve(b); }

Vector IdentitySolver::solve(const Vector& b) const {
  require(b.size() == dim_, "IdentitySolver::solve: length mismatch");
  return b;
}

}  // namespace rigidlcp
