/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <memory>

#include "rigidlcp/matrixcore/block_inertia.hpp"

namespace rigidlcp {

/// Solves the saddle-point system
///
///   [ M  -X^T ] [u]   [r]
///   [ X   0   ] [l] = [c]
///
/// by the Schur complement X M^-1 X^T, which must be positive definite
/// (X full row rank). With c = 0, u = P r where P is the M-projected inverse,
/// a symmetric positive semidefinite operator; that is the inner operator of
/// both contact models.
class SaddlePointSolver final : public InnerSolver {
 public:
  /// Throws SingularMatrixError naming the Schur pivot if X lacks full row rank.
  SaddlePointSolver(std::shared_ptr<const BlockDiagInertia> inertia, Matrix rows,
                    const Tolerances& tol = {});

  struct Solution {
    Vector u;
    Vector multipliers;
  };

  Index dim() const override { return inertia_->dim(); }
  Index constraint_count() const { return rows_.rows(); }
  const Matrix& rows() const { return rows_; }
  const BlockDiagInertia& inertia() const { return *inertia_; }

  /// u for c = 0.
  Vector solve(const Vector& r) const override;
  Solution solve_full(const Vector& r, const Vector& c) const;

 private:
  Solution apply(const Vector& r, const Vector& c) const;

  std::shared_ptr<const BlockDiagInertia> inertia_;
  Matrix rows_;
  Matrix inv_m_rows_t_;  // M^-1 X^T
  CholeskyFactor schur_;
};

}  // namespace rigidlcp
