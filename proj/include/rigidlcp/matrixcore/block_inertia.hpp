/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <vector>

#include "rigidlcp/matrixcore/cholesky.hpp"
#include "rigidlcp/matrixcore/inner_solver.hpp"

namespace rigidlcp {

/// Generalized inertia of a multibody system: one SPD block per body, placed
/// along the diagonal. Solves are done block by block.
class BlockDiagInertia final : public InnerSolver {
 public:
  /// Throws std::invalid_argument if a block is not square, not symmetric
  /// (relative tol.inertia_symmetry) or not positive definite.
  explicit BlockDiagInertia(std::vector<Matrix> blocks, const Tolerances& tol = {});

  Index dim() const override { return dim_; }
  std::size_t block_count() const { return blocks_.size(); }
  const Matrix& block(std::size_t i) const { return blocks_[i]; }
  Index offset(std::size_t i) const { return offsets_[i]; }

  Vector solve(const Vector& b) const override;
  Vector multiply(const Vector& v) const;
  Matrix dense() const;

 private:
  std::vector<Matrix> blocks_;
  std::vector<CholeskyFactor> factors_;
  std::vector<Index> offsets_;
  Index dim_ = 0;
};

Vector inertia_solve(const BlockDiagInertia& inertia, const Vector& b);

}  // namespace rigidlcp
