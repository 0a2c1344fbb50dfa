/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <memory>

#include "rigidlcp/matrixcore/dense.hpp"

namespace rigidlcp {

/// Handle applying the inverse of a symmetric (semi)definite operator. This is
/// the only access the pivoting solver gets to the inner matrix of an
/// implicit LCP, so the n x n contact matrix is never formed.
class InnerSolver {
 public:
  virtual ~InnerSolver() = default;
  virtual Index dim() const = 0;
  virtual Vector solve(const Vector& b) const = 0;

  /// Column-wise solve; the default loops over solve().
  virtual Matrix solve_columns(const Matrix& b) const;
};

class CholeskyFactor;

/// Inner solver backed by a dense Cholesky factor.
class DenseSpdSolver final : public InnerSolver {
 public:
  explicit DenseSpdSolver(std::shared_ptr<const CholeskyFactor> factor);
  /// Factors `a`; throws SingularMatrixError when it is not positive definite.
  static std::shared_ptr<DenseSpdSolver> from_matrix(const Matrix& a);

  Index dim() const override;
  Vector solve(const Vector& b) const override;

 private:
  std::shared_ptr<const CholeskyFactor> factor_;
};

/// The identity operator of a given dimension.
class IdentitySolver final : public InnerSolver {
 public:
  explicit IdentitySolver(Index dim) : dim_(dim) {}
  Index dim() const override { return dim_; }
  Vector solve(const Vector& b) const override;

 private:
  Index dim_;
};

}  // namespace rigidlcp
