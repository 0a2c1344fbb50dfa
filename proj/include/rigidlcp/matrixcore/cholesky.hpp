/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rigidlcp/matrixcore/dense.hpp"
#include "rigidlcp/matrixcore/tolerances.hpp"

namespace rigidlcp {

/// Lower-triangular Cholesky factor L (A = L L^T) stored packed by rows, with
/// O(order^2) append-at-end and remove-at-index updates.
///
/// A pivot d is accepted iff d > tol.cholesky_pivot * trace(A) / order, which
/// makes the singularity test independent of the matrix scale.
class CholeskyFactor;
using CholeskyOutcome = std::variant<CholeskyFactor, SingularPivot>;
CholeskyOutcome cholesky_factor(const Matrix& a, const Tolerances& tol);

class CholeskyFactor {
 public:
  explicit CholeskyFactor(const Tolerances& tol = {});

  Index order() const { return order_; }
  bool valid() const { return valid_; }

  /// Extends A by one row/column. `column` has order()+1 entries: the new
  /// off-diagonal entries followed by the new diagonal entry. On a rejected
  /// pivot the factor is left unchanged and the failing pivot is returned.
  std::optional<SingularPivot> append(const Vector& column);

  /// Removes row and column k of A.
  void remove(Index k);

  /// Solves A x = b.
  Vector solve(const Vector& b) const;

  Matrix lower() const;
  Matrix reconstruct() const;

  /// Sum of the diagonal of the factored matrix.
  double trace() const { return trace_; }

 private:
  friend CholeskyOutcome cholesky_factor(const Matrix&, const Tolerances&);
  double lower_entry(Index i, Index j) const { return at(i, j); }
  void push_row(const Vector& l, double diag, double a_diag);

  double& at(Index i, Index j) { return packed_[row_start(i) + j]; }
  double at(Index i, Index j) const { return packed_[row_start(i) + j]; }
  static std::size_t row_start(Index i) { return static_cast<std::size_t>(i * (i + 1) / 2); }

  Tolerances tol_;
  Index order_ = 0;
  double trace_ = 0.0;
  bool valid_ = true;
  std::vector<double> packed_;
};

/// Factors a symmetric matrix. Non-square or asymmetric input throws
/// std::invalid_argument; a non-positive-definite matrix yields the
/// SingularPivot where positivity failed.
CholeskyOutcome cholesky_factor(const Matrix& a, const Tolerances& tol);
inline CholeskyOutcome cholesky_factor(const Matrix& a) { return cholesky_factor(a, Tolerances{}); }

/// Same as cholesky_factor but throws SingularMatrixError instead.
CholeskyFactor cholesky_factor_or_throw(const Matrix& a, const Tolerances& tol = {});

Vector solve_spd(const CholeskyFactor& factor, const Vector& b);

}  // namespace rigidlcp
