/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace rigidlcp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Raised when a factorization hits a non-positive (or vanishing) pivot where
/// the caller required a nonsingular matrix.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, Index pivot)
      : std::runtime_error(what), pivot_(pivot) {}
  Index pivot() const { return pivot_; }

 private:
  Index pivot_;
};

/// Pivot position (0-based) and value at which a factorization stopped.
struct SingularPivot {
  Index index = 0;
  double value = 0.0;
};

void require(bool condition, const std::string& message);
void require_finite(const Matrix& m, const std::string& what);
void require_finite(const Vector& v, const std::string& what);
void require_square(const Matrix& m, const std::string& what);
bool is_symmetric(const Matrix& m, double rel_tol);

double inf_norm(const Vector& v);
double max_abs(const Matrix& m);

Matrix select_rows(const Matrix& m, std::span<const Index> rows);
Vector select(const Vector& v, std::span<const Index> idx);

// Counted kernels. Each adds its multiply-accumulate count to ops::mac_count().
Vector multiply(const Matrix& a, const Vector& x);
Vector multiply_transpose(const Matrix& a, const Vector& x);
Matrix multiply(const Matrix& a, const Matrix& b);
double dot(const Vector& a, const Vector& b);

}  // namespace rigidlcp
