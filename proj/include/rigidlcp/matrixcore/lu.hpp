/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <variant>
#include <vector>

#include "rigidlcp/matrixcore/dense.hpp"
#include "rigidlcp/matrixcore/tolerances.hpp"

namespace rigidlcp {

/// Dense LU factorization with partial pivoting, for the nonsymmetric
/// equality blocks of mixed complementarity problems.
class LuFactor {
 public:
  Index order() const { return lu_.rows(); }
  Vector solve(const Vector& b) const;
  Matrix solve(const Matrix& b) const;

 private:
  friend std::variant<LuFactor, SingularPivot> lu_factor(const Matrix&, const Tolerances&);
  Matrix lu_;
  std::vector<Index> perm_;
};

/// A pivot is rejected when |pivot| <= tol.lu_pivot * max|a|; the returned
/// SingularPivot names the elimination column.
std::variant<LuFactor, SingularPivot> lu_factor(const Matrix& a, const Tolerances& tol = {});

}  // namespace rigidlcp
