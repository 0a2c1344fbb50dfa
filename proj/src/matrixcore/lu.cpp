/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/matrixcore/lu.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "rigidlcp/matrixcore/counters.hpp"

namespace rigidlcp {

std::variant<LuFactor, SingularPivot> lu_factor(const Matrix& a, const Tolerances& tol) {
  require_square(a, "lu_factor");
  require_finite(a, "lu_factor");
  const Index n = a.rows();
  LuFactor f;
  f.lu_ = a;
  f.perm_.resize(static_cast<std::size_t>(n));
  std::iota(f.perm_.begin(), f.perm_.end(), Index{0});
  const double threshold = tol.lu_pivot * std::max(1e-300, max_abs(a));

  Matrix& lu = f.lu_;
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    for (Index i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    if (!(std::abs(lu(p, k)) > threshold)) return SingularPivot{k, lu(p, k)};
    if (p != k) {
      lu.row(p).swap(lu.row(k));
      std::swap(f.perm_[static_cast<std::size_t>(p)], f.perm_[static_cast<std::size_t>(k)]);
    }
    for (Index i = k + 1; i < n; ++i) {
      lu(i, k) /= lu(k, k);
      lu.row(i).tail(n - k - 1) -= lu(i, k) * lu.row(k).tail(n - k - 1);
    }
  }
  ops::add_macs(static_cast<std::uint64_t>(n * n * n / 3));
  return f;
}

Vector LuFactor::solve(const Vector& b) const {
  const Index n = order();
  require(b.size() == n, "LuFactor::solve: length mismatch");
  Vector x(n);
  for (Index i = 0; i < n; ++i) x(i) = b(perm_[static_cast<std::size_t>(i)]);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j) x(i) -= lu_(i, j) * x(j);
  for (Index i = n - 1; i >= 0; --i) {
    for (Index j = i + 1; j < n; ++j) x(i) -= lu_(i, j) * x(j);
    x(i) /= lu_(i, i);
  }
  ops::add_macs(static_cast<std::uint64_t>(n * n));
  return x;
}

Matrix LuFactor::solve(const Matrix& b) const {
  Matrix x(b.rows(), b.cols());
  for (Index c = 0; c < b.cols(); ++c) x.col(c) = solve(Vector(b.col(c)));
  return x;
}

}  // namespace rigidlcp
