/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/matrixcore/dense.hpp"

#include <algorithm>
#include <cmath>

#include "rigidlcp/matrixcore/counters.hpp"

namespace rigidlcp {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

void require_finite(const Matrix& m, const std::string& what) {
  require(m.allFinite(), what + ": non-finite entry");
}

void require_finite(const Vector& v, const std::string& what) {
  require(v.allFinite(), what + ": non-finite entry");
}

void require_square(const Matrix& m, const std::string& what) {
  require(m.rows() == m.cols(), what + ": matrix is " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ", expected square");
}

bool is_symmetric(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < i; ++j)
      if (std::abs(m(i, j) - m(j, i)) > rel_tol * scale) return false;
  return true;
}

double inf_norm(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Matrix select_rows(const Matrix& m, std::span<const Index> rows) {
  Matrix out(static_cast<Index>(rows.size()), m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) out.row(static_cast<Index>(k)) = m.row(rows[k]);
  return out;
}

Vector select(const Vector& v, std::span<const Index> idx) {
  Vector out(static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out(static_cast<Index>(k)) = v(idx[k]);
  return out;
}

Vector multiply(const Matrix& a, const Vector& x) {
  require(a.cols() == x.size(), "multiply: dimension mismatch");
  ops::add_macs(static_cast<std::uint64_t>(a.rows() * a.cols()));
  return a * x;
}

Vector multiply_transpose(const Matrix& a, const Vector& x) {
  require(a.rows() == x.size(), "multiply_transpose: dimension mismatch");
  ops::add_macs(static_cast<std::uint64_t>(a.rows() * a.cols()));
  return a.transpose() * x;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "multiply: dimension mismatch");
  ops::add_macs(static_cast<std::uint64_t>(a.rows() * a.cols() * b.cols()));
  return a * b;
}

double dot(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "dot: dimension mismatch");
  ops::add_macs(static_cast<std::uint64_t>(a.size()));
  return a.dot(b);
}

}  // namespace rigidlcp
