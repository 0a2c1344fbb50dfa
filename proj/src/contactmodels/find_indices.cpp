/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/contactmodels/find_indices.hpp"

#include "rigidlcp/matrixcore/cholesky.hpp"

namespace rigidlcp {

ActiveRows find_indices(const BlockDiagInertia& inertia, const Matrix& J, const Matrix& S,
                        const Matrix& T, const Tolerances& tol) {
  const Index m = inertia.dim();
  for (const Matrix* rows : {&J, &S, &T})
    require(rows->rows() == 0 || rows->cols() == m, "find_indices: rows must have m columns");
  require(S.rows() == T.rows(), "find_indices: S and T must have one row per contact");

  CholeskyFactor factor(tol);
  std::vector<Vector> accepted;  // rows of X
  ActiveRows out;

  const auto try_row = [&](const Matrix& src, Index i) {
    if (static_cast<Index>(accepted.size()) == m) return false;
    Vector row = src.row(i).transpose();
    const Vector inv_m_row = inertia.solve(row);
    Vector column(static_cast<Index>(accepted.size()) + 1);
    for (std::size_t k = 0; k < accepted.size(); ++k)
      column(static_cast<Index>(k)) = dot(accepted[k], inv_m_row);
    column(column.size() - 1) = dot(row, inv_m_row);
    if (factor.append(column)) return false;
    accepted.push_back(std::move(row));
    return true;
  };

  for (Index i = 0; i < J.rows(); ++i)
    if (try_row(J, i)) out.j.push_back(i);
  for (Index i = 0; i < S.rows(); ++i) {
    if (try_row(S, i)) out.s.push_back(i);
    if (try_row(T, i)) out.t.push_back(i);
  }
  return out;
}

}  // namespace rigidlcp
