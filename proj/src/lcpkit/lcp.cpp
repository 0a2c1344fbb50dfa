/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/lcpkit/lcp.hpp"

#include <algorithm>
#include <cmath>

#include "rigidlcp/matrixcore/counters.hpp"

namespace rigidlcp {

bool IndexPartition::valid(Index n) const {
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto* set : {&basic, &nonbasic})
    for (Index i : *set) {
      if (i < 0 || i >= n) return false;
      if (seen[static_cast<std::size_t>(i)]++) return false;
    }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

LcpProblem LcpProblem::explicit_form(Matrix q_matrix, Vector q) {
  require_square(q_matrix, "LcpProblem");
  require(q_matrix.rows() == q.size(), "LcpProblem: matrix order " +
                                           std::to_string(q_matrix.rows()) +
                                           " does not match q length " + std::to_string(q.size()));
  require_finite(q_matrix, "LcpProblem matrix");
  require_finite(q, "LcpProblem q");
  LcpProblem p;
  p.matrix_ = std::move(q_matrix);
  p.q_ = std::move(q);
  return p;
}

LcpProblem LcpProblem::implicit_form(Matrix rows, std::shared_ptr<const InnerSolver> inner,
                                     Vector free, Vector offset) {
  require(inner != nullptr, "LcpProblem: null inner solver");
  require(rows.cols() == inner->dim(), "LcpProblem: contact rows have " +
                                           std::to_string(rows.cols()) +
                                           " columns, inner dimension is " +
                                           std::to_string(inner->dim()));
  require(free.size() == inner->dim(), "LcpProblem: free vector length mismatch");
  if (offset.size() == 0) offset = Vector::Zero(rows.rows());
  require(offset.size() == rows.rows(), "LcpProblem: offset length mismatch");
  require_finite(rows, "LcpProblem rows");
  require_finite(free, "LcpProblem free vector");
  require_finite(offset, "LcpProblem offset");
  LcpProblem p;
  p.q_ = rigidlcp::multiply(rows, free) + offset;
  p.implicit_ = std::make_shared<ImplicitForm>(
      ImplicitForm{std::move(rows), std::move(inner), std::move(free), std::move(offset)});
  return p;
}

const Matrix& LcpProblem::matrix() const {
  if (implicit_) throw std::logic_error("LcpProblem::matrix: problem is implicit");
  return matrix_;
}

const ImplicitForm& LcpProblem::implicit() const {
  if (!implicit_) throw std::logic_error("LcpProblem::implicit: problem is explicit");
  return *implicit_;
}

Vector LcpProblem::multiply(const Vector& z) const {
  require(z.size() == size(), "LcpProblem::multiply: length mismatch");
  if (!implicit_) return rigidlcp::multiply(matrix_, z);
  const Vector inner = implicit_->inner->solve(multiply_transpose(implicit_->rows, z));
  return rigidlcp::multiply(implicit_->rows, inner);
}

Matrix LcpProblem::materialize() const {
  if (!implicit_) return matrix_;
  const Matrix p_gt = implicit_->inner->solve_columns(implicit_->rows.transpose());
  Matrix q = rigidlcp::multiply(implicit_->rows, p_gt);
  return 0.5 * (q + q.transpose());
}

LcpProblem LcpProblem::to_explicit() const {
  if (!implicit_) return *this;
  return explicit_form(materialize(), q_);
}

LcpResiduals residuals(const LcpProblem& p, const Vector& z, const Vector& w) {
  require(z.size() == p.size() && w.size() == p.size(), "residuals: length mismatch");
  LcpResiduals r;
  if (p.size() == 0) return r;
  r.min_z = z.minCoeff();
  r.min_w = w.minCoeff();
  r.complementarity = std::abs(z.dot(w));
  r.equation = inf_norm(p.multiply(z) + p.q() - w);
  return r;
}

bool satisfies_invariants(const LcpProblem& p, const Vector& z, const Vector& w) {
  const LcpResiduals r = residuals(p, z, w);
  return r.min_z >= -1e-9 && r.min_w >= -1e-9 &&
         r.complementarity <= 1e-8 * (1.0 + z.norm() * w.norm()) &&
         r.equation <= 1e-8 * (1.0 + inf_norm(p.q()));
}

}  // namespace rigidlcp
