/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/matrixcore/block_inertia.hpp"

#include "rigidlcp/matrixcore/counters.hpp"

namespace rigidlcp {

BlockDiagInertia::BlockDiagInertia(std::vector<Matrix> blocks, const Tolerances& tol)
    : blocks_(std::move(blocks)) {
  factors_.reserve(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const Matrix& m = blocks_[b];
    const std::string name = "inertia block " + std::to_string(b);
    require_square(m, name);
    require_finite(m, name);
    require(is_symmetric(m, tol.inertia_symmetry), name + " is not symmetric");
    auto outcome = cholesky_factor(m, tol);
    require(std::holds_alternative<CholeskyFactor>(outcome), name + " is not positive definite");
    factors_.push_back(std::get<CholeskyFactor>(std::move(outcome)));
    offsets_.push_back(dim_);
    dim_ += m.rows();
  }
}

Vector BlockDiagInertia::solve(const Vector& b) const {
  require(b.size() == dim_, "inertia_solve: length " + std::to_string(b.size()) +
                                " does not match dimension " + std::to_string(dim_));
  Vector x(dim_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const Index n = blocks_[k].rows();
    x.segment(offsets_[k], n) = factors_[k].solve(b.segment(offsets_[k], n));
  }
  return x;
}

Vector BlockDiagInertia::multiply(const Vector& v) const {
  require(v.size() == dim_, "BlockDiagInertia::multiply: length mismatch");
  Vector out(dim_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const Index n = blocks_[k].rows();
    out.segment(offsets_[k], n) = blocks_[k] * v.segment(offsets_[k], n);
    ops::add_macs(static_cast<std::uint64_t>(n * n));
  }
  return out;
}

Matrix BlockDiagInertia::dense() const {
  Matrix m = Matrix::Zero(dim_, dim_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const Index n = blocks_[k].rows();
    m.block(offsets_[k], offsets_[k], n, n) = blocks_[k];
  }
  return m;
}

Vector inertia_solve(const BlockDiagInertia& inertia, const Vector& b) { return inertia.solve(b); }

}  // namespace rigidlcp
