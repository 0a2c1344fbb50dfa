/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/matrixcore/cholesky.hpp"

#include <cmath>

#include "rigidlcp/matrixcore/counters.hpp"

namespace rigidlcp {

namespace {

// Forward substitution L l = a over the packed rows; returns the residual
// pivot a_nn - |l|^2 and fills `l`.
template <typename At>
double eliminate(Index n, const Vector& column, At&& at, Vector& l) {
  l.resize(n);
  for (Index i = 0; i < n; ++i) {
    double s = column(i);
    for (Index j = 0; j < i; ++j) s -= at(i, j) * l(j);
    l(i) = s / at(i, i);
  }
  ops::add_macs(static_cast<std::uint64_t>(n * (n + 1) / 2 + n));
  return column(n) - l.squaredNorm();
}

}  // namespace

CholeskyFactor::CholeskyFactor(const Tolerances& tol) : tol_(tol) {}

std::optional<SingularPivot> CholeskyFactor::append(const Vector& column) {
  require(column.size() == order_ + 1, "CholeskyFactor::append: column must have order+1 entries");
  require_finite(column, "CholeskyFactor::append");
  Vector l;
  const double pivot =
      eliminate(order_, column, [this](Index i, Index j) { return at(i, j); }, l);
  const double new_trace = trace_ + column(order_);
  const double threshold = tol_.cholesky_pivot * new_trace / static_cast<double>(order_ + 1);
  if (!(pivot > threshold) || !(pivot > 0.0)) return SingularPivot{order_, pivot};

  packed_.reserve(row_start(order_ + 1) + static_cast<std::size_t>(order_ + 1));
  for (Index j = 0; j < order_; ++j) packed_.push_back(l(j));
  packed_.push_back(std::sqrt(pivot));
  ++order_;
  trace_ = new_trace;
  return std::nullopt;
}

void CholeskyFactor::remove(Index k) {
  require(k >= 0 && k < order_, "CholeskyFactor::remove: index out of range");
  const Index n = order_;

  double removed_diag = 0.0;
  for (Index j = 0; j <= k; ++j) removed_diag += at(k, j) * at(k, j);

  // Column k below the diagonal feeds a rank-1 update of the trailing block.
  const Index tail = n - k - 1;
  Vector x(tail);
  for (Index i = 0; i < tail; ++i) x(i) = at(k + 1 + i, k);

  std::vector<double> next;
  next.reserve(row_start(n - 1));
  for (Index i = 0; i < n; ++i) {
    if (i == k) continue;
    for (Index j = 0; j <= i; ++j)
      if (j != k) next.push_back(at(i, j));
  }
  packed_ = std::move(next);
  order_ = n - 1;

  // Trailing block now starts at row/column k.
  for (Index jj = 0; jj < tail; ++jj) {
    const Index j = k + jj;
    const double ljj = at(j, j);
    const double r = std::hypot(ljj, x(jj));
    const double c = r / ljj;
    const double s = x(jj) / ljj;
    at(j, j) = r;
    for (Index ii = jj + 1; ii < tail; ++ii) {
      const Index i = k + ii;
      at(i, j) = (at(i, j) + s * x(ii)) / c;
      x(ii) = c * x(ii) - s * at(i, j);
    }
  }
  ops::add_macs(static_cast<std::uint64_t>(2 * tail * (tail + 1) / 2 + k + 1));
  trace_ -= removed_diag;
}

void CholeskyFactor::push_row(const Vector& l, double diag, double a_diag) {
  for (Index j = 0; j < l.size(); ++j) packed_.push_back(l(j));
  packed_.push_back(diag);
  ++order_;
  trace_ += a_diag;
}

Vector CholeskyFactor::solve(const Vector& b) const {
  require(b.size() == order_, "solve_spd: right-hand side length " + std::to_string(b.size()) +
                                  " does not match factor order " + std::to_string(order_));
  Vector y(order_);
  for (Index i = 0; i < order_; ++i) {
    double s = b(i);
    for (Index j = 0; j < i; ++j) s -= at(i, j) * y(j);
    y(i) = s / at(i, i);
  }
  Vector x(order_);
  for (Index i = order_ - 1; i >= 0; --i) {
    double s = y(i);
    for (Index j = i + 1; j < order_; ++j) s -= at(j, i) * x(j);
    x(i) = s / at(i, i);
  }
  ops::add_macs(static_cast<std::uint64_t>(order_ * (order_ + 1)));
  return x;
}

Matrix CholeskyFactor::lower() const {
  Matrix l = Matrix::Zero(order_, order_);
  for (Index i = 0; i < order_; ++i)
    for (Index j = 0; j <= i; ++j) l(i, j) = at(i, j);
  return l;
}

Matrix CholeskyFactor::reconstruct() const {
  const Matrix l = lower();
  return l * l.transpose();
}

CholeskyOutcome cholesky_factor(const Matrix& a, const Tolerances& tol) {
  require_square(a, "cholesky_factor");
  require_finite(a, "cholesky_factor");
  require(is_symmetric(a, tol.symmetry), "cholesky_factor: matrix is not symmetric");

  const Index n = a.rows();
  const double threshold = n == 0 ? 0.0 : tol.cholesky_pivot * a.trace() / static_cast<double>(n);
  CholeskyFactor f(tol);
  // Row-by-row elimination shares the append kernel, but with the threshold
  // of the complete matrix.
  for (Index i = 0; i < n; ++i) {
    Vector column = a.row(i).head(i + 1).transpose();
    Vector l;
    const double pivot = eliminate(
        i, column, [&f](Index r, Index c) { return f.lower_entry(r, c); }, l);
    if (!(pivot > threshold) || !(pivot > 0.0)) return SingularPivot{i, pivot};
    f.push_row(l, std::sqrt(pivot), a(i, i));
  }
  return f;
}

CholeskyFactor cholesky_factor_or_throw(const Matrix& a, const Tolerances& tol) {
  auto outcome = cholesky_factor(a, tol);
  if (auto* s = std::get_if<SingularPivot>(&outcome))
    throw SingularMatrixError("matrix is not positive definite (pivot " +
                                  std::to_string(s->index) + ")",
                              s->index);
  return std::get<CholeskyFactor>(std::move(outcome));
}

Vector solve_spd(const CholeskyFactor& factor, const Vector& b) { return factor.solve(b); }

}  // namespace rigidlcp
