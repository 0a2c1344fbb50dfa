/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/lcpkit/lemke.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "rigidlcp/matrixcore/counters.hpp"
#include "rigidlcp/matrixcore/lu.hpp"

namespace rigidlcp {

std::vector<double> LemkeOptions::default_schedule() {
  std::vector<double> eps{0.0};
  for (int k = 0; k <= 20; ++k) eps.push_back(1e-10 * std::ldexp(1.0, k));
  return eps;
}

namespace {

// Variables: w_i -> i, z_i -> n + i, artificial z0 -> 2n.
class LemkeTableau {
 public:
  LemkeTableau(const Matrix& q_matrix, const Vector& q)
      : q_matrix_(q_matrix), q_(q), n_(q.size()), binv_(Matrix::Identity(n_, n_)), x_(q) {
    basis_.resize(static_cast<std::size_t>(n_));
    for (Index i = 0; i < n_; ++i) basis_[static_cast<std::size_t>(i)] = i;
  }

  // Returns the solution or nullopt on ray termination / pivot budget.
  std::optional<Vector> run(std::size_t budget, std::size_t& pivots) {
    const Index z0 = 2 * n_;
    Index r = 0;
    for (Index i = 1; i < n_; ++i)
      if (q_(i) < q_(r)) r = i;
    Index entering = z0;
    pivot(r, entering, column(entering));
    ++pivots;
    Index leaving = r;  // w_r left the basis
    entering = complement(leaving);

    while (pivots < budget) {
      const Vector d = column(entering);
      const auto row = ratio_test(d);
      if (!row) return std::nullopt;
      leaving = basis_[static_cast<std::size_t>(*row)];
      pivot(*row, entering, d);
      ++pivots;
      if (leaving == z0) return extract();
      entering = complement(leaving);
    }
    return std::nullopt;
  }

 private:
  Index complement(Index var) const { return var < n_ ? var + n_ : var - n_; }

  // B^-1 times the constraint column of `var` in  I w - Q z - 1 z0 = q.
  Vector column(Index var) const {
    ops::add_macs(static_cast<std::uint64_t>(n_ * n_));
    if (var < n_) return binv_.col(var);
    if (var < 2 * n_) return -(binv_ * q_matrix_.col(var - n_));
    return -(binv_ * Vector::Ones(n_));
  }

  std::optional<Index> ratio_test(const Vector& d) const {
    const double piv_tol = 1e-12 * std::max(1.0, inf_norm(d));
    double best = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n_; ++i)
      if (d(i) > piv_tol) best = std::min(best, std::max(0.0, x_(i)) / d(i));
    if (!std::isfinite(best)) return std::nullopt;

    const double cutoff = best + 1e-12 * (1.0 + best);
    std::vector<Index> ties;
    for (Index i = 0; i < n_; ++i)
      if (d(i) > piv_tol && std::max(0.0, x_(i)) / d(i) <= cutoff) ties.push_back(i);
    // Let the artificial variable leave whenever it can.
    for (Index i : ties)
      if (basis_[static_cast<std::size_t>(i)] == 2 * n_) return i;
    // Lexicographic rule on the rows of B^-1 scaled by the pivot column.
    Index pick = ties.front();
    for (std::size_t t = 1; t < ties.size(); ++t) {
      const Index i = ties[t];
      for (Index c = 0; c < n_; ++c) {
        const double a = binv_(i, c) / d(i);
        const double b = binv_(pick, c) / d(pick);
        if (std::abs(a - b) > 1e-14 * (1.0 + std::abs(b))) {
          if (a < b) pick = i;
          break;
        }
      }
    }
    return pick;
  }

  void pivot(Index r, Index entering, const Vector& d) {
    const double dr = d(r);
    binv_.row(r) /= dr;
    for (Index i = 0; i < n_; ++i)
      if (i != r && d(i) != 0.0) binv_.row(i) -= d(i) * binv_.row(r);
    ops::add_macs(static_cast<std::uint64_t>(n_ * n_));
    basis_[static_cast<std::size_t>(r)] = entering;
    x_ = binv_ * q_;
  }

  // Solution at the terminal basis. The z block is re-solved from a fresh
  // factorization of Q over the basic z variables, since B^-1 has accumulated
  // rounding from every pivot; the tableau values are kept if that fails.
  Vector extract() const {
    Vector z = Vector::Zero(n_);
    std::vector<Index> support;
    for (Index r = 0; r < n_; ++r) {
      const Index var = basis_[static_cast<std::size_t>(r)];
      if (var >= n_ && var < 2 * n_) {
        z(var - n_) = std::max(0.0, x_(r));
        support.push_back(var - n_);
      }
    }
    if (support.empty()) return z;
    const Index k = static_cast<Index>(support.size());
    Matrix sub(k, k);
    Vector rhs(k);
    for (Index a = 0; a < k; ++a) {
      rhs(a) = -q_(support[static_cast<std::size_t>(a)]);
      for (Index b = 0; b < k; ++b)
        sub(a, b) = q_matrix_(support[static_cast<std::size_t>(a)], support[static_cast<std::size_t>(b)]);
    }
    auto lu = lu_factor(sub);
    if (!std::holds_alternative<LuFactor>(lu)) return z;
    const Vector refined = std::get<LuFactor>(lu).solve(rhs);
    if (refined.minCoeff() < -1e-9 * (1.0 + inf_norm(refined))) return z;
    for (Index a = 0; a < k; ++a) z(support[static_cast<std::size_t>(a)]) = std::max(0.0, refined(a));
    return z;
  }

  const Matrix& q_matrix_;
  const Vector& q_;
  Index n_;
  Matrix binv_;
  Vector x_;
  std::vector<Index> basis_;
};

LcpSolution package(const LcpProblem& p, Vector z, std::size_t pivots, double eps) {
  LcpSolution s;
  s.w = (p.multiply(z) + p.q() + eps * z).cwiseMax(0.0);
  for (Index i = 0; i < z.size(); ++i) {
    if (z(i) > 0.0) {
      s.w(i) = 0.0;
      s.basis.nonbasic.push_back(i);
    } else {
      s.basis.basic.push_back(i);
    }
  }
  s.z = std::move(z);
  s.pivots = pivots;
  s.max_system_order = p.size();
  s.regularization = eps;
  return s;
}

}  // namespace

LcpSolution solve_lcp_lemke(const LcpProblem& problem, const LemkeOptions& opts) {
  require(problem.is_explicit(), "solve_lcp_lemke: requires an explicit-form problem");
  require(!opts.regularization.empty(), "solve_lcp_lemke: empty regularization schedule");
  const Index n = problem.size();
  const Vector& q = problem.q();
  const double negative = -opts.tol.negativity * (1.0 + inf_norm(q));
  if (n == 0 || q.minCoeff() >= negative) return package(problem, Vector::Zero(n), 0, 0.0);

  const std::size_t budget = opts.max_pivots ? opts.max_pivots : 100 + 50 * static_cast<std::size_t>(n);
  std::size_t total_pivots = 0;
  LcpSolution last = package(problem, Vector::Zero(n), 0, 0.0);
  for (double eps : opts.regularization) {
    const Matrix q_matrix = problem.matrix() + eps * Matrix::Identity(n, n);
    LemkeTableau tableau(q_matrix, q);
    std::size_t pivots = 0;
    auto z = tableau.run(budget, pivots);
    total_pivots += pivots;
    if (!z) continue;
    LcpSolution s = package(problem, std::move(*z), total_pivots, eps);
    const LcpProblem regularized = LcpProblem::explicit_form(q_matrix, q);
    if (satisfies_invariants(regularized, s.z, s.w)) return s;
    last = std::move(s);
  }
  throw UnsolvableError("solve_lcp_lemke: no regularization level produced a valid solution",
                        last);
}

}  // namespace rigidlcp
