/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidlcp/matrixcore/dense.hpp"
#include "rigidlcp/matrixcore/inner_solver.hpp"

namespace rigidlcp {

/// Split of the indices 0..n-1 used by the pivoting solvers. Indices in
/// `nonbasic` have their z component solved for (w_i = 0); indices in `basic`
/// have z_i = 0.
struct IndexPartition {
  std::vector<Index> basic;
  std::vector<Index> nonbasic;

  /// Both sets are disjoint and cover 0..n-1.
  bool valid(Index n) const;
};

struct LcpSolution {
  Vector z;
  Vector w;
  IndexPartition basis;
  std::size_t pivots = 0;
  // Largest linear system assembled while solving.
  Index max_system_order = 0;
  // Diagonal shift actually used (Lemke only).
  double regularization = 0.0;
};

/// Implicit LCP matrix Q = G P G^T where P is applied through an inner solver.
struct ImplicitForm {
  Matrix rows;                                // G, n x k
  std::shared_ptr<const InnerSolver> inner;   // P, k x k
  Vector free;                                // q = G free + offset
  Vector offset;
};

/// w = Q z + q, w >= 0, z >= 0, z^T w = 0, in explicit (Q stored) or implicit
/// (Q = G P G^T never formed) form.
class LcpProblem {
 public:
  static LcpProblem explicit_form(Matrix q_matrix, Vector q);
  /// `offset` may be empty (treated as zero).
  static LcpProblem implicit_form(Matrix rows, std::shared_ptr<const InnerSolver> inner,
                                  Vector free, Vector offset = Vector());

  Index size() const { return q_.size(); }
  const Vector& q() const { return q_; }
  bool is_explicit() const { return !implicit_; }

  /// Explicit matrix; throws std::logic_error for implicit problems.
  const Matrix& matrix() const;
  const ImplicitForm& implicit() const;

  /// Q z in either form.
  Vector multiply(const Vector& z) const;
  /// Q as a dense matrix (forms G P G^T for implicit problems).
  Matrix materialize() const;
  /// Explicit copy of this problem.
  LcpProblem to_explicit() const;

 private:
  Vector q_;
  Matrix matrix_;
  std::shared_ptr<ImplicitForm> implicit_;
};

struct LcpResiduals {
  double min_z = 0.0;
  double min_w = 0.0;
  double complementarity = 0.0;  // |z^T w|
  double equation = 0.0;         // |Q z + q - w|_inf
};

LcpResiduals residuals(const LcpProblem& p, const Vector& z, const Vector& w);

/// The three solution invariants: z, w >= -1e-9, |z^T w| <= 1e-8 (1 + |z||w|)
/// and |Q z + q - w|_inf <= 1e-8 (1 + |q|_inf).
bool satisfies_invariants(const LcpProblem& p, const Vector& z, const Vector& w);

class LcpSolverError : public std::runtime_error {
 public:
  LcpSolverError(const std::string& what, LcpSolution best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const LcpSolution& best_iterate() const { return best_; }

 private:
  LcpSolution best_;
};

/// Pivot budget exhausted: degenerate cycling or a non-PSD matrix.
class IterationLimitError : public LcpSolverError {
 public:
  using LcpSolverError::LcpSolverError;
};

/// No solution was found (ray termination, no feasible basis).
class UnsolvableError : public LcpSolverError {
 public:
  using LcpSolverError::LcpSolverError;
};

}  // namespace rigidlcp
