/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <cstddef>

#include "rigidlcp/lcpkit/lcp.hpp"
#include "rigidlcp/matrixcore/tolerances.hpp"

namespace rigidlcp {

struct PpmOptions {
  // Maintain the active-set Cholesky factor with append/remove updates instead
  // of refactoring it at every pivot.
  bool incremental = false;
  // 0 selects the default budget of 50 + 10 n pivots.
  std::size_t max_pivots = 0;
  // On revisiting an active set, restart with a feasible-step active-set
  // iteration (z stays nonnegative, same active-set systems) that cannot cycle.
  // Disable to run the plain iteration only.
  bool cycle_fallback = true;
  Tolerances tol{};
};

/// Principal pivoting for LCPs of the form (N f* + offset, N P N^T), where P
/// is applied through `inner`. Only systems over the current active set are
/// assembled, so the largest one has order at most min(n, rank P). Returns
/// z = 0, w = q immediately when q >= 0.
///
/// The budget is shared by both phases. Throws IterationLimitError (carrying
/// the last iterate) if it is exhausted, and LcpSolverError if an active-set system turns singular.
LcpSolution solve_lcp_ppm(const Matrix& contact_rows, const InnerSolver& inner,
                          const Vector& f_star, const PpmOptions& opts = {},
                          const Vector& offset = Vector());

/// Same, for an implicit-form problem.
LcpSolution solve_lcp_ppm(const LcpProblem& problem, const PpmOptions& opts = {});

}  // namespace rigidlcp
