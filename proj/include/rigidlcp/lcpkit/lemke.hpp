/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <cstddef>
#include <vector>

#include "rigidlcp/lcpkit/lcp.hpp"
#include "rigidlcp/matrixcore/tolerances.hpp"

namespace rigidlcp {

struct LemkeOptions {
  // Diagonal shifts tried in order; the first one that succeeds is reported.
  // Default: 0, then 1e-10 * 2^k for k = 0..20.
  std::vector<double> regularization = default_schedule();
  // 0 selects 100 + 50 n pivots per attempt.
  std::size_t max_pivots = 0;
  Tolerances tol{};

  static std::vector<double> default_schedule();
};

/// Lemke's complementary pivoting with a covering vector of ones and a
/// lexicographic ratio test. Explicit problems only. Throws UnsolvableError if
/// every regularization level ends in ray termination or fails validation.
LcpSolution solve_lcp_lemke(const LcpProblem& problem, const LemkeOptions& opts = {});

}  // namespace rigidlcp
