/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include "rigidlcp/lcpkit/lcp.hpp"
#include "rigidlcp/matrixcore/tolerances.hpp"

namespace rigidlcp {

inline constexpr Index kMaxEnumerationSize = 16;

/// Exhaustive oracle: tries every support set in increasing bitmask order
/// (bit i set means z_i may be positive), solves Q_aa z_a = -q_a and returns
/// the first sign-feasible basis. n <= 16. Throws UnsolvableError when no
/// basis is feasible.
LcpSolution solve_lcp_enumerate(const LcpProblem& problem, const Tolerances& tol = {});

}  // namespace rigidlcp
