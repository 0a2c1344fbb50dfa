/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include "rigidlcp/contactmodels/problem.hpp"
#include "rigidlcp/matrixcore/block_inertia.hpp"

namespace rigidlcp {

/// Greedy row selection: all J rows in order, then S_i, T_i for each contact
/// i. A row is kept iff X M^-1 X^T stays positive definite after appending it
/// (one Cholesky append per candidate). Empty matrices are allowed.
ActiveRows find_indices(const BlockDiagInertia& inertia, const Matrix& J, const Matrix& S,
                        const Matrix& T, const Tolerances& tol = {});

}  // namespace rigidlcp
