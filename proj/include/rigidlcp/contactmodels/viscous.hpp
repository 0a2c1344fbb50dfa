/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include "rigidlcp/contactmodels/contact.hpp"
#include "rigidlcp/contactmodels/problem.hpp"

namespace rigidlcp {

/// f* = -f + S^T mu_v S v + T^T mu_v T v
Vector viscous_f_star(const SystemView& sys, const JacobianBundle& jb);

/// Acceleration-level MLCP with x = (v', f_j) over the independent J rows,
/// y = f_n:  g = (f*, J'v),  h = N'v.
ContactProblem build_viscous_mlcp(const SystemView& sys, const JacobianBundle& jb,
                                  const Tolerances& tol = {});

}  // namespace rigidlcp
