/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include "rigidlcp/contactmodels/contact.hpp"
#include "rigidlcp/contactmodels/problem.hpp"

namespace rigidlcp {

/// Velocity-level MLCP with x = (v(t + dt), f_j, f_s, f_t) over the active
/// rows and y = f_n over every contact:  g = (-M v - dt f, 0),  h = 0.
/// dt = 0 resolves an impact without external impulse.
ContactProblem build_noslip_mlcp(const SystemView& sys, const JacobianBundle& jb, double dt,
                                 const ActiveRows& active);

}  // namespace rigidlcp
