/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <iosfwd>

#include "rigidlcp/rigidsim/multibody.hpp"

namespace rigidlcp {

// Plain-text state records, 17 significant digits:
//
//   state <body count> <time>
//   body <index> <px py pz> <qw qx qy qz> <vx vy vz> <wx wy wz>
void write_state(std::ostream& os, const MultibodySystem& sys);

/// Restores poses, velocities and time into a system with the same bodies.
/// Throws std::runtime_error on malformed records or a body-count mismatch.
void read_state(std::istream& is, MultibodySystem& sys);

}  // namespace rigidlcp
