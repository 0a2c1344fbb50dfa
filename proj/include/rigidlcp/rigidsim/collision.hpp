/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <vector>

#include "rigidlcp/contactmodels/contact.hpp"
#include "rigidlcp/rigidsim/multibody.hpp"

namespace rigidlcp {

struct CollisionOptions {
  // Points within this distance of a surface are reported as contacts.
  double contact_distance = 1e-6;
  // Deepest penetration still reported as a contact.
  double max_penetration = 1e-3;
  // Collapse box-box contacts whose positions coincide within contact_distance.
  bool merge_coincident = true;
  // Each contact is repeated this many times (scaling experiments).
  int duplication = 1;
  Tolerances tol{};
};

/// Plane-box vertices, plane-sphere and box-box face contacts; any other pair
/// of non-environment geometries throws std::invalid_argument once their
/// bounding spheres come within contact distance. For a pair
/// (g1, g2) the normal points from g1's body into g2's body.
std::vector<ContactPoint> generate_contacts(const MultibodySystem& sys,
                                            const CollisionOptions& opts = {});

/// Each contact repeated `factor` times, copies adjacent.
std::vector<ContactPoint> duplicate_contacts(const std::vector<ContactPoint>& contacts, int factor);

/// Contact rows for the current configuration with J from the joints.
JacobianBundle system_jacobians(const MultibodySystem& sys, const std::vector<ContactPoint>& contacts);

}  // namespace rigidlcp
