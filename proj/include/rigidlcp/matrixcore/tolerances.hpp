/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

namespace rigidlcp {

/// Every numerical threshold used by the library, in one place. Components
/// take a copy so tests can tighten or loosen all checks uniformly.
struct Tolerances {
  // Cholesky pivot accepted iff pivot > cholesky_pivot * (trace / order).
  double cholesky_pivot = 1e-10;
  // Symmetry check for SPD input, relative to the largest entry.
  double symmetry = 1e-10;
  // Block-diagonal inertia symmetry check.
  double inertia_symmetry = 1e-12;
  // LU pivot rejected iff |pivot| <= lu_pivot * max|entry|.
  double lu_pivot = 1e-12;
  // A complementarity component is negative iff < -negativity * (1 + |q|_inf).
  double negativity = 1e-9;
  // Ties in argmin selections: entries within this of the minimum.
  double argmin_tie = 1e-12;
  // Approach speed below -impact_speed counts as an impact.
  double impact_speed = 1e-9;
  // Contact generation distance threshold (length units).
  double contact_distance = 1e-6;
  // Tangent frame fallback when |n x e_x| is below this.
  double tangent_degenerate = 1e-6;
  // Unit-length and orthogonality checks on contact frames.
  double frame = 1e-10;
  // Quaternion unit-norm check.
  double quaternion = 1e-9;
};

}  // namespace rigidlcp
