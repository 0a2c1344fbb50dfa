/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <vector>

#include "rigidlcp/matrixcore/dense.hpp"
#include "rigidlcp/matrixcore/tolerances.hpp"

namespace rigidlcp {

using Vec3 = Eigen::Vector3d;

/// Body id used for the static environment (planes fixed in the world).
inline constexpr int kEnvironment = -1;

/// A point contact between body_a and body_b. The normal points from body_b
/// toward body_a, so n^T (v_a - v_b) > 0 means separation.
struct ContactPoint {
  int body_a = kEnvironment;
  int body_b = kEnvironment;
  Vec3 position = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
  Vec3 tangent_s = Vec3::UnitX();
  Vec3 tangent_t = Vec3::UnitY();
  // Signed distance at generation time (negative when penetrating).
  double distance = 0.0;

  /// Throws std::invalid_argument unless n, s, t are unit length and mutually
  /// orthogonal within tol.frame.
  void validate(const Tolerances& tol = {}) const;
};

struct TangentFrame {
  Vec3 s;
  Vec3 t;
};

/// s is the normalized projection of world x onto the tangent plane, or of
/// world y when |n x x| < tol.tangent_degenerate; t = n x s.
TangentFrame tangent_frame(const Vec3& normal, const Tolerances& tol = {});

/// Contact with its frame filled in from the normal.
ContactPoint make_contact(int body_a, int body_b, const Vec3& position, const Vec3& normal,
                          double distance = 0.0, const Tolerances& tol = {});

/// Constraint rows over m generalized coordinates.
struct JacobianBundle {
  Matrix J;  // bilateral, j x m
  Matrix N;  // contact normal, n x m
  Matrix S;  // first tangent, n x m
  Matrix T;  // second tangent, n x m
  // J'v and N'v; empty means zero.
  Vector j_drift;
  Vector n_drift;
  // Viscous coefficient per contact; empty means zero.
  Vector mu_v;
  // Coulomb coefficient, pyramid baseline only.
  double mu_c = 0.0;

  Index dof() const { return N.cols(); }
  Index contact_count() const { return N.rows(); }
  Index bilateral_count() const { return J.rows(); }

  /// Throws std::invalid_argument on inconsistent shapes or negative coefficients.
  void validate() const;
  Vector j_drift_or_zero() const;
  Vector n_drift_or_zero() const;
  Vector mu_v_or_zero() const;
};

/// Generalized coordinates are 6 per body: world linear velocity, then world
/// angular velocity. The row of a direction d at point p is
/// [d^T, ((p - c_a) x d)^T] on body a and its negative on body b.
Matrix contact_direction_rows(const std::vector<ContactPoint>& contacts,
                              const std::vector<Vec3>& centers, const Vec3 ContactPoint::*direction);

/// N, S, T for the given contacts; J is left empty and mu_v zero.
JacobianBundle contact_jacobians(const std::vector<ContactPoint>& contacts,
                                 const std::vector<Vec3>& centers);

}  // namespace rigidlcp
