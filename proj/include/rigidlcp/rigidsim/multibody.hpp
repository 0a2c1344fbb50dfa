/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <memory>
#include <string>
#include <vector>

#include "rigidlcp/contactmodels/contact.hpp"
#include "rigidlcp/contactmodels/problem.hpp"
#include "rigidlcp/matrixcore/block_inertia.hpp"

namespace rigidlcp {

using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

struct RigidBody {
  std::string name;
  double mass = 1.0;
  Mat3 inertia = Mat3::Identity();  // body frame
  Vec3 position = Vec3::Zero();
  Quat orientation = Quat::Identity();
  Vec3 linear_velocity = Vec3::Zero();
  Vec3 angular_velocity = Vec3::Zero();  // world frame
  // Constant external load in addition to gravity.
  Vec3 applied_force = Vec3::Zero();
  Vec3 applied_torque = Vec3::Zero();

  Mat3 world_inertia() const;
  /// Throws std::invalid_argument unless mass > 0, inertia SPD and the
  /// orientation is a unit quaternion within tol.quaternion.
  void validate(const Tolerances& tol = {}) const;
};

/// Keeps two body-fixed anchor points coincident (3 rows of J).
struct SphericalJoint {
  int body_a = 0;
  int body_b = 0;
  Vec3 anchor_a = Vec3::Zero();  // body frame of a
  Vec3 anchor_b = Vec3::Zero();  // body frame of b
};

struct Geometry {
  enum class Kind { plane, box, sphere };
  Kind kind = Kind::plane;
  int body = kEnvironment;  // planes belong to the environment
  Vec3 half_extents = Vec3::Zero();
  double radius = 0.0;  // 0 makes a particle
  Vec3 normal = Vec3::UnitZ();  // plane: points = {x : normal . x = offset}
  double offset = 0.0;

  static Geometry plane(const Vec3& normal, double offset);
  static Geometry box(int body, const Vec3& half_extents);
  static Geometry sphere(int body, double radius);
};

/// Bodies with 6 generalized coordinates each: world linear velocity, then
/// world angular velocity.
class MultibodySystem {
 public:
  std::vector<RigidBody> bodies;
  std::vector<SphericalJoint> joints;
  std::vector<Geometry> geometries;
  Vec3 gravity = Vec3(0, 0, -9.8);
  double time = 0.0;

  int add_body(RigidBody body);
  Index dof() const { return 6 * static_cast<Index>(bodies.size()); }
  void validate(const Tolerances& tol = {}) const;

  std::shared_ptr<BlockDiagInertia> inertia() const;
  Vector velocity() const;
  void set_velocity(const Vector& v);
  /// Gravity, applied loads and the gyroscopic torque -w x (I w).
  Vector generalized_force() const;
  /// Joint rows at the current configuration.
  Matrix joint_jacobian() const;
  std::vector<Vec3> centers() const;
  SystemView view() const;

  /// x += dt v; orientation advanced by the quaternion exponential of dt w.
  void integrate_positions(double dt);
  void integrate_positions(double dt, const Vector& v);
};

/// 0.5 v^T M v
double kinetic_energy(const MultibodySystem& sys);

}  // namespace rigidlcp
