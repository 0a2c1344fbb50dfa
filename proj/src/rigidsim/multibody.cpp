/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/rigidsim/multibody.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

namespace rigidlcp {

namespace {

Mat3 skew(const Vec3& r) {
  Mat3 s;
  s << 0, -r.z(), r.y(), r.z(), 0, -r.x(), -r.y(), r.x(), 0;
  return s;
}

}  // namespace

Mat3 RigidBody::world_inertia() const {
  const Mat3 r = orientation.toRotationMatrix();
  return r * inertia * r.transpose();
}

void RigidBody::validate(const Tolerances& tol) const {
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw std::invalid_argument("RigidBody '" + name + "': mass must be positive");
  if (!inertia.allFinite() || !inertia.isApprox(inertia.transpose(), tol.inertia_symmetry) ||
      Eigen::LLT<Mat3>(inertia).info() != Eigen::Success)
    throw std::invalid_argument("RigidBody '" + name + "': inertia must be symmetric positive definite");
  if (std::abs(orientation.norm() - 1.0) > tol.quaternion)
    throw std::invalid_argument("RigidBody '" + name + "': orientation is not a unit quaternion");
  if (!position.allFinite() || !linear_velocity.allFinite() || !angular_velocity.allFinite())
    throw std::invalid_argument("RigidBody '" + name + "': non-finite state");
}

Geometry Geometry::plane(const Vec3& normal, double offset) {
  Geometry g;
  g.kind = Kind::plane;
  g.normal = normal.normalized();
  g.offset = offset;
  return g;
}

Geometry Geometry::box(int body, const Vec3& half_extents) {
  Geometry g;
  g.kind = Kind::box;
  g.body = body;
  g.half_extents = half_extents;
  return g;
}

Geometry Geometry::sphere(int body, double radius) {
  Geometry g;
  g.kind = Kind::sphere;
  g.body = body;
  g.radius = radius;
  return g;
}

int MultibodySystem::add_body(RigidBody body) {
  bodies.push_back(std::move(body));
  return static_cast<int>(bodies.size()) - 1;
}

void MultibodySystem::validate(const Tolerances& tol) const {
  for (const RigidBody& b : bodies) b.validate(tol);
  const int n = static_cast<int>(bodies.size());
  for (const SphericalJoint& j : joints)
    if (j.body_a < 0 || j.body_a >= n || j.body_b < 0 || j.body_b >= n || j.body_a == j.body_b)
      throw std::invalid_argument("SphericalJoint: invalid body pair");
  for (const Geometry& g : geometries)
    if ((g.kind == Geometry::Kind::plane) != (g.body == kEnvironment) || g.body >= n)
      throw std::invalid_argument("Geometry: planes belong to the environment, shapes to bodies");
}

std::shared_ptr<BlockDiagInertia> MultibodySystem::inertia() const {
  std::vector<Matrix> blocks;
  blocks.reserve(bodies.size());
  for (const RigidBody& b : bodies) {
    Matrix block = Matrix::Zero(6, 6);
    block.topLeftCorner(3, 3) = b.mass * Matrix::Identity(3, 3);
    const Mat3 iw = b.world_inertia();
    block.bottomRightCorner(3, 3) = 0.5 * (iw + iw.transpose());
    blocks.push_back(std::move(block));
  }
  return std::make_shared<BlockDiagInertia>(std::move(blocks));
}

Vector MultibodySystem::velocity() const {
  Vector v(dof());
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    v.segment<3>(6 * static_cast<Index>(i)) = bodies[i].linear_velocity;
    v.segment<3>(6 * static_cast<Index>(i) + 3) = bodies[i].angular_velocity;
  }
  return v;
}

void MultibodySystem::set_velocity(const Vector& v) {
  require(v.size() == dof(), "MultibodySystem::set_velocity: length mismatch");
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    bodies[i].linear_velocity = v.segment<3>(6 * static_cast<Index>(i));
    bodies[i].angular_velocity = v.segment<3>(6 * static_cast<Index>(i) + 3);
  }
}

Vector MultibodySystem::generalized_force() const {
  Vector f(dof());
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    const RigidBody& b = bodies[i];
    const Vec3 w = b.angular_velocity;
    f.segment<3>(6 * static_cast<Index>(i)) = b.mass * gravity + b.applied_force;
    f.segment<3>(6 * static_cast<Index>(i) + 3) = b.applied_torque - w.cross(b.world_inertia() * w);
  }
  return f;
}

Matrix MultibodySystem::joint_jacobian() const {
  Matrix j = Matrix::Zero(3 * static_cast<Index>(joints.size()), dof());
  for (std::size_t k = 0; k < joints.size(); ++k) {
    const SphericalJoint& jt = joints[k];
    const Index row = 3 * static_cast<Index>(k);
    const auto put = [&](int body, const Vec3& anchor, double sign) {
      const RigidBody& b = bodies[static_cast<std::size_t>(body)];
      const Vec3 r = b.orientation * anchor;
      j.block<3, 3>(row, 6 * body) = sign * Mat3::Identity();
      j.block<3, 3>(row, 6 * body + 3) = -sign * skew(r);  // w x r = -[r]x w
    };
    put(jt.body_a, jt.anchor_a, 1.0);
    put(jt.body_b, jt.anchor_b, -1.0);
  }
  return j;
}

std::vector<Vec3> MultibodySystem::centers() const {
  std::vector<Vec3> c;
  c.reserve(bodies.size());
  for (const RigidBody& b : bodies) c.push_back(b.position);
  return c;
}

SystemView MultibodySystem::view() const { return {inertia(), velocity(), generalized_force()}; }

void MultibodySystem::integrate_positions(double dt) { integrate_positions(dt, velocity()); }

void MultibodySystem::integrate_positions(double dt, const Vector& v) {
  require(v.size() == dof(), "MultibodySystem::integrate_positions: length mismatch");
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    RigidBody& b = bodies[i];
    b.position += dt * Vec3(v.segment<3>(6 * static_cast<Index>(i)));
    const Vec3 w = v.segment<3>(6 * static_cast<Index>(i) + 3);
    const double angle = w.norm() * dt;
    if (angle > 0.0) b.orientation = Quat(Eigen::AngleAxisd(angle, w.normalized())) * b.orientation;
    b.orientation.normalize();
  }
}

double kinetic_energy(const MultibodySystem& sys) {
  double e = 0.0;
  for (const RigidBody& b : sys.bodies)
    e += 0.5 * b.mass * b.linear_velocity.squaredNorm() +
         0.5 * b.angular_velocity.dot(b.world_inertia() * b.angular_velocity);
  return e;
}

}  // namespace rigidlcp
