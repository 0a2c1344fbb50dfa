/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/rigidsim/collision.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace rigidlcp {

namespace {

using Kind = Geometry::Kind;

std::array<Vec3, 8> box_vertices(const RigidBody& body, const Vec3& h) {
  std::array<Vec3, 8> out;
  int k = 0;
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0})
      for (double sz : {-1.0, 1.0})
        out[static_cast<std::size_t>(k++)] =
            body.position + body.orientation * Vec3(sx * h.x(), sy * h.y(), sz * h.z());
  return out;
}

class ContactSink {
 public:
  ContactSink(std::vector<ContactPoint>& out, const CollisionOptions& opts) : out_(out), opts_(opts) {}

  bool accepts(double distance) const {
    return distance <= opts_.contact_distance && distance >= -opts_.max_penetration;
  }

  void add(int body_a, int body_b, const Vec3& position, const Vec3& normal, double distance,
           std::size_t merge_from) {
    if (opts_.merge_coincident) {
      for (std::size_t i = merge_from; i < out_.size(); ++i)
        if ((out_[i].position - position).norm() <= opts_.contact_distance &&
            out_[i].normal.dot(normal) > 1.0 - opts_.tol.frame)
          return;
    }
    out_.push_back(make_contact(body_a, body_b, position, normal, distance, opts_.tol));
  }

 private:
  std::vector<ContactPoint>& out_;
  const CollisionOptions& opts_;
};

void plane_shape(const MultibodySystem& sys, const Geometry& plane, const Geometry& shape,
                 ContactSink& sink) {
  const RigidBody& body = sys.bodies[static_cast<std::size_t>(shape.body)];
  if (shape.kind == Kind::sphere) {
    const double d = plane.normal.dot(body.position) - plane.offset - shape.radius;
    if (sink.accepts(d))
      sink.add(shape.body, kEnvironment, body.position - shape.radius * plane.normal, plane.normal, d,
               0);
    return;
  }
  for (const Vec3& x : box_vertices(body, shape.half_extents)) {
    const double d = plane.normal.dot(x) - plane.offset;
    if (sink.accepts(d)) sink.add(shape.body, kEnvironment, x, plane.normal, d, 0);
  }
}

// Vertices of `moving` lying on the face of `base` that separates the two
// boxes best. The reported normal is the face's outward normal times `sign`.
void vertices_on_faces(const MultibodySystem& sys, const Geometry& base, const Geometry& moving,
                       double sign, int body_a, int body_b, const CollisionOptions& opts,
                       ContactSink& sink, std::size_t merge_from) {
  const RigidBody& b = sys.bodies[static_cast<std::size_t>(base.body)];
  const RigidBody& m = sys.bodies[static_cast<std::size_t>(moving.body)];
  const Vec3& h = base.half_extents;
  std::array<Vec3, 8> local;
  const auto world = box_vertices(m, moving.half_extents);
  for (std::size_t i = 0; i < 8; ++i) local[i] = b.orientation.conjugate() * (world[i] - b.position);

  Index face = 0;
  double side = 1.0;
  double separation = -std::numeric_limits<double>::infinity();
  for (Index k = 0; k < 3; ++k) {
    for (double s : {1.0, -1.0}) {
      double gap = std::numeric_limits<double>::infinity();
      for (const Vec3& p : local) gap = std::min(gap, s * p(k) - h(k));
      if (gap > separation) {
        separation = gap;
        face = k;
        side = s;
      }
    }
  }

  Vec3 outward = Vec3::Zero();
  outward(face) = side;
  const Vec3 normal = sign * (b.orientation * outward);
  for (std::size_t i = 0; i < 8; ++i) {
    const Vec3& p = local[i];
    const double d = side * p(face) - h(face);
    if (!sink.accepts(d)) continue;
    bool inside = true;
    for (Index k = 0; k < 3; ++k)
      if (k != face && std::abs(p(k)) > h(k) + opts.contact_distance) inside = false;
    if (inside) sink.add(body_a, body_b, world[i], normal, d, merge_from);
  }
}

double bounding_radius(const Geometry& g) {
  return g.kind == Kind::box ? g.half_extents.norm() : g.radius;
}

// Bounding-sphere test; pairs that cannot touch need no narrow phase.
bool may_touch(const MultibodySystem& sys, const Geometry& a, const Geometry& b,
               const CollisionOptions& opts) {
  const Vec3& pa = sys.bodies[static_cast<std::size_t>(a.body)].position;
  const Vec3& pb = sys.bodies[static_cast<std::size_t>(b.body)].position;
  return (pa - pb).norm() - bounding_radius(a) - bounding_radius(b) <= opts.contact_distance;
}

}  // namespace

std::vector<ContactPoint> generate_contacts(const MultibodySystem& sys, const CollisionOptions& opts) {
  std::vector<ContactPoint> out;
  ContactSink sink(out, opts);
  const auto& g = sys.geometries;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Geometry& a = g[i];
      const Geometry& b = g[j];
      if (a.body == b.body) continue;  // environment pairs and shapes on one body
      if (a.kind == Kind::plane || b.kind == Kind::plane) {
        plane_shape(sys, a.kind == Kind::plane ? a : b, a.kind == Kind::plane ? b : a, sink);
      } else if (a.kind == Kind::box && b.kind == Kind::box) {
        // Normal points from a's body into b's body.
        const std::size_t start = out.size();
        vertices_on_faces(sys, a, b, 1.0, b.body, a.body, opts, sink, start);
        vertices_on_faces(sys, b, a, -1.0, b.body, a.body, opts, sink, start);
      } else if (may_touch(sys, a, b, opts)) {
        throw std::invalid_argument("generate_contacts: unsupported geometry pair in contact (only "
                                    "plane-box, plane-sphere and box-box are handled)");
      }
    }
  }
  return duplicate_contacts(out, opts.duplication);
}

std::vector<ContactPoint> duplicate_contacts(const std::vector<ContactPoint>& contacts, int factor) {
  require(factor >= 1, "duplicate_contacts: factor must be >= 1");
  std::vector<ContactPoint> out;
  out.reserve(contacts.size() * static_cast<std::size_t>(factor));
  for (const ContactPoint& c : contacts)
    for (int k = 0; k < factor; ++k) out.push_back(c);
  return out;
}

JacobianBundle system_jacobians(const MultibodySystem& sys, const std::vector<ContactPoint>& contacts) {
  JacobianBundle jb = contact_jacobians(contacts, sys.centers());
  jb.J = sys.joint_jacobian();
  return jb;
}

}  // namespace rigidlcp
