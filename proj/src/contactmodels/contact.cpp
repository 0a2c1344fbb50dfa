/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/contactmodels/contact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rigidlcp {

void ContactPoint::validate(const Tolerances& tol) const {
  const double e = tol.frame;
  const bool unit = std::abs(normal.norm() - 1.0) <= e && std::abs(tangent_s.norm() - 1.0) <= e &&
                    std::abs(tangent_t.norm() - 1.0) <= e;
  const bool orthogonal = std::abs(normal.dot(tangent_s)) <= e &&
                          std::abs(normal.dot(tangent_t)) <= e &&
                          std::abs(tangent_s.dot(tangent_t)) <= e;
  if (!unit || !orthogonal) throw std::invalid_argument("ContactPoint: frame is not orthonormal");
  if (body_a == body_b) throw std::invalid_argument("ContactPoint: body_a equals body_b");
}

TangentFrame tangent_frame(const Vec3& normal, const Tolerances& tol) {
  const Vec3 n = normal.normalized();
  const Vec3 ref = n.cross(Vec3::UnitX()).norm() < tol.tangent_degenerate ? Vec3::UnitY()
                                                                            : Vec3::UnitX();
  const Vec3 s = (ref - n.dot(ref) * n).normalized();
  return {s, n.cross(s)};
}

ContactPoint make_contact(int body_a, int body_b, const Vec3& position, const Vec3& normal,
                          double distance, const Tolerances& tol) {
  ContactPoint c;
  c.body_a = body_a;
  c.body_b = body_b;
  c.position = position;
  c.normal = normal.normalized();
  const TangentFrame f = tangent_frame(c.normal, tol);
  c.tangent_s = f.s;
  c.tangent_t = f.t;
  c.distance = distance;
  return c;
}

void JacobianBundle::validate() const {
  const Index m = dof();
  const Index n = contact_count();
  require(J.rows() == 0 || J.cols() == m, "JacobianBundle: J has the wrong column count");
  require(S.rows() == n && S.cols() == m, "JacobianBundle: S shape does not match N");
  require(T.rows() == n && T.cols() == m, "JacobianBundle: T shape does not match N");
  require(j_drift.size() == 0 || j_drift.size() == J.rows(), "JacobianBundle: J'v length");
  require(n_drift.size() == 0 || n_drift.size() == n, "JacobianBundle: N'v length");
  require(mu_v.size() == 0 || mu_v.size() == n, "JacobianBundle: mu_v length");
  require(mu_v.size() == 0 || mu_v.minCoeff() >= 0.0, "JacobianBundle: negative mu_v");
  require(mu_c >= 0.0 && std::isfinite(mu_c), "JacobianBundle: mu_c must be finite and >= 0");
}

Vector JacobianBundle::j_drift_or_zero() const {
  return j_drift.size() ? j_drift : Vector::Zero(J.rows());
}
Vector JacobianBundle::n_drift_or_zero() const {
  return n_drift.size() ? n_drift : Vector::Zero(N.rows());
}
Vector JacobianBundle::mu_v_or_zero() const {
  return mu_v.size() ? mu_v : Vector::Zero(N.rows());
}

Matrix contact_direction_rows(const std::vector<ContactPoint>& contacts,
                              const std::vector<Vec3>& centers, const Vec3 ContactPoint::*direction) {
  const Index bodies = static_cast<Index>(centers.size());
  Matrix rows = Matrix::Zero(static_cast<Index>(contacts.size()), 6 * bodies);
  for (std::size_t i = 0; i < contacts.size(); ++i) {
    const ContactPoint& c = contacts[i];
    const Vec3& d = c.*direction;
    const auto put = [&](int body, double sign) {
      if (body == kEnvironment) return;
      require(body >= 0 && body < bodies, "contact_direction_rows: body id out of range");
      const Vec3 r = c.position - centers[static_cast<std::size_t>(body)];
      rows.block<1, 3>(static_cast<Index>(i), 6 * body) = sign * d.transpose();
      rows.block<1, 3>(static_cast<Index>(i), 6 * body + 3) = sign * r.cross(d).transpose();
    };
    put(c.body_a, 1.0);
    put(c.body_b, -1.0);
  }
  return rows;
}

JacobianBundle contact_jacobians(const std::vector<ContactPoint>& contacts,
                                 const std::vector<Vec3>& centers) {
  JacobianBundle jb;
  jb.N = contact_direction_rows(contacts, centers, &ContactPoint::normal);
  jb.S = contact_direction_rows(contacts, centers, &ContactPoint::tangent_s);
  jb.T = contact_direction_rows(contacts, centers, &ContactPoint::tangent_t);
  jb.J = Matrix(0, jb.N.cols());
  return jb;
}

}  // namespace rigidlcp
