/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <iosfwd>
#include <memory>

#include "rigidlcp/contactmodels/contact.hpp"
#include "rigidlcp/contactmodels/problem.hpp"

namespace rigidlcp {

/// Velocity-level LCP with a four-sided friction pyramid. Variables are laid
/// out as [f_n (n); beta (4n); lambda (n)] with beta ordered +s, -s, +t, -t per
/// contact:
///
///   w_n      = N v+            >= 0  _|_ f_n
///   w_beta   = D v+ + E lambda >= 0  _|_ beta
///   w_lambda = mu f_n - E^T beta >= 0 _|_ lambda
///
/// with v+ = v_free + P (N^T f_n + D^T beta) and P the projected inverse over
/// the independent J rows.
struct PyramidProblem {
  LcpProblem lcp;
  Index contacts = 0;
  std::shared_ptr<const SaddlePointSolver> saddle;
  Vector free;

  Index variable_count() const { return lcp.size(); }

  struct Impulses {
    Vector f_n;
    Vector f_s;  // beta_+s - beta_-s
    Vector f_t;
    Vector v_plus;
  };
  Impulses interpret(const Vector& z) const;

 private:
  friend PyramidProblem build_pyramid_baseline_lcp(const SystemView&, const JacobianBundle&, double,
                                                   const Tolerances&);
  Matrix normal_rows_;
  Matrix friction_rows_;  // D, 4n x m
};

/// Forms the 6n x 6n matrix explicitly.
PyramidProblem build_pyramid_baseline_lcp(const SystemView& sys, const JacobianBundle& jb, double dt,
                                          const Tolerances& tol = {});

/// "# provenance pyramid-baseline" followed by the lcp block.
void write_pyramid_problem(std::ostream& os, const PyramidProblem& p);

}  // namespace rigidlcp
