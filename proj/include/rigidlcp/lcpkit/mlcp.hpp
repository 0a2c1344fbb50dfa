/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <memory>

#include "rigidlcp/lcpkit/lcp.hpp"
#include "rigidlcp/matrixcore/lu.hpp"

namespace rigidlcp {

/// Mixed LCP:  A x + C y + g = 0,  D x + B y + h >= 0,  y >= 0,  complementary.
/// x is free (size nx), y is sign constrained (size ny).
struct MlcpProblem {
  Matrix A, B, C, D;
  Vector g, h;

  Index free_size() const { return A.rows(); }
  Index constrained_size() const { return B.rows(); }

  /// Throws std::invalid_argument on inconsistent block sizes or non-finite data.
  void validate() const;
};

/// Recovers x = -A^-1 (C y + g) for any y.
class MlcpBackSubstitution {
 public:
  MlcpBackSubstitution(std::shared_ptr<const LuFactor> a_factor, Matrix c, Vector g);
  Vector recover(const Vector& y) const;

 private:
  std::shared_ptr<const LuFactor> a_factor_;
  Matrix c_;
  Vector g_;
};

struct ReducedMlcp {
  LcpProblem lcp;  // (e, F): F = B - D A^-1 C, e = h - D A^-1 g
  MlcpBackSubstitution back;
};

/// Eliminates the free variables. Throws SingularMatrixError naming the
/// failed pivot if A is singular.
ReducedMlcp mlcp_reduce(const MlcpProblem& p, const Tolerances& tol = {});

}  // namespace rigidlcp
