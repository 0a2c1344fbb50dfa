/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

// Seeded LCP instance families used by the property and acceptance tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "rigidlcp/lcpkit/lcp.hpp"
#include "rigidlcp/matrixcore/inner_solver.hpp"
#include "support/random.hpp"

namespace rigidlcp::testing {

/// Q = G^T G + delta I in implicit form: rows = [G^T, sqrt(delta) I] under an
/// identity inner operator. For delta = 0 the vector q is drawn as G^T f with
/// f uniform in [-1, 1]^m (q must lie in the range of G^T for the problem to be
/// solvable); for delta > 0, q is uniform in [-1, 1]^n.
struct PsdLcpInstance {
  Index n = 0;
  Index m = 0;
  double delta = 0.0;
  LcpProblem implicit;
  LcpProblem explicit_form;
};

inline PsdLcpInstance random_psd_lcp(Rng& rng, Index max_n, Index max_m, double delta) {
  PsdLcpInstance inst;
  inst.n = rng.integer(1, static_cast<int>(max_n));
  inst.m = rng.integer(1, static_cast<int>(max_m));
  inst.delta = delta;
  const Matrix g = rng.matrix(inst.m, inst.n);
  if (delta == 0.0) {
    auto inner = std::make_shared<IdentitySolver>(inst.m);
    inst.implicit = LcpProblem::implicit_form(g.transpose(), inner, rng.vector(inst.m));
  } else {
    const Index k = inst.m + inst.n;
    Matrix rows(inst.n, k);
    rows << g.transpose(), std::sqrt(delta) * Matrix::Identity(inst.n, inst.n);
    const Vector q = rng.vector(inst.n);
    Vector free = Vector::Zero(k);
    free.tail(inst.n) = q / std::sqrt(delta);
    inst.implicit = LcpProblem::implicit_form(rows, std::make_shared<IdentitySolver>(k), free);
  }
  inst.explicit_form = inst.implicit.to_explicit();
  return inst;
}

/// Contact-like instance with planted dependent rows: N_I (r x m) independent,
/// N_D = alpha N_I, inner matrix M^-1 for a random SPD M, and f* chosen so the
/// reduced problem has the strictly positive solution z_I = target, w_I = 0.
struct DuplicatedRowsInstance {
  Matrix rows_independent;  // N_I
  Matrix rows;              // rows of N in shuffled order
  std::vector<Index> independent_positions;  // where N_I's rows landed in `rows`
  std::shared_ptr<InnerSolver> inner;
  Vector f_star;
  Index rank = 0;
};

inline DuplicatedRowsInstance random_duplicated_rows(Rng& rng, Index max_m = 8, Index max_dep = 6) {
  DuplicatedRowsInstance inst;
  const Index m = rng.integer(2, static_cast<int>(max_m));
  const Index r = rng.integer(1, static_cast<int>(m));
  const Index d = rng.integer(1, static_cast<int>(max_dep));
  inst.rows_independent = rng.matrix(r, m);
  const Matrix alpha = rng.matrix(d, r, -2.0, 2.0);
  const Matrix dependent = alpha * inst.rows_independent;

  std::vector<Index> order(static_cast<std::size_t>(r + d));
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng.engine());
  inst.rows.resize(r + d, m);
  inst.independent_positions.assign(static_cast<std::size_t>(r), 0);
  for (Index pos = 0; pos < r + d; ++pos) {
    const Index src = order[static_cast<std::size_t>(pos)];
    if (src < r) {
      inst.rows.row(pos) = inst.rows_independent.row(src);
      inst.independent_positions[static_cast<std::size_t>(src)] = pos;
    } else {
      inst.rows.row(pos) = dependent.row(src - r);
    }
  }
  const Matrix mass = rng.spd(m);
  inst.inner = DenseSpdSolver::from_matrix(mass);
  const Vector target = rng.vector(r, 0.5, 2.0);
  inst.f_star = -inst.inner->solve(Vector(inst.rows_independent.transpose() * target));
  inst.rank = r;
  return inst;
}

}  // namespace rigidlcp::testing
