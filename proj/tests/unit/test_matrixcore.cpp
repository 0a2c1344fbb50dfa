/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rigidlcp/matrixcore/block_inertia.hpp"
#include "rigidlcp/matrixcore/cholesky.hpp"
#include "rigidlcp/matrixcore/counters.hpp"
#include "rigidlcp/matrixcore/lu.hpp"
#include "rigidlcp/matrixcore/saddle_solver.hpp"
#include "support/random.hpp"

using namespace rigidlcp;
using rigidlcp::testing::Rng;

namespace {

double factor_tolerance(const Matrix& a) { return 1e-10 * (1.0 + max_abs(a)); }

Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("cholesky of identity is identity") {
  auto f = cholesky_factor(Matrix::Identity(3, 3));
  REQUIRE(std::holds_alternative<CholeskyFactor>(f));
  CHECK((std::get<CholeskyFactor>(f).lower() - Matrix::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("cholesky of a 2x2 matches the hand factor") {
  const Matrix a = mat2(4, 2, 2, 2);
  auto f = cholesky_factor_or_throw(a);
  CHECK((f.lower() - mat2(2, 0, 1, 1)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((f.reconstruct() - a).cwiseAbs().maxCoeff() <= factor_tolerance(a));
}

TEST_CASE("rank-one matrix reports the second pivot") {
  auto f = cholesky_factor(mat2(1, 1, 1, 1));
  REQUIRE(std::holds_alternative<SingularPivot>(f));
  CHECK(std::get<SingularPivot>(f).index == 1);  // 0-based: the second pivot
  CHECK_THROWS_AS(cholesky_factor_or_throw(mat2(1, 1, 1, 1)), SingularMatrixError);
}

TEST_CASE("cholesky contract violations") {
  CHECK_THROWS_AS(cholesky_factor(Matrix::Zero(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(cholesky_factor(mat2(1, 0.5, 0.4, 1)), std::invalid_argument);
  Matrix nan = Matrix::Identity(2, 2);
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(cholesky_factor(nan), std::invalid_argument);
}

TEST_CASE("append a unit row to the identity factor") {
  auto f = cholesky_factor_or_throw(Matrix::Identity(3, 3));
  Vector col = Vector::Zero(4);
  col(3) = 1.0;
  CHECK_FALSE(f.append(col).has_value());
  CHECK(f.order() == 4);
  CHECK((f.lower() - Matrix::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("append of a duplicated row is singular and leaves the factor unchanged") {
  Rng rng(7);
  const Matrix a = rng.spd(4);
  auto f = cholesky_factor_or_throw(a);
  const Matrix before = f.lower();
  // New row/column duplicates index 2: [a(2, 0..3), a(2, 2)].
  Vector col(5);
  col.head(4) = a.row(2).transpose();
  col(4) = a(2, 2);
  const auto singular = f.append(col);
  REQUIRE(singular.has_value());
  CHECK(singular->index == 4);
  CHECK(f.order() == 4);
  CHECK((f.lower() - before).norm() == 0.0);
}

TEST_CASE("growing 4x4 to 5x5 matches the direct factorization") {
  Rng rng(11);
  const Matrix a = rng.spd(5);
  auto grown = cholesky_factor_or_throw(a.topLeftCorner(4, 4));
  Vector col = a.row(4).transpose();
  REQUIRE_FALSE(grown.append(col).has_value());
  const auto direct = cholesky_factor_or_throw(a);
  CHECK((grown.lower() - direct.lower()).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("append costs a quadratic number of multiply-accumulates") {
  Rng rng(3);
  for (Index n : {8, 16, 32, 64}) {
    const Matrix a = rng.spd(n + 1, static_cast<double>(n));
    auto f = cholesky_factor_or_throw(a.topLeftCorner(n, n));
    ops::MacScope scope;
    REQUIRE_FALSE(f.append(Vector(a.row(n).transpose())).has_value());
    const auto macs = scope.elapsed();
    CHECK(macs <= static_cast<std::uint64_t>(n * n));
    CHECK(macs >= static_cast<std::uint64_t>(n * (n - 1) / 2));
  }
}

TEST_CASE("append then remove reproduces the previous factor") {
  Rng rng(5);
  const Matrix a = rng.spd(6);
  auto f = cholesky_factor_or_throw(a.topLeftCorner(5, 5));
  const Matrix before = f.lower();
  REQUIRE_FALSE(f.append(Vector(a.row(5).transpose())).has_value());
  f.remove(5);
  CHECK((f.lower() - before).cwiseAbs().maxCoeff() <= factor_tolerance(a));
}

TEST_CASE("remove from the middle equals factoring the reduced matrix") {
  Rng rng(9);
  const Matrix a = rng.spd(6);
  auto f = cholesky_factor_or_throw(a);
  f.remove(2);
  std::vector<Index> keep{0, 1, 3, 4, 5};
  Matrix reduced(5, 5);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 5; ++j) reduced(i, j) = a(keep[i], keep[j]);
  const auto direct = cholesky_factor_or_throw(reduced);
  CHECK((f.lower() - direct.lower()).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(std::abs(f.trace() - reduced.trace()) <= 1e-10 * reduced.trace());
}

TEST_CASE("property: random grow/shrink schedules commute with factoring from scratch") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Index pool = 12;
    const Matrix a = rng.spd(pool, 2.0);
    CholeskyFactor f;
    std::vector<Index> members;
    const int steps = rng.integer(1, 20);
    for (int s = 0; s < steps; ++s) {
      const bool grow = members.empty() || (members.size() < static_cast<std::size_t>(pool) &&
                                            rng.uniform() > -0.3);
      if (grow) {
        Index pick;
        do pick = rng.integer(0, pool - 1);
        while (std::find(members.begin(), members.end(), pick) != members.end());
        Vector col(static_cast<Index>(members.size()) + 1);
        for (std::size_t k = 0; k < members.size(); ++k) col(static_cast<Index>(k)) = a(members[k], pick);
        col(col.size() - 1) = a(pick, pick);
        REQUIRE_FALSE(f.append(col).has_value());
        members.push_back(pick);
      } else {
        const auto pos = static_cast<std::size_t>(rng.integer(0, static_cast<int>(members.size()) - 1));
        f.remove(static_cast<Index>(pos));
        members.erase(members.begin() + static_cast<std::ptrdiff_t>(pos));
      }
      const Index k = static_cast<Index>(members.size());
      Matrix sub(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) sub(i, j) = a(members[i], members[j]);
      if (k == 0) {
        CHECK(f.order() == 0);
        continue;
      }
      const auto direct = cholesky_factor_or_throw(sub);
      CHECK((f.lower() - direct.lower()).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
}

TEST_CASE("solve_spd examples") {
  auto id = cholesky_factor_or_throw(Matrix::Identity(2, 2));
  CHECK((solve_spd(id, Vector::Map(std::array{3.0, -1.0}.data(), 2)) -
         Vector::Map(std::array{3.0, -1.0}.data(), 2)).norm() == 0.0);

  auto f = cholesky_factor_or_throw(mat2(4, 2, 2, 2));
  const Vector x = solve_spd(f, Vector::Map(std::array{6.0, 4.0}.data(), 2));
  CHECK(std::abs(x(0) - 1.0) < 1e-14);
  CHECK(std::abs(x(1) - 1.0) < 1e-14);

  auto two = cholesky_factor_or_throw(2.0 * Matrix::Identity(4, 4));
  CHECK((solve_spd(two, Vector::Ones(4)) - 0.5 * Vector::Ones(4)).norm() < 1e-15);

  CHECK_THROWS_AS(solve_spd(two, Vector::Ones(3)), std::invalid_argument);
}

TEST_CASE("property: factor-then-solve residual on random SPD matrices") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = rng.integer(1, 12);
    const Matrix a = rng.spd(n, rng.uniform(1e-3, 2.0));
    const Vector b = rng.vector(n, -10, 10);
    const Vector x = solve_spd(cholesky_factor_or_throw(a), b);
    CHECK(inf_norm(a * x - b) <= 1e-9 * (1.0 + inf_norm(b)));
  }
}

TEST_CASE("LU reports the singular column") {
  Matrix a(3, 3);
  a << 1, 2, 3, 2, 4, 6, 0, 0, 1;
  auto lu = lu_factor(a);
  REQUIRE(std::holds_alternative<SingularPivot>(lu));
  CHECK(std::get<SingularPivot>(lu).index == 1);

  Rng rng(1);
  const Matrix b = rng.matrix(6, 6);
  const Vector rhs = rng.vector(6);
  auto ok = lu_factor(b);
  REQUIRE(std::holds_alternative<LuFactor>(ok));
  CHECK(inf_norm(b * std::get<LuFactor>(ok).solve(rhs) - rhs) < 1e-10);
}

TEST_CASE("inertia_solve on one and two bodies") {
  BlockDiagInertia single({2.0 * Matrix::Identity(6, 6)});
  Vector b = Vector::Zero(6);
  b(0) = 4.0;
  Vector expected = Vector::Zero(6);
  expected(0) = 2.0;
  CHECK((inertia_solve(single, b) - expected).norm() < 1e-14);

  BlockDiagInertia two({Matrix::Identity(3, 3), 4.0 * Matrix::Identity(3, 3)});
  const Vector x = inertia_solve(two, Vector::Ones(6));
  CHECK((x.head(3) - Vector::Ones(3)).norm() < 1e-14);
  CHECK((x.tail(3) - 0.25 * Vector::Ones(3)).norm() < 1e-14);
  CHECK_THROWS_AS(inertia_solve(two, Vector::Ones(5)), std::invalid_argument);
}

TEST_CASE("property: block inertia solve equals the dense assembled solve") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Matrix> blocks;
    for (int b = 0; b < 3; ++b) blocks.push_back(rng.spd(rng.integer(1, 6)));
    BlockDiagInertia m(blocks);
    CHECK(m.dim() == blocks[0].rows() + blocks[1].rows() + blocks[2].rows());
    const Vector rhs = rng.vector(m.dim());
    const Vector dense = cholesky_factor_or_throw(m.dense()).solve(rhs);
    CHECK(inf_norm(inertia_solve(m, rhs) - dense) <= 1e-10 * (1.0 + inf_norm(dense)));
    CHECK(inf_norm(m.multiply(rhs) - m.dense() * rhs) <= 1e-12 * (1.0 + inf_norm(rhs)));
  }
}

TEST_CASE("block inertia rejects bad blocks") {
  Matrix asym = Matrix::Identity(3, 3);
  asym(0, 1) = 0.1;
  CHECK_THROWS_AS(BlockDiagInertia({asym}), std::invalid_argument);
  CHECK_THROWS_AS(BlockDiagInertia({-Matrix::Identity(3, 3)}), std::invalid_argument);
}

TEST_CASE("saddle solver satisfies both block equations") {
  Rng rng(23);
  auto m = std::make_shared<BlockDiagInertia>(std::vector<Matrix>{rng.spd(6), rng.spd(6)});
  const Matrix x = rng.matrix(4, 12);
  SaddlePointSolver s(m, x);
  const Vector r = rng.vector(12);
  const Vector c = rng.vector(4);
  const auto sol = s.solve_full(r, c);
  CHECK(inf_norm(m->multiply(sol.u) - x.transpose() * sol.multipliers - r) < 1e-10);
  CHECK(inf_norm(x * sol.u - c) < 1e-10);

  Matrix dependent(2, 12);
  dependent.row(0) = x.row(0);
  dependent.row(1) = 2.0 * x.row(0);
  CHECK_THROWS_AS(SaddlePointSolver(m, dependent), SingularMatrixError);
}
