/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "rigidlcp/lcpkit/enumerate.hpp"
#include "rigidlcp/lcpkit/lcp.hpp"
#include "rigidlcp/lcpkit/lcp_io.hpp"
#include "rigidlcp/lcpkit/lemke.hpp"
#include "rigidlcp/lcpkit/mlcp.hpp"
#include "rigidlcp/lcpkit/ppm.hpp"
#include "rigidlcp/matrixcore/counters.hpp"
#include "support/lcp_instances.hpp"
#include "support/random.hpp"

using namespace rigidlcp;
using rigidlcp::testing::Rng;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

LcpProblem implicit_identity(const Matrix& rows, const Vector& f_star) {
  return LcpProblem::implicit_form(rows, std::make_shared<IdentitySolver>(rows.cols()), f_star);
}

}  // namespace

TEST_CASE("mlcp_reduce scalar blocks") {
  MlcpProblem p{mat({{1}}), mat({{0}}), mat({{1}}), mat({{-1}}), vec({0}), vec({0})};
  const ReducedMlcp r = mlcp_reduce(p);
  CHECK(r.lcp.matrix()(0, 0) == doctest::Approx(1.0));
  CHECK(r.lcp.q()(0) == doctest::Approx(0.0));
  CHECK(r.back.recover(vec({2}))(0) == doctest::Approx(-2.0));
}

TEST_CASE("mlcp_reduce identity inertia with one normal row") {
  // x = accelerations, A = M = I, C = -N^T, D = N, g = f*, h = 0.
  const Vector f_star = vec({0.5, -3.0});
  const Matrix n = mat({{0, 1}});
  MlcpProblem p{Matrix::Identity(2, 2), Matrix::Zero(1, 1), -n.transpose(), n, f_star, vec({0})};
  const ReducedMlcp r = mlcp_reduce(p);
  CHECK(r.lcp.matrix()(0, 0) == doctest::Approx(1.0));
  // e = h - D A^-1 g = -(A^-1 f*)_2
  CHECK(r.lcp.q()(0) == doctest::Approx(3.0));
}

TEST_CASE("mlcp_reduce back-substitution residual on random blocks") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    MlcpProblem p{rng.matrix(6, 6) + 3.0 * Matrix::Identity(6, 6), rng.matrix(6, 6), rng.matrix(6, 6),
                  rng.matrix(6, 6), rng.vector(6), rng.vector(6)};
    const ReducedMlcp r = mlcp_reduce(p);
    const Vector y = rng.vector(6, 0.0, 2.0);
    const Vector x = r.back.recover(y);
    CHECK((p.A * x + p.C * y + p.g).lpNorm<Eigen::Infinity>() <= 1e-9);
    // The reduced LCP reproduces D x + B y + h.
    const Vector w = r.lcp.multiply(y) + r.lcp.q();
    CHECK((w - (p.D * x + p.B * y + p.h)).lpNorm<Eigen::Infinity>() <= 1e-9);
  }
}

TEST_CASE("mlcp_reduce names the singular pivot") {
  MlcpProblem p{mat({{1, 0}, {0, 0}}), mat({{0}}), mat({{1}, {1}}), mat({{-1, -1}}), vec({0, 0}), vec({0})};
  try {
    mlcp_reduce(p);
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.pivot() == 1);
  }
}

TEST_CASE("MlcpProblem validate rejects inconsistent blocks") {
  MlcpProblem p{mat({{1}}), mat({{0}}), mat({{1, 2}}), mat({{-1}}), vec({0}), vec({0})};
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("PPM trivial exit") {
  const Matrix n = mat({{1, 0}, {0, 1}});
  IdentitySolver inner(2);
  const LcpSolution s = solve_lcp_ppm(n, inner, vec({0.5, 2.0}));
  CHECK(s.z.isZero());
  CHECK(s.w.isApprox(vec({0.5, 2.0})));
  CHECK(s.pivots == 0);
  CHECK(s.basis.valid(2));
}

TEST_CASE("PPM scalar problem") {
  const LcpSolution s = solve_lcp_ppm(mat({{1}}), IdentitySolver(1), vec({-4}));
  CHECK(s.z(0) == doctest::Approx(4.0));
  CHECK(std::abs(s.w(0)) <= 1e-12);
  CHECK(s.max_system_order == 1);
}

TEST_CASE("PPM with a row equal to the sum of the other two") {
  const Matrix n = mat({{1, 0}, {0, 1}, {1, 1}});
  const Vector f_star = vec({-1, -1});  // q = (-1, -1, -2)
  const LcpProblem p = implicit_identity(n, f_star);
  REQUIRE(p.q().isApprox(vec({-1, -1, -2})));
  const LcpSolution ppm = solve_lcp_ppm(p);
  const LcpSolution oracle = solve_lcp_enumerate(p.to_explicit());

  // Enumeration visits {1} and {2} (both infeasible) before {1, 2}.
  CHECK(oracle.z.isApprox(vec({1, 1, 0})));
  CHECK(oracle.z(2) == 0.0);
  CHECK(satisfies_invariants(p, ppm.z, ppm.w));
  CHECK((ppm.w - oracle.w).lpNorm<Eigen::Infinity>() <= 1e-7);
  // PPM enters argmin q = row 3 first, which already solves the LCP.
  CHECK(ppm.z.isApprox(vec({0, 0, 1})));
  CHECK(ppm.max_system_order <= 2);
}

TEST_CASE("PPM refuses to assemble beyond min(n, m)") {
  // Four rows in a two dimensional space: the active set can never exceed 2.
  const Matrix n = mat({{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  const LcpSolution s = solve_lcp_ppm(n, IdentitySolver(2), vec({-1, -0.5}));
  CHECK(s.max_system_order <= 2);
  CHECK(satisfies_invariants(implicit_identity(n, vec({-1, -0.5})), s.z, s.w));
}

TEST_CASE("PPM iteration limit carries the last iterate") {
  // Both rows must enter, which takes two pivots.
  PpmOptions opts;
  opts.max_pivots = 1;
  const LcpProblem p = implicit_identity(mat({{1, 0}, {0, 1}}), vec({-1, -2}));
  bool needs_more = false;
  try {
    solve_lcp_ppm(p, opts);
  } catch (const IterationLimitError& e) {
    needs_more = true;
    CHECK(e.best_iterate().z.size() == 2);
    CHECK(e.best_iterate().pivots == 2);
  }
  CHECK(needs_more);
}

TEST_CASE("plain iteration cycles where the feasible-step fallback converges") {
  // Instance found by the random PSD family: Q = G^T G + 1e-6 I, the plain
  // iteration revisits the same active sets with a period of nine pivots.
  Rng rng(1001);
  testing::random_psd_lcp(rng, 12, 8, 0.0);
  const auto inst = testing::random_psd_lcp(rng, 12, 8, 1e-6);
  PpmOptions plain;
  plain.cycle_fallback = false;
  CHECK_THROWS_AS(solve_lcp_ppm(inst.implicit, plain), IterationLimitError);
  const LcpSolution s = solve_lcp_ppm(inst.implicit);
  CHECK(satisfies_invariants(inst.explicit_form, s.z, s.w));
  CHECK(s.pivots <= 50 + 10 * static_cast<std::size_t>(inst.n));
}

TEST_CASE("PPM does not form the n x n matrix") {
  Rng rng(21);
  const Index n = 200;
  const Index m = 6;
  const Matrix base = rng.matrix(m, m);
  Matrix rows(n, m);
  for (Index i = 0; i < n; ++i) rows.row(i) = base.row(i % m) * (1.0 + 0.01 * static_cast<double>(i / m));
  const Vector f = rng.vector(m);
  PpmOptions opts;
  opts.incremental = true;
  ops::MacScope scope;
  const LcpSolution s = solve_lcp_ppm(rows, IdentitySolver(m), f, opts);
  CHECK(s.max_system_order <= m);
  // Forming N N^T alone would cost n^2 m MACs.
  CHECK(scope.elapsed() < static_cast<std::uint64_t>(n * n * m) / 4);
}

TEST_CASE("Lemke examples") {
  SUBCASE("nonnegative q") {
    const LcpSolution s = solve_lcp_lemke(LcpProblem::explicit_form(mat({{2, 1}, {1, 2}}), vec({1, 0})));
    CHECK(s.z.isZero());
    CHECK(s.regularization == 0.0);
  }
  SUBCASE("diagonal") {
    const LcpSolution s = solve_lcp_lemke(LcpProblem::explicit_form(mat({{2, 0}, {0, 2}}), vec({-4, 2})));
    CHECK(s.z(0) == doctest::Approx(2.0));
    CHECK(s.z(1) == doctest::Approx(0.0));
    CHECK(s.w(0) == doctest::Approx(0.0));
    CHECK(s.w(1) == doctest::Approx(2.0));
    CHECK(s.regularization == 0.0);
  }
}

TEST_CASE("Lemke falls back to regularization") {
  // Q = 0, q = -1 ends in a ray; (eps, -1) has z = 1 / eps.
  const LcpSolution s = solve_lcp_lemke(LcpProblem::explicit_form(mat({{0}}), vec({-1})));
  CHECK(s.regularization == doctest::Approx(1e-10));
  CHECK(s.z(0) == doctest::Approx(1e10));
}

TEST_CASE("Lemke reports unsolvable problems") {
  CHECK_THROWS_AS(solve_lcp_lemke(LcpProblem::explicit_form(mat({{-1}}), vec({-1}))), UnsolvableError);
  CHECK_THROWS_AS(solve_lcp_lemke(implicit_identity(mat({{1}}), vec({-1}))), std::invalid_argument);
}

TEST_CASE("enumeration examples") {
  SUBCASE("nonnegative q") {
    const LcpSolution s = solve_lcp_enumerate(LcpProblem::explicit_form(mat({{1, 0}, {0, 1}}), vec({0, 3})));
    CHECK(s.z.isZero());
  }
  SUBCASE("rank one matrix picks the first feasible basis") {
    const LcpSolution s = solve_lcp_enumerate(LcpProblem::explicit_form(mat({{1, 1}, {1, 1}}), vec({-1, -1})));
    CHECK(s.z.isApprox(vec({1, 0})));
    CHECK(s.w.isZero(1e-14));
  }
  SUBCASE("size limit") {
    const Index n = kMaxEnumerationSize + 1;
    CHECK_THROWS_AS(solve_lcp_enumerate(LcpProblem::explicit_form(Matrix::Identity(n, n), Vector::Ones(n))),
                    std::invalid_argument);
  }
  SUBCASE("infeasible") {
    CHECK_THROWS_AS(solve_lcp_enumerate(LcpProblem::explicit_form(mat({{-1}}), vec({-1}))), UnsolvableError);
  }
}

TEST_CASE("every solver satisfies the invariants on random PSD problems") {
  Rng rng(1001);
  for (int trial = 0; trial < 1000; ++trial) {
    const double delta = (trial % 2 == 0) ? 0.0 : 1e-6;
    const auto inst = testing::random_psd_lcp(rng, 12, 8, delta);
    const LcpSolution scratch = solve_lcp_ppm(inst.implicit);
    PpmOptions inc;
    inc.incremental = true;
    const LcpSolution incremental = solve_lcp_ppm(inst.implicit, inc);
    CHECK(satisfies_invariants(inst.explicit_form, scratch.z, scratch.w));
    CHECK(satisfies_invariants(inst.explicit_form, incremental.z, incremental.w));
    // Same pivot sequence; differences are rounding, scaled like the invariants.
    CHECK(scratch.basis.nonbasic == incremental.basis.nonbasic);
    CHECK((scratch.z - incremental.z).lpNorm<Eigen::Infinity>() <= 1e-8 * (1.0 + scratch.z.lpNorm<Eigen::Infinity>()));
    CHECK((scratch.w - incremental.w).lpNorm<Eigen::Infinity>() <= 1e-8 * (1.0 + inst.implicit.q().lpNorm<Eigen::Infinity>()));
    CHECK(scratch.max_system_order <= std::min(inst.n, inst.m + (delta > 0 ? inst.n : 0)));

    const LcpSolution lemke = solve_lcp_lemke(inst.explicit_form);
    CHECK(lemke.regularization == 0.0);
    CHECK(satisfies_invariants(inst.explicit_form, lemke.z, lemke.w));
  }
}

TEST_CASE("PPM agrees with enumeration on w") {
  Rng rng(2002);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = testing::random_psd_lcp(rng, 10, 8, trial % 3 == 0 ? 1e-6 : 0.0);
    const LcpSolution ppm = solve_lcp_ppm(inst.implicit);
    const LcpSolution oracle = solve_lcp_enumerate(inst.explicit_form);
    CHECK((ppm.w - oracle.w).lpNorm<Eigen::Infinity>() <= 1e-7);
  }
}

TEST_CASE("PPM with a non-identity inner matrix") {
  Rng rng(3003);
  for (int trial = 0; trial < 200; ++trial) {
    const Index m = rng.integer(1, 8);
    const Index n = rng.integer(1, 12);
    const auto inner = DenseSpdSolver::from_matrix(rng.spd(m));
    const LcpProblem p = LcpProblem::implicit_form(rng.matrix(n, m), inner, rng.vector(m));
    const LcpSolution s = solve_lcp_ppm(p);
    CHECK(satisfies_invariants(p.to_explicit(), s.z, s.w));
    CHECK(s.max_system_order <= std::min(n, m));
  }
}

TEST_CASE("reduced solution padded with zeros solves the duplicated-row problem") {
  Rng rng(4004);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = testing::random_duplicated_rows(rng);
    const Index n = inst.rows.rows();
    const LcpSolution reduced = solve_lcp_ppm(inst.rows_independent, *inst.inner, inst.f_star);
    REQUIRE(reduced.w.lpNorm<Eigen::Infinity>() <= 1e-8);

    Vector z = Vector::Zero(n);
    for (Index k = 0; k < inst.rank; ++k) z(inst.independent_positions[static_cast<std::size_t>(k)]) = reduced.z(k);
    const LcpProblem full = LcpProblem::implicit_form(inst.rows, inst.inner, inst.f_star).to_explicit();
    const Vector w = full.matrix() * z + full.q();
    const double tol = 1e-8 * (1.0 + full.q().lpNorm<Eigen::Infinity>());
    CHECK(z.minCoeff() >= 0.0);
    CHECK(w.minCoeff() >= -tol);
    CHECK(std::abs(z.dot(w)) <= tol);
    CHECK(w.lpNorm<Eigen::Infinity>() <= tol);

    const LcpSolution s = solve_lcp_ppm(inst.rows, *inst.inner, inst.f_star);
    CHECK(s.max_system_order == testing::svd_rank(inst.rows_independent));
    Index positive = 0;
    for (Index i = 0; i < n; ++i)
      if (s.z(i) > 1e-12) ++positive;
    CHECK(positive <= inst.rank);
    CHECK(positive <= inst.rows.cols());
  }
}

TEST_CASE("problem files round-trip exactly") {
  Rng rng(5005);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = rng.integer(1, 6);
    const LcpProblem p = LcpProblem::explicit_form(rng.matrix(n, n), rng.vector(n));
    std::stringstream ss;
    write_lcp(ss, p);
    const LcpProblem back = read_lcp(ss);
    CHECK(back.matrix() == p.matrix());
    CHECK(back.q() == p.q());
  }
  MlcpProblem m{rng.matrix(3, 3), rng.matrix(2, 2), rng.matrix(3, 2), rng.matrix(2, 3), rng.vector(3), rng.vector(2)};
  std::stringstream ss;
  ss << "# comment line\n";
  write_mlcp(ss, m);
  const ProblemFile f = read_problem(ss);
  REQUIRE(std::holds_alternative<MlcpProblem>(f));
  const auto& back = std::get<MlcpProblem>(f);
  CHECK(back.A == m.A);
  CHECK(back.B == m.B);
  CHECK(back.C == m.C);
  CHECK(back.D == m.D);
  CHECK(back.g == m.g);
  CHECK(back.h == m.h);
}

TEST_CASE("implicit problems are written in explicit form") {
  const LcpProblem p = implicit_identity(mat({{1, 0}, {1, 1}}), vec({-1, 2}));
  std::stringstream ss;
  write_lcp(ss, p);
  const LcpProblem back = read_lcp(ss);
  CHECK(back.matrix().isApprox(mat({{1, 1}, {1, 2}})));
  CHECK(back.q().isApprox(vec({-1, 1})));
}

TEST_CASE("malformed problem files are rejected") {
  for (const char* text : {"", "lcp", "lcp 2\n1 2\n1 0\n0", "lcp x", "qp 2", "mlcp 1 1\n1 0 1", "lcp 1\nnan 1"}) {
    std::istringstream is(text);
    CHECK_THROWS_AS(read_problem(is), std::runtime_error);
  }
}
