/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/lcpkit/enumerate.hpp"

#include "rigidlcp/matrixcore/lu.hpp"

namespace rigidlcp {

LcpSolution solve_lcp_enumerate(const LcpProblem& problem, const Tolerances& tol) {
  const Index n = problem.size();
  require(n <= kMaxEnumerationSize, "solve_lcp_enumerate: n = " + std::to_string(n) +
                                        " exceeds the enumeration limit of " +
                                        std::to_string(kMaxEnumerationSize));
  const Matrix q_matrix = problem.materialize();
  const Vector& q = problem.q();
  const double negative = -tol.negativity * (1.0 + inf_norm(q));

  const std::uint32_t count = 1u << n;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::vector<Index> support;
    for (Index i = 0; i < n; ++i)
      if (mask & (1u << i)) support.push_back(i);

    Vector z = Vector::Zero(n);
    if (!support.empty()) {
      Matrix sub(static_cast<Index>(support.size()), static_cast<Index>(support.size()));
      for (std::size_t r = 0; r < support.size(); ++r)
        for (std::size_t c = 0; c < support.size(); ++c)
          sub(static_cast<Index>(r), static_cast<Index>(c)) = q_matrix(support[r], support[c]);
      auto lu = lu_factor(sub, tol);
      if (!std::holds_alternative<LuFactor>(lu)) continue;
      const Vector za = std::get<LuFactor>(lu).solve(Vector(-select(q, support)));
      if (za.minCoeff() < negative) continue;
      for (std::size_t k = 0; k < support.size(); ++k)
        z(support[k]) = std::max(0.0, za(static_cast<Index>(k)));
    }
    Vector w = q_matrix * z + q;
    bool feasible = true;
    std::vector<char> in_support(static_cast<std::size_t>(n), 0);
    for (Index i : support) in_support[static_cast<std::size_t>(i)] = 1;
    for (Index i = 0; i < n && feasible; ++i)
      if (!in_support[static_cast<std::size_t>(i)] && w(i) < negative) feasible = false;
    if (!feasible) continue;

    LcpSolution s;
    s.w = w.cwiseMax(0.0);
    for (Index i = 0; i < n; ++i) {
      if (in_support[static_cast<std::size_t>(i)]) {
        s.w(i) = 0.0;
        s.basis.nonbasic.push_back(i);
      } else {
        s.basis.basic.push_back(i);
      }
    }
    s.z = std::move(z);
    s.pivots = mask + 1;
    s.max_system_order = static_cast<Index>(support.size());
    return s;
  }
  LcpSolution none;
  none.z = Vector::Zero(n);
  none.w = q;
  throw UnsolvableError("solve_lcp_enumerate: no feasible complementary basis", none);
}

}  // namespace rigidlcp
