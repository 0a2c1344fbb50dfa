/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/lcpkit/ppm.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <vector>

#include "rigidlcp/matrixcore/cholesky.hpp"
#include "rigidlcp/matrixcore/counters.hpp"

namespace rigidlcp {

namespace {

// Lowest index among the entries within the tie tolerance of the minimum.
// `keys` maps each candidate position to the index used for tie-breaking.
template <typename Value, typename Key>
std::optional<std::size_t> argmin_lowest(std::size_t count, Value&& value, Key&& key, double tie) {
  if (count == 0) return std::nullopt;
  double best = value(0);
  for (std::size_t p = 1; p < count; ++p) best = std::min(best, value(p));
  const double cutoff = best + tie * (1.0 + std::abs(best));
  std::optional<std::size_t> pick;
  for (std::size_t p = 0; p < count; ++p)
    if (value(p) <= cutoff && (!pick || key(p) < key(*pick))) pick = p;
  return pick;
}

class ActiveSet {
 public:
  ActiveSet(const Matrix& rows, const InnerSolver& inner, bool incremental, const Tolerances& tol)
      : rows_(rows), inner_(inner), incremental_(incremental), tol_(tol), factor_(tol) {}

  const std::vector<Index>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  // Returns false (set unchanged) if the enlarged system is singular.
  bool add(Index i) {
    Vector p_col = inner_.solve(Vector(rows_.row(i).transpose()));
    if (incremental_) {
      Vector column(static_cast<Index>(members_.size()) + 1);
      for (std::size_t k = 0; k < members_.size(); ++k)
        column(static_cast<Index>(k)) = rows_.row(members_[k]).dot(p_col);
      column(column.size() - 1) = rows_.row(i).dot(p_col);
      ops::add_macs(static_cast<std::uint64_t>(column.size() * rows_.cols()));
      if (factor_.append(column)) return false;
    }
    members_.push_back(i);
    p_cols_.push_back(std::move(p_col));
    return true;
  }

  void remove_at(std::size_t pos) {
    if (incremental_) factor_.remove(static_cast<Index>(pos));
    members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(pos));
    p_cols_.erase(p_cols_.begin() + static_cast<std::ptrdiff_t>(pos));
  }

  // Factor of N_a P N_a^T over the current members; from scratch unless
  // running incrementally. Empty optional if singular.
  const CholeskyFactor* factor() {
    if (incremental_) return &factor_;
    const Index k = static_cast<Index>(members_.size());
    Matrix p_nt(rows_.cols(), k);
    for (Index c = 0; c < k; ++c) {
      p_cols_[static_cast<std::size_t>(c)] =
          inner_.solve(Vector(rows_.row(members_[static_cast<std::size_t>(c)]).transpose()));
      p_nt.col(c) = p_cols_[static_cast<std::size_t>(c)];
    }
    const Matrix a = multiply(select_rows(rows_, members_), p_nt);
    auto outcome = cholesky_factor(0.5 * (a + a.transpose()), tol_);
    if (!std::holds_alternative<CholeskyFactor>(outcome)) return nullptr;
    factor_ = std::get<CholeskyFactor>(std::move(outcome));
    return &factor_;
  }

  // P N_a^T z_a
  Vector combine(const Vector& z) const {
    Vector out = Vector::Zero(rows_.cols());
    for (std::size_t k = 0; k < members_.size(); ++k) out += z(static_cast<Index>(k)) * p_cols_[k];
    ops::add_macs(static_cast<std::uint64_t>(members_.size()) *
                  static_cast<std::uint64_t>(rows_.cols()));
    return out;
  }

 private:
  const Matrix& rows_;
  const InnerSolver& inner_;
  bool incremental_;
  Tolerances tol_;
  CholeskyFactor factor_;
  std::vector<Index> members_;
  std::vector<Vector> p_cols_;
};

LcpSolution assemble(Index n, const std::vector<Index>& active, const Vector& z_active,
                     const Vector& w_all) {
  LcpSolution s;
  s.z = Vector::Zero(n);
  s.w = w_all.cwiseMax(0.0);
  std::vector<char> is_active(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < active.size(); ++k) {
    s.z(active[k]) = std::max(0.0, z_active(static_cast<Index>(k)));
    s.w(active[k]) = 0.0;
    is_active[static_cast<std::size_t>(active[k])] = 1;
  }
  s.basis.nonbasic = active;
  for (Index i = 0; i < n; ++i)
    if (!is_active[static_cast<std::size_t>(i)]) s.basis.basic.push_back(i);
  return s;
}

class PpmRun {
 public:
  PpmRun(const Matrix& rows, const InnerSolver& inner, const Vector& f_star, const Vector& offset,
         const PpmOptions& opts)
      : rows_(rows),
        inner_(inner),
        f_star_(f_star),
        offset_(offset),
        opts_(opts),
        n_(rows.rows()),
        m_(inner.dim()),
        q_(multiply(rows, f_star) + offset),
        negative_(-opts.tol.negativity * (1.0 + inf_norm(q_))),
        budget_(opts.max_pivots ? opts.max_pivots : 50 + 10 * static_cast<std::size_t>(n_)),
        best_(assemble(n_, {}, Vector(0), q_)) {}

  const Vector& q() const { return q_; }
  bool trivial() const { return n_ == 0 || q_.minCoeff() >= negative_; }
  LcpSolution trivial_solution() const { return assemble(n_, {}, Vector(0), q_); }

  // Plain pivoting: enter the most negative w, drop the most negative z. Empty
  // if an active set repeats and the fallback is enabled.
  std::optional<LcpSolution> plain() {
    ActiveSet active(rows_, inner_, opts_.incremental, opts_.tol);
    std::vector<char> in_active(static_cast<std::size_t>(n_), 0);
    std::set<std::vector<Index>> seen;

    const auto first = argmin_lowest(
        static_cast<std::size_t>(n_), [&](std::size_t p) { return q_(static_cast<Index>(p)); },
        [](std::size_t p) { return p; }, opts_.tol.argmin_tie);
    add(active, in_active, static_cast<Index>(*first));

    while (true) {
      check_budget();
      if (opts_.cycle_fallback) {
        std::vector<Index> key = active.members();
        std::sort(key.begin(), key.end());
        if (!seen.insert(std::move(key)).second) return std::nullopt;
      }
      const std::size_t k = active.size();
      const Vector z_dag = solve_active(active);
      const Vector w_dag = slacks(active, z_dag);
      best_ = assemble(n_, active.members(), z_dag, w_dag);

      const auto enter = most_negative_outside(in_active, w_dag);
      const auto leave = argmin_lowest(
          k, [&](std::size_t p) { return z_dag(static_cast<Index>(p)); },
          [&](std::size_t p) { return active.members()[p]; }, opts_.tol.argmin_tie);
      const bool drop = leave && z_dag(static_cast<Index>(*leave)) < negative_;

      if (!enter) {
        if (drop) {
          remove(active, in_active, *leave);
          continue;
        }
        return finish();
      }
      add(active, in_active, *enter);
      if (drop) remove(active, in_active, *leave);
    }
  }

  // Feasible-step iteration: z stays nonnegative; when the active-set solution
  // has nonpositive entries, step toward it until the first one hits zero and
  // drop the zeros. Entering rows have negative w, which keeps the active rows
  // independent in exact arithmetic.
  LcpSolution feasible() {
    ActiveSet active(rows_, inner_, opts_.incremental, opts_.tol);
    std::vector<char> in_active(static_cast<std::size_t>(n_), 0);
    Vector z(0);
    while (true) {
      const Vector w = slacks(active, z);
      best_ = assemble(n_, active.members(), z, w);
      const auto enter = most_negative_outside(in_active, w);
      if (!enter) return finish();
      add(active, in_active, *enter);
      z.conservativeResize(z.size() + 1);
      z(z.size() - 1) = 0.0;

      while (true) {
        check_budget();
        const Vector y = solve_active(active);
        if (y.minCoeff() > 0.0) {
          z = y;
          break;
        }
        std::optional<Index> block;
        double step = 1.0;
        for (Index p = 0; p < y.size(); ++p) {
          if (y(p) > 0.0) continue;
          const double ratio = z(p) / (z(p) - y(p));
          if (!block || ratio < step) {
            block = p;
            step = ratio;
          }
        }
        z += step * (y - z);
        z(*block) = 0.0;
        for (Index p = z.size() - 1; p >= 0; --p) {
          if (z(p) > 0.0) continue;
          remove(active, in_active, static_cast<std::size_t>(p));
          for (Index r = p; r + 1 < z.size(); ++r) z(r) = z(r + 1);
          z.conservativeResize(z.size() - 1);
        }
      }
    }
  }

 private:
  void check_budget() {
    if (pivots_ <= budget_) return;
    best_.pivots = pivots_;
    best_.max_system_order = max_order_;
    throw IterationLimitError("solve_lcp_ppm: pivot budget of " + std::to_string(budget_) +
                                  " exhausted (degenerate or non-PSD problem)",
                              best_);
  }

  [[noreturn]] void fail_singular(Index row) {
    best_.pivots = pivots_;
    best_.max_system_order = max_order_;
    throw LcpSolverError(
        "solve_lcp_ppm: active-set system became singular adding row " + std::to_string(row), best_);
  }

  void add(ActiveSet& active, std::vector<char>& in_active, Index i) {
    if (!active.add(i)) fail_singular(i);
    in_active[static_cast<std::size_t>(i)] = 1;
    ++pivots_;
  }

  void remove(ActiveSet& active, std::vector<char>& in_active, std::size_t pos) {
    in_active[static_cast<std::size_t>(active.members()[pos])] = 0;
    active.remove_at(pos);
    ++pivots_;
  }

  // z on the active set with w = 0 there.
  Vector solve_active(ActiveSet& active) {
    const std::size_t k = active.size();
    max_order_ = std::max(max_order_, static_cast<Index>(k));
    if (max_order_ > std::min(n_, m_))
      throw std::logic_error("solve_lcp_ppm: assembled system exceeds min(n, m)");
    if (k == 0) return Vector(0);
    const CholeskyFactor* factor = active.factor();
    if (factor == nullptr) fail_singular(active.members().back());
    Vector b(static_cast<Index>(k));
    for (std::size_t p = 0; p < k; ++p) b(static_cast<Index>(p)) = q_(active.members()[p]);
    return factor->solve(-b);
  }

  // w = N (P N_a^T z_a + f*) + offset
  Vector slacks(const ActiveSet& active, const Vector& z_active) const {
    const Vector a = active.combine(z_active) + f_star_;
    return multiply(rows_, a) + offset_;
  }

  std::optional<Index> most_negative_outside(const std::vector<char>& in_active, const Vector& w) const {
    std::vector<Index> candidates;
    for (Index i = 0; i < n_; ++i)
      if (!in_active[static_cast<std::size_t>(i)]) candidates.push_back(i);
    const auto pick = argmin_lowest(
        candidates.size(), [&](std::size_t p) { return w(candidates[p]); },
        [&](std::size_t p) { return candidates[p]; }, opts_.tol.argmin_tie);
    if (!pick || w(candidates[*pick]) >= negative_) return std::nullopt;
    return candidates[*pick];
  }

  LcpSolution finish() {
    best_.pivots = pivots_;
    best_.max_system_order = max_order_;
    return best_;
  }

  const Matrix& rows_;
  const InnerSolver& inner_;
  const Vector& f_star_;
  const Vector& offset_;
  const PpmOptions& opts_;
  Index n_;
  Index m_;
  Vector q_;
  double negative_;
  std::size_t budget_;
  std::size_t pivots_ = 0;
  Index max_order_ = 0;
  LcpSolution best_;
};

}  // namespace

LcpSolution solve_lcp_ppm(const Matrix& contact_rows, const InnerSolver& inner,
                          const Vector& f_star, const PpmOptions& opts, const Vector& offset_in) {
  const Index n = contact_rows.rows();
  const Index m = inner.dim();
  require(contact_rows.cols() == m, "solve_lcp_ppm: contact rows have " +
                                        std::to_string(contact_rows.cols()) +
                                        " columns, inner dimension is " + std::to_string(m));
  require(f_star.size() == m, "solve_lcp_ppm: f_star length mismatch");
  const Vector offset = offset_in.size() == 0 ? Vector::Zero(n) : offset_in;
  require(offset.size() == n, "solve_lcp_ppm: offset length mismatch");

  PpmRun run(contact_rows, inner, f_star, offset, opts);
  if (run.trivial()) return run.trivial_solution();
  if (auto solution = run.plain()) return *std::move(solution);
  return run.feasible();
}

LcpSolution solve_lcp_ppm(const LcpProblem& problem, const PpmOptions& opts) {
  const ImplicitForm& form = problem.implicit();
  return solve_lcp_ppm(form.rows, *form.inner, form.free, opts, form.offset);
}

}  // namespace rigidlcp
