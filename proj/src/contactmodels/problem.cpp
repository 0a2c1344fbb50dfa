/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/contactmodels/problem.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "rigidlcp/lcpkit/enumerate.hpp"
#include "rigidlcp/lcpkit/lcp_io.hpp"
#include "rigidlcp/lcpkit/lemke.hpp"

namespace rigidlcp {

void SystemView::validate() const {
  require(inertia != nullptr, "SystemView: missing inertia");
  require(v.size() == dof(), "SystemView: velocity length does not match the inertia");
  require(f.size() == dof(), "SystemView: force length does not match the inertia");
  require_finite(v, "SystemView velocity");
  require_finite(f, "SystemView force");
}

Matrix ActiveRows::stack(const Matrix& jm, const Matrix& sm, const Matrix& tm) const {
  const Index cols = std::max({jm.cols(), sm.cols(), tm.cols()});
  Matrix x(static_cast<Index>(size()), cols);
  Index r = 0;
  for (Index i : j) x.row(r++) = jm.row(i);
  auto si = s.begin();
  auto ti = t.begin();
  while (si != s.end() || ti != t.end()) {
    const bool take_s = ti == t.end() || (si != s.end() && *si <= *ti);
    if (take_s) {
      x.row(r++) = sm.row(*si++);
    } else {
      x.row(r++) = tm.row(*ti++);
    }
  }
  return x;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::viscous: return "viscous";
    case Provenance::noslip: return "no-slip";
    case Provenance::pyramid_baseline: return "pyramid-baseline";
  }
  return "unknown";
}

std::string to_string(LcpSolverKind k) {
  switch (k) {
    case LcpSolverKind::ppm: return "ppm";
    case LcpSolverKind::lemke: return "lemke";
    case LcpSolverKind::enumerate: return "enumerate";
  }
  return "unknown";
}

LcpSolverKind parse_solver_kind(const std::string& name) {
  if (name == "ppm") return LcpSolverKind::ppm;
  if (name == "lemke") return LcpSolverKind::lemke;
  if (name == "enumerate") return LcpSolverKind::enumerate;
  throw std::invalid_argument("unknown solver '" + name + "' (expected ppm, lemke or enumerate)");
}

LcpProblem ContactProblem::implicit_lcp() const {
  return LcpProblem::implicit_form(normal_rows, saddle, free, offset);
}

ContactProblem::Recovered ContactProblem::recover(const Vector& f_n) const {
  const Index m = saddle->dim();
  const Vector r = multiply_transpose(normal_rows, f_n) - mlcp.g.head(m);
  const Vector c = -mlcp.g.tail(mlcp.g.size() - m);
  auto sol = saddle->solve_full(r, c);
  return {std::move(sol.u), std::move(sol.multipliers)};
}

ContactSolution solve_contact_problem(const ContactProblem& p, LcpSolverKind solver,
                                      const PpmOptions& ppm) {
  ContactSolution out;
  const LcpProblem lcp = p.implicit_lcp();
  switch (solver) {
    case LcpSolverKind::ppm: out.lcp = solve_lcp_ppm(lcp, ppm); break;
    case LcpSolverKind::lemke: out.lcp = solve_lcp_lemke(lcp.to_explicit()); break;
    case LcpSolverKind::enumerate: out.lcp = solve_lcp_enumerate(lcp.to_explicit()); break;
  }
  out.f_n = out.lcp.z;
  auto rec = p.recover(out.f_n);
  out.u = std::move(rec.u);
  out.multipliers = std::move(rec.multipliers);
  return out;
}

void write_contact_problem(std::ostream& os, const ContactProblem& p) {
  os << "# provenance " << to_string(p.provenance) << '\n';
  write_mlcp(os, p.mlcp);
}

Provenance read_provenance(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# provenance ", 0) == 0) {
      const std::string tag = line.substr(13);
      for (Provenance p : {Provenance::viscous, Provenance::noslip, Provenance::pyramid_baseline})
        if (to_string(p) == tag) return p;
      throw std::runtime_error("problem file: unknown provenance '" + tag + "'");
    }
    if (line[0] != '#') break;
  }
  throw std::runtime_error("problem file: missing provenance line");
}

ContactProblem assemble_contact_problem(Provenance provenance, const SystemView& sys,
                                        const Matrix& normal_rows, ActiveRows active,
                                        const Matrix& constraint_rows, const Vector& g_velocity,
                                        const Vector& g_constraint, const Vector& h) {
  const Index m = sys.dof();
  const Index k = constraint_rows.rows();
  const Index n = normal_rows.rows();
  require(normal_rows.cols() == m, "contact problem: N has the wrong column count");
  require(k == 0 || constraint_rows.cols() == m, "contact problem: X has the wrong column count");
  require(g_velocity.size() == m && g_constraint.size() == k && h.size() == n,
          "contact problem: vector lengths do not match the blocks");

  ContactProblem p;
  p.provenance = provenance;
  p.active = std::move(active);
  const Matrix x = k ? constraint_rows : Matrix(0, m);
  p.saddle = std::make_shared<SaddlePointSolver>(sys.inertia, x);
  p.normal_rows = normal_rows;
  p.offset = h;
  p.free = p.saddle->solve_full(-g_velocity, -g_constraint).u;

  MlcpProblem& q = p.mlcp;
  q.A = Matrix::Zero(m + k, m + k);
  q.A.topLeftCorner(m, m) = sys.inertia->dense();
  q.A.topRightCorner(m, k) = -x.transpose();
  q.A.bottomLeftCorner(k, m) = x;
  q.B = Matrix::Zero(n, n);
  q.C = Matrix::Zero(m + k, n);
  q.C.topRows(m) = -normal_rows.transpose();
  q.D = Matrix::Zero(n, m + k);
  q.D.leftCols(m) = normal_rows;
  q.g.resize(m + k);
  q.g << g_velocity, g_constraint;
  q.h = h;
  return p;
}

}  // namespace rigidlcp
