/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "rigidlcp/lcpkit/lcp.hpp"
#include "rigidlcp/lcpkit/mlcp.hpp"
#include "rigidlcp/lcpkit/ppm.hpp"
#include "rigidlcp/matrixcore/block_inertia.hpp"
#include "rigidlcp/matrixcore/saddle_solver.hpp"

namespace rigidlcp {

/// Inertia, velocity and generalized force of a multibody system.
struct SystemView {
  std::shared_ptr<const BlockDiagInertia> inertia;
  Vector v;
  Vector f;

  Index dof() const { return inertia ? inertia->dim() : 0; }
  void validate() const;
};

/// Rows of J, S and T kept in the equality block (0-based).
struct ActiveRows {
  std::vector<Index> j;
  std::vector<Index> s;
  std::vector<Index> t;

  std::size_t size() const { return j.size() + s.size() + t.size(); }
  /// Selected rows in scan order: J rows, then S_i before T_i for each
  /// contact i in ascending order.
  Matrix stack(const Matrix& jm, const Matrix& sm, const Matrix& tm) const;
};

enum class Provenance { viscous, noslip, pyramid_baseline };
std::string to_string(Provenance p);

/// MLCP over x = (u, multipliers), y = f_n:
///
///   A = [M -X^T; X 0],  C = [-N^T; 0],  D = [N 0] = -C^T,  B = 0
///
/// where X stacks the active rows. u is the acceleration (viscous) or the
/// post-step velocity (no-slip). The same problem is available as the
/// implicit LCP (N free + h, N P N^T) with P applied by the saddle solver.
struct ContactProblem {
  Provenance provenance = Provenance::noslip;
  MlcpProblem mlcp;
  ActiveRows active;
  std::shared_ptr<const SaddlePointSolver> saddle;
  Matrix normal_rows;  // N, n x m
  Vector free;         // u at f_n = 0
  Vector offset;       // h

  Index contact_count() const { return normal_rows.rows(); }
  LcpProblem implicit_lcp() const;

  struct Recovered {
    Vector u;
    Vector multipliers;  // ordered like ActiveRows::stack
  };
  /// x = -A^-1 (C f_n + g) through the saddle solver.
  Recovered recover(const Vector& f_n) const;
};

enum class LcpSolverKind { ppm, lemke, enumerate };
std::string to_string(LcpSolverKind k);
/// Throws std::invalid_argument for unknown names.
LcpSolverKind parse_solver_kind(const std::string& name);

struct ContactSolution {
  LcpSolution lcp;
  Vector f_n;
  Vector u;
  Vector multipliers;
};

/// PPM runs on the implicit form; Lemke and enumeration on the explicit LCP
/// obtained by reducing the MLCP.
ContactSolution solve_contact_problem(const ContactProblem& p, LcpSolverKind solver,
                                      const PpmOptions& ppm = {});

/// "# provenance <tag>" followed by the mlcp block.
void write_contact_problem(std::ostream& os, const ContactProblem& p);
/// Reads the provenance line of a file written by write_contact_problem or
/// write_pyramid_problem and leaves the stream at the problem block.
Provenance read_provenance(std::istream& is);

/// Builds the saddle solver and the dense MLCP from already-computed parts.
ContactProblem assemble_contact_problem(Provenance provenance, const SystemView& sys,
                                        const Matrix& normal_rows, ActiveRows active,
                                        const Matrix& constraint_rows, const Vector& g_velocity,
                                        const Vector& g_constraint, const Vector& h);

}  // namespace rigidlcp
