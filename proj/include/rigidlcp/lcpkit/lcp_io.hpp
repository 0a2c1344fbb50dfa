/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "rigidlcp/lcpkit/lcp.hpp"
#include "rigidlcp/lcpkit/mlcp.hpp"

namespace rigidlcp {

// Plain-text problem files. Lines starting with '#' are comments; numbers are
// whitespace separated and written with 17 significant digits.
//
//   lcp <n>
//   <q: n entries>
//   <Q: n rows of n entries>
//
//   mlcp <nx> <ny>
//   <A: nx x nx> <B: ny x ny> <C: nx x ny> <D: ny x nx>
//   <g: nx entries> <h: ny entries>

void write_lcp(std::ostream& os, const LcpProblem& p);
void write_mlcp(std::ostream& os, const MlcpProblem& p);

using ProblemFile = std::variant<LcpProblem, MlcpProblem>;

/// Throws std::runtime_error with the offending token on malformed input.
ProblemFile read_problem(std::istream& is);
LcpProblem read_lcp(std::istream& is);
MlcpProblem read_mlcp(std::istream& is);

}  // namespace rigidlcp
