/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#include "rigidlcp/lcpkit/lcp_io.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace rigidlcp {

namespace {

void write_row(std::ostream& os, const auto& row) {
  for (Index j = 0; j < row.size(); ++j) os << (j ? " " : "") << row(j);
  os << '\n';
}

void write_matrix(std::ostream& os, const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i) write_row(os, m.row(i));
}

// Token reader that skips '#' comment lines.
class Tokens {
 public:
  explicit Tokens(std::istream& is) : is_(is) {}

  std::string next() {
    std::string tok;
    while (true) {
      if (line_ >> tok) {
        if (tok.front() == '#') {
          line_.setstate(std::ios::eofbit);
          continue;
        }
        return tok;
      }
      std::string text;
      if (!std::getline(is_, text)) throw std::runtime_error("problem file: unexpected end of input");
      line_.clear();
      line_.str(text);
    }
  }

  double number() {
    const std::string tok = next();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !std::isfinite(v))
      throw std::runtime_error("problem file: bad number '" + tok + "'");
    return v;
  }

  Index count() {
    const double v = number();
    if (v < 0 || v != static_cast<double>(static_cast<Index>(v)))
      throw std::runtime_error("problem file: bad dimension");
    return static_cast<Index>(v);
  }

  Matrix matrix(Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = number();
    return m;
  }

  Vector vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = number();
    return v;
  }

 private:
  std::istream& is_;
  std::istringstream line_;
};

LcpProblem parse_lcp_body(Tokens& t) {
  const Index n = t.count();
  Vector q = t.vector(n);
  Matrix m = t.matrix(n, n);
  return LcpProblem::explicit_form(std::move(m), std::move(q));
}

MlcpProblem parse_mlcp_body(Tokens& t) {
  const Index nx = t.count();
  const Index ny = t.count();
  MlcpProblem p;
  p.A = t.matrix(nx, nx);
  p.B = t.matrix(ny, ny);
  p.C = t.matrix(nx, ny);
  p.D = t.matrix(ny, nx);
  p.g = t.vector(nx);
  p.h = t.vector(ny);
  p.validate();
  return p;
}

}  // namespace

void write_lcp(std::ostream& os, const LcpProblem& p) {
  const auto precision = os.precision(17);
  os << "lcp " << p.size() << '\n';
  write_row(os, p.q());
  write_matrix(os, p.materialize());
  os.precision(precision);
}

void write_mlcp(std::ostream& os, const MlcpProblem& p) {
  p.validate();
  const auto precision = os.precision(17);
  os << "mlcp " << p.free_size() << ' ' << p.constrained_size() << '\n';
  for (const Matrix* m : {&p.A, &p.B, &p.C, &p.D}) write_matrix(os, *m);
  write_row(os, p.g);
  write_row(os, p.h);
  os.precision(precision);
}

ProblemFile read_problem(std::istream& is) {
  Tokens t(is);
  const std::string kind = t.next();
  if (kind == "lcp") return parse_lcp_body(t);
  if (kind == "mlcp") return parse_mlcp_body(t);
  throw std::runtime_error("problem file: unknown header '" + kind + "'");
}

LcpProblem read_lcp(std::istream& is) {
  auto p = read_problem(is);
  if (auto* lcp = std::get_if<LcpProblem>(&p)) return std::move(*lcp);
  throw std::runtime_error("problem file: expected an lcp, found an mlcp");
}

MlcpProblem read_mlcp(std::istream& is) {
  auto p = read_problem(is);
  if (auto* mlcp = std::get_if<MlcpProblem>(&p)) return std::move(*mlcp);
  throw std::runtime_error("problem file: expected an mlcp, found an lcp");
}

}  // namespace rigidlcp
