#include "invlfp/reductions.hpp"

#include <cstdint>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>

#include "invlfp/errors.hpp"

namespace invlfp {

namespace {

void check_formula(const CnfFormula& phi) {
  for (const auto& cl : phi.clauses)
    for (int lit : cl)
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > phi.num_vars)
        throw ValidationError(ValidationError::Kind::Other, "literal out of range");
}

/// Adds the clause value c_{j1}+c_{j2}+c_{j3} to row r: positive literals
/// contribute x_i (into B), negated ones 1 - x_i (into B and b).
void add_clause_terms(RatMatrix& B, RatVector& b, std::size_t r,
                      const std::array<int, 3>& clause) {
  for (int lit : clause) {
    std::size_t i = static_cast<std::size_t>(std::abs(lit)) - 1;
    if (lit > 0) {
      B.at(r, i) += 1;
    } else {
      B.at(r, i) -= 1;
      b[r] += 1;
    }
  }
}

ParamPolyhedron unit_box(std::size_t k) {
  ParamPolyhedron X;
  X.D = RatMatrix(2 * k, k);
  X.d = RatVector(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    X.D.at(i, i) = 1;
    X.d[i] = 1;
    X.D.at(k + i, i) = -1;
    X.d[k + i] = 0;
  }
  return X;
}

/// Two polyhedron rows pinning coordinate `idx` of an n-vector to zero.
PolyhedronTarget coordinate_zero_target(std::size_t n, std::size_t idx) {
  PolyhedronTarget tgt;
  tgt.S = RatMatrix(2, n);
  tgt.t = RatVector(2);
  tgt.S.at(0, idx) = 1;
  tgt.S.at(1, idx) = -1;
  return tgt;
}

}  // namespace

ReductionOutput reduce_sat_rhs(const CnfFormula& phi) {
  check_formula(phi);
  const std::size_t nv = phi.num_vars, mc = phi.clauses.size();
  const std::size_t n = nv + 1;            // y_1..y_nv, z
  const std::size_t m = 3 * nv + mc + 2;   // bounds, clauses, z<=1, nonneg
  Instance inst;
  inst.form = Form::Natural;
  inst.A = RatMatrix(m, n);
  inst.B = RatMatrix(m, nv);
  inst.b = RatVector(m);
  inst.C = RatMatrix(n, nv);
  inst.c = RatVector(n, Rational(-1));
  for (std::size_t i = 0; i < nv; ++i) {
    inst.A.at(i, i) = 1;  // y_i <= x_i
    inst.B.at(i, i) = 1;
    inst.A.at(nv + i, i) = 1;  // y_i <= 1 - x_i
    inst.B.at(nv + i, i) = -1;
    inst.b[nv + i] = 1;
  }
  for (std::size_t j = 0; j < mc; ++j) {
    inst.A.at(2 * nv + j, nv) = 1;  // z <= clause value
    add_clause_terms(inst.B, inst.b, 2 * nv + j, phi.clauses[j]);
  }
  inst.A.at(2 * nv + mc, nv) = 1;  // z <= 1
  inst.b[2 * nv + mc] = 1;
  for (std::size_t i = 0; i < n; ++i) inst.A.at(2 * nv + mc + 1 + i, i) = -1;  // >= 0
  inst.X = unit_box(nv);
  RatVector ybar(n, Rational(0));
  ybar[nv] = 1;
  return {std::move(inst), SingletonTarget{std::move(ybar)}};
}

ReductionOutput reduce_sat_basis(const CnfFormula& phi) {
  check_formula(phi);
  const std::size_t nv = phi.num_vars, mc = phi.clauses.size();
  const std::size_t m = 2 * nv + mc + 1;
  const std::size_t n = nv + 1 + m;  // y, z, one slack per row
  const std::size_t z = nv, s0 = nv + 1;
  Instance inst;
  inst.form = Form::Standard;
  inst.A = RatMatrix(m, n);
  inst.B = RatMatrix(m, nv);
  inst.b = RatVector(m);
  inst.C = RatMatrix(n, nv);
  inst.c = RatVector(n);
  for (std::size_t i = 0; i <= nv; ++i) inst.c[i] = -1;  // -sum y - z
  for (std::size_t r = 0; r < m; ++r) inst.A.at(r, s0 + r) = 1;
  for (std::size_t i = 0; i < nv; ++i) {
    inst.A.at(i, i) = 1;  // y_i + s_i = x_i
    inst.B.at(i, i) = 1;
    inst.A.at(nv + i, i) = 1;  // y_i + s_{nv+i} = 1 - x_i
    inst.B.at(nv + i, i) = -1;
    inst.b[nv + i] = 1;
  }
  for (std::size_t j = 0; j < mc; ++j) {
    inst.A.at(2 * nv + j, z) = 1;  // z + s_{2nv+j} = clause value
    add_clause_terms(inst.B, inst.b, 2 * nv + j, phi.clauses[j]);
  }
  inst.A.at(m - 1, z) = 1;  // z + s_m = 1
  inst.b[m - 1] = 1;
  inst.X = unit_box(nv);
  BasisTarget basis;  // z and every slack except the last
  basis.cols.push_back(z);
  for (std::size_t r = 0; r + 1 < m; ++r) basis.cols.push_back(s0 + r);
  return {std::move(inst), std::move(basis)};
}

ReductionOutput reduce_sat_onevar_rhs(const CnfFormula& phi) {
  check_formula(phi);
  const std::size_t nv = phi.num_vars, mc = phi.clauses.size();
  const std::size_t n = nv + 2;  // y, z, t
  const std::size_t base = 2 * nv + mc + 1;
  const std::size_t m = base + 2 + n;
  const std::size_t z = nv, t = nv + 1;
  Instance inst;
  inst.form = Form::Natural;
  inst.A = RatMatrix(m, n);
  inst.B = RatMatrix(m, nv);
  inst.b = RatVector(m);
  inst.C = RatMatrix(n, nv);
  inst.c = RatVector(n);
  for (std::size_t i = 0; i <= nv; ++i) inst.c[i] = -1;  // t is not in the objective
  for (std::size_t i = 0; i < nv; ++i) {
    inst.A.at(i, i) = 1;
    inst.B.at(i, i) = 1;
    inst.A.at(nv + i, i) = 1;
    inst.B.at(nv + i, i) = -1;
    inst.b[nv + i] = 1;
  }
  for (std::size_t j = 0; j < mc; ++j) {
    inst.A.at(2 * nv + j, z) = 1;
    add_clause_terms(inst.B, inst.b, 2 * nv + j, phi.clauses[j]);
  }
  inst.A.at(2 * nv + mc, z) = 1;
  inst.b[2 * nv + mc] = 1;
  // -sum y + z + t = 1, as two inequality rows
  for (std::size_t i = 0; i < nv; ++i) {
    inst.A.at(base, i) = -1;
    inst.A.at(base + 1, i) = 1;
  }
  inst.A.at(base, z) = 1;
  inst.A.at(base, t) = 1;
  inst.b[base] = 1;
  inst.A.at(base + 1, z) = -1;
  inst.A.at(base + 1, t) = -1;
  inst.b[base + 1] = -1;
  for (std::size_t i = 0; i < n; ++i) inst.A.at(base + 2 + i, i) = -1;  // >= 0
  inst.X = unit_box(nv);
  return {std::move(inst), coordinate_zero_target(n, t)};
}

ReductionOutput reduce_sat_onevar_of(const CnfFormula& phi) {
  check_formula(phi);
  const std::size_t nv = phi.num_vars, mc = phi.clauses.size();
  const std::size_t n = 2 * nv + 1;  // mu, nu, z
  const std::size_t m = nv + n;
  const std::size_t z = 2 * nv;
  Instance inst;
  inst.form = Form::Natural;
  inst.A = RatMatrix(m, n);
  inst.B = RatMatrix(m, nv);
  inst.b = RatVector(m);
  inst.C = RatMatrix(n, nv);
  inst.c = RatVector(n);
  for (std::size_t i = 0; i < nv; ++i) {
    inst.A.at(i, i) = 1;  // mu_i + nu_i + z <= 1
    inst.A.at(i, nv + i) = 1;
    inst.A.at(i, z) = 1;
    inst.b[i] = 1;
    inst.C.at(i, i) = -1;       // -x^T mu
    inst.C.at(nv + i, i) = 1;   // -(1-x)^T nu
    inst.c[nv + i] = -1;
  }
  inst.c[z] = Rational(1, 4) - Rational(static_cast<long>(nv));
  for (std::size_t i = 0; i < n; ++i) inst.A.at(nv + i, i) = -1;  // >= 0
  // X = [0,1]^nv intersected with the clause values being >= 1
  inst.X = unit_box(nv);
  RatMatrix rows(mc, nv);
  RatVector rhs(mc);
  for (std::size_t j = 0; j < mc; ++j) {
    rhs[j] = -1;
    for (int lit : phi.clauses[j]) {
      std::size_t i = static_cast<std::size_t>(std::abs(lit)) - 1;
      if (lit > 0) {
        rows.at(j, i) -= 1;  // -x_i <= ... encodes x_i >= ...
      } else {
        rows.at(j, i) += 1;
        rhs[j] += 1;
      }
    }
  }
  for (std::size_t j = 0; j < mc; ++j) {
    inst.X.D.append_row([&] {
      RatVector r(nv);
      for (std::size_t i = 0; i < nv; ++i) r[i] = rows.at(j, i);
      return r;
    }());
    inst.X.d.push_back(rhs[j]);
  }
  return {std::move(inst), coordinate_zero_target(n, z)};
}

bool sat_bruteforce(const CnfFormula& phi, std::size_t max_vars) {
  check_formula(phi);
  if (phi.num_vars > max_vars)
    throw SizeGuardError("too many variables for truth-table evaluation");
  const std::uint64_t total = std::uint64_t(1) << phi.num_vars;
  for (std::uint64_t assign = 0; assign < total; ++assign) {
    bool ok = true;
    for (const auto& cl : phi.clauses) {
      bool sat = false;
      for (int lit : cl) {
        std::size_t i = static_cast<std::size_t>(std::abs(lit)) - 1;
        bool value = (assign >> i) & 1;
        if (lit > 0 ? value : !value) sat = true;
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

CnfFormula read_dimacs(std::istream& in) {
  CnfFormula phi;
  std::string line;
  bool header = false;
  std::vector<int> pending;
  std::size_t expected_clauses = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> phi.num_vars >> expected_clauses) || fmt != "cnf")
        throw ParseError("malformed DIMACS header");
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before DIMACS header");
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.empty()) throw ParseError("empty clause");
        if (pending.size() > 3) throw ParseError("clause has more than 3 literals");
        while (pending.size() < 3) pending.push_back(pending.front());
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (!header) throw ParseError("missing DIMACS header");
  if (!pending.empty()) throw ParseError("unterminated clause");
  if (phi.clauses.size() != expected_clauses)
    throw ParseError("clause count does not match header");
  check_formula(phi);
  return phi;
}

}  // namespace invlfp
