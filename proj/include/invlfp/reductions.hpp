#pragma once

// 3-SAT encodings into inverse-LP feasibility, plus a brute-force SAT check.
// Each generator returns an instance whose yes/no status equals the
// satisfiability of the formula, giving test instances with known truth.

#include <array>
#include <iosfwd>
#include <vector>

#include "invlfp/model.hpp"

namespace invlfp {

/// Literal: 1-based variable index, negative for negation.
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

struct ReductionOutput {
  Instance instance;
  TargetSet target;
};

/// Natural form, parameter in the right-hand side; target singleton
/// (0,...,0,1). Decides both scenarios identically.
ReductionOutput reduce_sat_rhs(const CnfFormula& phi);

/// Standard form; target basis {z, s_1..s_{2n+m}} (optimistic scenario).
ReductionOutput reduce_sat_basis(const CnfFormula& phi);

/// Natural form with one extra variable t and target polyhedron {t = 0};
/// both scenarios.
ReductionOutput reduce_sat_onevar_rhs(const CnfFormula& phi);

/// Natural form with fixed right-hand side (B = 0), parameter only in the
/// objective; target polyhedron {z = 0}; both scenarios.
ReductionOutput reduce_sat_onevar_of(const CnfFormula& phi);

/// Truth-table satisfiability check; throws SizeGuardError past `max_vars`.
bool sat_bruteforce(const CnfFormula& phi, std::size_t max_vars = 20);

/// Standard DIMACS CNF; clauses with fewer than 3 literals are padded by
/// repeating their first literal.
CnfFormula read_dimacs(std::istream& in);

}  // namespace invlfp
