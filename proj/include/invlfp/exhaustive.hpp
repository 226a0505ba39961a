#pragma once

// Complete exponential-time solvers for the NP-hard target shapes. They
// search the space of active-set / zero-set certificates with a
// branch-and-prune traversal whose leaves are exactly the certificate
// candidates of the plain enumeration, so verdicts are identical; pruning
// only skips subtrees whose relaxation is already infeasible.

#include "invlfp/deciders.hpp"
#include "invlfp/model.hpp"

namespace invlfp {

struct SearchStats {
  std::size_t systems_examined = 0;  // LP solves charged against the budget
};

/// Y = {ybar} as the polyhedron {y <= ybar, -y <= -ybar}.
PolyhedronTarget singleton_as_polyhedron(const RatVector& ybar);

/// Natural form. Searches active sets; Yes iff some active-set system with
/// target rows Sy <= t is feasible. Throws SizeGuardError past opts.budget.
Decision solve_polyhedral_optimistic(const Instance& inst, const PolyhedronTarget& target,
                                     const SolveOptions& opts = {},
                                     SearchStats* stats = nullptr);

/// Natural form. Searches active sets with strict complementarity and, per
/// target row, support-determined slack vectors bounding the optimal face.
Decision solve_polyhedral_pessimistic(const Instance& inst, const PolyhedronTarget& target,
                                      const SolveOptions& opts = {},
                                      SearchStats* stats = nullptr);

/// Standard form. Searches zero sets extending the non-basic indices.
Decision solve_basis_optimistic(const Instance& inst, const BasisTarget& target,
                                const SolveOptions& opts = {},
                                SearchStats* stats = nullptr);

}  // namespace invlfp
