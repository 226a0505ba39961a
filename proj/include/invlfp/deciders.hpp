#pragma once

// Direct (polynomial or FPT) decision procedures for the target-set shapes
// that admit them. All of them reduce feasibility of the inverse problem to
// one or a small family of exact LPs.

#include <vector>

#include "invlfp/model.hpp"

namespace invlfp {

struct SolveOptions {
  Rational eps_cap = 1;        // upper bound on the strictness margin
  std::size_t budget = 1ul << 20;  // max LP solves before SizeGuardError
};

/// Singleton target, standard form. Polynomial in both scenarios.
Decision decide_singleton_standard(const Instance& inst, const RatVector& ybar,
                                   Scenario scenario, const SolveOptions& opts = {});

/// Singleton target, natural form with B = 0 (only the objective depends on
/// the parameter). Throws ValidationError if B has a nonzero entry.
Decision decide_singleton_natural_of(const Instance& inst, const RatVector& ybar,
                                     Scenario scenario, const SolveOptions& opts = {});

/// Indices i of `basis` whose column can be dropped from A without lowering
/// its rank; only these can carry a strictly positive value in every basic
/// optimal solution requirement.
std::vector<std::size_t> compute_nonessential_part(const RatMatrix& A,
                                                   const std::vector<std::size_t>& basis);

/// Basis target, pessimistic scenario. Polynomial.
Decision decide_basis_pessimistic(const Instance& inst, const BasisTarget& target,
                                  const SolveOptions& opts = {});

/// Partial-fix target, standard form, both scenarios. Enumerates the 2^l
/// zero-set guesses over the free coordinates (cardinality-then-lex order).
Decision decide_partial_standard(const Instance& inst, const PartialFixTarget& target,
                                 Scenario scenario, const SolveOptions& opts = {});

}  // namespace invlfp
