#pragma once

// Internal builders for the single-level LP systems the deciders and
// verifiers share. Each builder allocates its variable blocks in the order
// recorded in Vars and appends the parameter-domain rows Dx <= d last.
// Epsilon LPs minimize -eps with eps capped above, so "margin > 0" reads as
// "optimal value < 0".

#include <optional>
#include <vector>

#include "invlfp/lp.hpp"
#include "invlfp/model.hpp"

namespace invlfp::sys {

struct Vars {
  std::size_t x = 0, y = 0, mu = 0, eps = 0;
  bool has_y = false, has_eps = false;
};

std::vector<bool> index_mask(const std::vector<std::size_t>& idx, std::size_t size);

void add_param_domain(GeneralLP& lp, std::size_t x0, const ParamPolyhedron& X);

/// Adds the dual rows (A^T mu)_i - (Cx)_i {rel} c_i for all i in [n].
void add_dual_rows(GeneralLP& lp, const Instance& inst, const Vars& v,
                   const std::vector<Rel>& rels);

// --- singleton target, standard form ---
GeneralLP std_singleton_opt(const Instance& inst, const RatVector& ybar, Vars& v);
GeneralLP std_singleton_pess(const Instance& inst, const RatVector& ybar,
                             const Rational& eps_cap, Vars& v);

// --- singleton target, natural form, B = 0 ---
GeneralLP nat_of_singleton_opt(const Instance& inst, const RatVector& ybar, Vars& v);
GeneralLP nat_of_singleton_pess(const Instance& inst, const RatVector& ybar,
                                const std::vector<std::size_t>& active,
                                const Rational& eps_cap, Vars& v);

// --- singleton target, natural form, active-set certificate ---
GeneralLP nat_singleton_active_opt(const Instance& inst, const RatVector& ybar,
                                   const std::vector<std::size_t>& active, Vars& v);
GeneralLP nat_singleton_active_pess(const Instance& inst, const RatVector& ybar,
                                    const std::vector<std::size_t>& active,
                                    const Rational& eps_cap, Vars& v);

// --- basis target, standard form ---
/// Feasibility system for a zero set covering the non-basic indices.
GeneralLP basis_opt_system(const Instance& inst, const std::vector<std::size_t>& zero_set,
                           Vars& v);
GeneralLP basis_pess_eps(const Instance& inst, const std::vector<std::size_t>& nonbasis,
                         const std::vector<std::size_t>& nonessential,
                         const Rational& eps_cap, Vars& v);

// --- partial fix, standard form (guess = zero set among free coordinates) ---
GeneralLP partial_opt_system(const Instance& inst, const RatVector& ybar,
                             const std::vector<std::size_t>& guess, Vars& v);
GeneralLP partial_pess_eps(const Instance& inst, const RatVector& ybar,
                           const std::vector<std::size_t>& guess,
                           const Rational& eps_cap, Vars& v);

/// True iff every fixed coordinate h < `fixed` is determined by the rows of A
/// together with the unit vectors of `zero_set` — necessary for a zero-set
/// guess to make the fixed prefix uniquely attained on the optimal face.
bool partial_prefix_pinned(const Instance& inst, std::size_t fixed,
                           const std::vector<std::size_t>& zero_set);

// --- polyhedral target, natural form ---
/// Optimistic feasibility system for active rows `active`; the target rows
/// Sy <= t are supplied separately so the oracle verifier can substitute its
/// per-coordinate box.
GeneralLP polyhedral_opt_system(const Instance& inst, const std::vector<std::size_t>& active,
                                const RatMatrix& S, const RatVector& t, Vars& v);

/// Per-target-row slack vectors (s1 over [m], s2 over `active`).
struct SlackPair {
  RatVector s1, s2;
};

GeneralLP polyhedral_pess_eps(const Instance& inst, const std::vector<std::size_t>& active,
                              const std::vector<SlackPair>& slacks, const RatVector& t,
                              const Rational& eps_cap, Vars& v);

/// Solves for the slack pair with the given supports: the rows of A indexed
/// by supports must combine to S_h. Returns nullopt unless the constrained
/// system has a unique nonnegative solution.
std::optional<SlackPair> solve_slack_pair(const Instance& inst,
                                          const std::vector<std::size_t>& active,
                                          const RatVector& target_row,
                                          const std::vector<std::size_t>& supp1,
                                          const std::vector<std::size_t>& supp2);

/// True iff the epsilon LP admits a strictly positive margin.
bool eps_positive(const GeneralLP& lp, RatVector* solution = nullptr);

}  // namespace invlfp::sys
