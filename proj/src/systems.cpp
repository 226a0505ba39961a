#include "systems.hpp"

#include <algorithm>

#include "invlfp/errors.hpp"

namespace invlfp::sys {

namespace {

GeneralLP make_base(const Instance& inst, bool with_y, const Rational* eps_cap, Vars& v) {
  GeneralLP lp;
  v = Vars{};
  v.x = lp.add_vars(inst.k());
  if (with_y) {
    v.y = lp.add_vars(inst.n());
    v.has_y = true;
  }
  v.mu = lp.add_vars(inst.m());
  if (eps_cap) {
    v.eps = lp.add_var();
    v.has_eps = true;
    lp.objective[v.eps] = -1;  // maximize the margin
    lp.upper[v.eps] = *eps_cap;
  }
  return lp;
}

// (Ay)_j - (Bx)_j rel b_j
void add_primal_row(GeneralLP& lp, const Instance& inst, const Vars& v, std::size_t j,
                    Rel rel, const Rational& eps_coeff = Rational(0)) {
  auto& row = lp.add_row(rel, inst.b[j]);
  for (std::size_t i = 0; i < inst.n(); ++i) row.coeffs[v.y + i] = inst.A.at(j, i);
  for (std::size_t t = 0; t < inst.k(); ++t) row.coeffs[v.x + t] = -inst.B.at(j, t);
  if (eps_coeff != 0) row.coeffs[v.eps] = eps_coeff;
}

// -(Bx)_j rel b_j - (A ybar)_j, for a fixed target point
void add_fixed_primal_row(GeneralLP& lp, const Instance& inst, const Vars& v,
                          const RatVector& a_ybar, std::size_t j, Rel rel,
                          const Rational& eps_coeff = Rational(0)) {
  auto& row = lp.add_row(rel, inst.b[j] - a_ybar[j]);
  for (std::size_t t = 0; t < inst.k(); ++t) row.coeffs[v.x + t] = -inst.B.at(j, t);
  if (eps_coeff != 0) row.coeffs[v.eps] = eps_coeff;
}

}  // namespace

std::vector<bool> index_mask(const std::vector<std::size_t>& idx, std::size_t size) {
  std::vector<bool> mask(size, false);
  for (std::size_t i : idx) {
    if (i >= size) throw DimensionError("index out of range");
    mask[i] = true;
  }
  return mask;
}

void add_param_domain(GeneralLP& lp, std::size_t x0, const ParamPolyhedron& X) {
  for (std::size_t p = 0; p < X.D.rows(); ++p) {
    auto& row = lp.add_row(Rel::Le, X.d[p]);
    for (std::size_t t = 0; t < X.D.cols(); ++t) row.coeffs[x0 + t] = X.D.at(p, t);
  }
}

void add_dual_rows(GeneralLP& lp, const Instance& inst, const Vars& v,
                   const std::vector<Rel>& rels) {
  for (std::size_t i = 0; i < inst.n(); ++i) {
    auto& row = lp.add_row(rels[i], inst.c[i]);
    for (std::size_t r = 0; r < inst.m(); ++r) row.coeffs[v.mu + r] = inst.A.at(r, i);
    for (std::size_t t = 0; t < inst.k(); ++t) row.coeffs[v.x + t] = -inst.C.at(i, t);
  }
}

namespace {

// Dual rows with a per-index epsilon coefficient (for "+eps <=" variants).
void add_dual_rows_eps(GeneralLP& lp, const Instance& inst, const Vars& v,
                       const std::vector<Rel>& rels, const std::vector<bool>& plus_eps) {
  std::size_t first = lp.rows.size();
  add_dual_rows(lp, inst, v, rels);
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (plus_eps[i]) lp.rows[first + i].coeffs[v.eps] = 1;
}

// ybar^T (Cx + c - A^T mu) = 0
void add_std_complementarity(GeneralLP& lp, const Instance& inst, const Vars& v,
                             const RatVector& ybar, const RatVector& a_ybar) {
  Rational rhs = -dot(ybar, inst.c);
  auto& row = lp.add_row(Rel::Eq, rhs);
  for (std::size_t t = 0; t < inst.k(); ++t) {
    Rational coeff = 0;
    for (std::size_t i = 0; i < inst.n(); ++i) coeff += inst.C.at(i, t) * ybar[i];
    row.coeffs[v.x + t] = coeff;
  }
  for (std::size_t r = 0; r < inst.m(); ++r) row.coeffs[v.mu + r] = -a_ybar[r];
}

}  // namespace

GeneralLP std_singleton_opt(const Instance& inst, const RatVector& ybar, Vars& v) {
  GeneralLP lp = make_base(inst, false, nullptr, v);
  RatVector a_ybar = inst.A.mul(ybar);
  for (std::size_t j = 0; j < inst.m(); ++j)
    add_fixed_primal_row(lp, inst, v, a_ybar, j, Rel::Eq);
  add_dual_rows(lp, inst, v, std::vector<Rel>(inst.n(), Rel::Le));
  add_std_complementarity(lp, inst, v, ybar, a_ybar);
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

GeneralLP std_singleton_pess(const Instance& inst, const RatVector& ybar,
                             const Rational& eps_cap, Vars& v) {
  GeneralLP lp = make_base(inst, false, &eps_cap, v);
  RatVector a_ybar = inst.A.mul(ybar);
  for (std::size_t j = 0; j < inst.m(); ++j)
    add_fixed_primal_row(lp, inst, v, a_ybar, j, Rel::Eq);
  // strictness on the zero coordinates: eps <= (Cx + c - A^T mu)_i
  std::vector<bool> plus_eps(inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) plus_eps[i] = (ybar[i] == 0);
  add_dual_rows_eps(lp, inst, v, std::vector<Rel>(inst.n(), Rel::Le), plus_eps);
  add_std_complementarity(lp, inst, v, ybar, a_ybar);
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

GeneralLP nat_of_singleton_opt(const Instance& inst, const RatVector& ybar, Vars& v) {
  GeneralLP lp = make_base(inst, false, nullptr, v);
  for (std::size_t r = 0; r < inst.m(); ++r) lp.upper[v.mu + r] = 0;
  add_dual_rows(lp, inst, v, std::vector<Rel>(inst.n(), Rel::Eq));
  RatVector slack = inst.b;
  RatVector a_ybar = inst.A.mul(ybar);
  auto& row = lp.add_row(Rel::Eq, 0);
  for (std::size_t r = 0; r < inst.m(); ++r) row.coeffs[v.mu + r] = slack[r] - a_ybar[r];
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

GeneralLP nat_of_singleton_pess(const Instance& inst, const RatVector& ybar,
                                const std::vector<std::size_t>& active,
                                const Rational& eps_cap, Vars& v) {
  GeneralLP lp = make_base(inst, false, &eps_cap, v);
  for (std::size_t r = 0; r < inst.m(); ++r) lp.upper[v.mu + r] = 0;
  add_dual_rows(lp, inst, v, std::vector<Rel>(inst.n(), Rel::Eq));
  RatVector a_ybar = inst.A.mul(ybar);
  auto& row = lp.add_row(Rel::Eq, 0);
  for (std::size_t r = 0; r < inst.m(); ++r) row.coeffs[v.mu + r] = inst.b[r] - a_ybar[r];
  for (std::size_t j : active) {
    auto& strict = lp.add_row(Rel::Le, 0);
    strict.coeffs[v.mu + j] = 1;
    strict.coeffs[v.eps] = 1;
  }
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

GeneralLP nat_singleton_active_opt(const Instance& inst, const RatVector& ybar,
                                   const std::vector<std::size_t>& active, Vars& v) {
  GeneralLP lp = make_base(inst, false, nullptr, v);
  auto mask = index_mask(active, inst.m());
  RatVector a_ybar = inst.A.mul(ybar);
  for (std::size_t j = 0; j < inst.m(); ++j)
    add_fixed_primal_row(lp, inst, v, a_ybar, j, mask[j] ? Rel::Eq : Rel::Le);
  for (std::size_t r = 0; r < inst.m(); ++r) {
    lp.upper[v.mu + r] = 0;
    if (!mask[r]) lp.lower[v.mu + r] = 0;
  }
  add_dual_rows(lp, inst, v, std::vector<Rel>(inst.n(), Rel::Eq));
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

GeneralLP nat_singleton_active_pess(const Instance& inst, const RatVector& ybar,
                                    const std::vector<std::size_t>& active,
                                    const Rational& eps_cap, Vars& v) {
  GeneralLP lp = make_base(inst, false, &eps_cap, v);
  auto mask = index_mask(active, inst.m());
  RatVector a_ybar = inst.A.mul(ybar);
  for (std::size_t j = 0; j < inst.m(); ++j) {
    if (mask[j])
      add_fixed_primal_row(lp, inst, v, a_ybar, j, Rel::Eq);
    else
      add_fixed_primal_row(lp, inst, v, a_ybar, j, Rel::Le, Rational(1));
  }
  for (std::size_t r = 0; r < inst.m(); ++r) {
    lp.upper[v.mu + r] = 0;
    if (!mask[r]) lp.lower[v.mu + r] = 0;
  }
  add_dual_rows(lp, inst, v, std::vector<Rel>(inst.n(), Rel::Eq));
  for (std::size_t j : active) {
    auto& strict = lp.add_row(Rel::Le, 0);
    strict.coeffs[v.mu + j] = 1;
    strict.coeffs[v.eps] = 1;
  }
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

GeneralLP basis_opt_system(const Instance& inst, const std::vector<std::size_t>& zero_set,
                           Vars& v) {
  GeneralLP lp = make_base(inst, true, nullptr, v);
  auto zero = index_mask(zero_set, inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) {
    lp.lower[v.y + i] = 0;
    if (zero[i]) lp.upper[v.y + i] = 0;
  }
  for (std::size_t j = 0; j < inst.m(); ++j) add_primal_row(lp, inst, v, j, Rel::Eq);
  std::vector<Rel> rels(inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) rels[i] = zero[i] ? Rel::Le : Rel::Eq;
  add_dual_rows(lp, inst, v, rels);
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

GeneralLP basis_pess_eps(const Instance& inst, const std::vector<std::size_t>& nonbasis,
                         const std::vector<std::size_t>& nonessential,
                         const Rational& eps_cap, Vars& v) {
  GeneralLP lp = make_base(inst, true, &eps_cap, v);
  auto nb = index_mask(nonbasis, inst.n());
  auto ness = index_mask(nonessential, inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) {
    lp.lower[v.y + i] = 0;
    if (nb[i]) lp.upper[v.y + i] = 0;
  }
  for (std::size_t j = 0; j < inst.m(); ++j) add_primal_row(lp, inst, v, j, Rel::Eq);
  for (std::size_t i : nonessential) {
    auto& row = lp.add_row(Rel::Ge, 0);  // y_i - eps >= 0
    row.coeffs[v.y + i] = 1;
    row.coeffs[v.eps] = -1;
  }
  std::vector<Rel> rels(inst.n(), Rel::Le);
  std::vector<bool> plus_eps(inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (ness[i]) rels[i] = Rel::Eq;
    plus_eps[i] = nb[i];
  }
  add_dual_rows_eps(lp, inst, v, rels, plus_eps);
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

namespace {

// Common part of the partial-fix systems: pins the fixed prefix and the
// guessed zero coordinates, keeps the free tail nonnegative.
void pin_partial(GeneralLP& lp, const Instance& inst, const Vars& v, const RatVector& ybar,
                 const std::vector<bool>& guess) {
  for (std::size_t i = 0; i < inst.n(); ++i) {
    lp.lower[v.y + i] = 0;
    if (i < ybar.size()) {
      lp.lower[v.y + i] = ybar[i];
      lp.upper[v.y + i] = ybar[i];
    } else if (guess[i]) {
      lp.upper[v.y + i] = 0;
    }
  }
  for (std::size_t j = 0; j < inst.m(); ++j) add_primal_row(lp, inst, v, j, Rel::Eq);
}

std::vector<bool> partial_zero_mask(const Instance& inst, const RatVector& ybar,
                                    const std::vector<std::size_t>& guess) {
  auto mask = index_mask(guess, inst.n());
  for (std::size_t i = 0; i < ybar.size(); ++i)
    if (ybar[i] == 0) mask[i] = true;
  return mask;
}

}  // namespace

GeneralLP partial_opt_system(const Instance& inst, const RatVector& ybar,
                             const std::vector<std::size_t>& guess, Vars& v) {
  GeneralLP lp = make_base(inst, true, nullptr, v);
  pin_partial(lp, inst, v, ybar, index_mask(guess, inst.n()));
  auto zeros = partial_zero_mask(inst, ybar, guess);
  std::vector<Rel> rels(inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) rels[i] = zeros[i] ? Rel::Le : Rel::Eq;
  add_dual_rows(lp, inst, v, rels);
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

GeneralLP partial_pess_eps(const Instance& inst, const RatVector& ybar,
                           const std::vector<std::size_t>& guess,
                           const Rational& eps_cap, Vars& v) {
  GeneralLP lp = make_base(inst, true, &eps_cap, v);
  auto guessed = index_mask(guess, inst.n());
  pin_partial(lp, inst, v, ybar, guessed);
  for (std::size_t i = ybar.size(); i < inst.n(); ++i) {
    if (guessed[i]) continue;
    auto& row = lp.add_row(Rel::Ge, 0);  // y_i - eps >= 0 on unguessed free coords
    row.coeffs[v.y + i] = 1;
    row.coeffs[v.eps] = -1;
  }
  auto zeros = partial_zero_mask(inst, ybar, guess);
  std::vector<Rel> rels(inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) rels[i] = zeros[i] ? Rel::Le : Rel::Eq;
  add_dual_rows_eps(lp, inst, v, rels, zeros);
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

GeneralLP polyhedral_opt_system(const Instance& inst, const std::vector<std::size_t>& active,
                                const RatMatrix& S, const RatVector& t, Vars& v) {
  GeneralLP lp = make_base(inst, true, nullptr, v);
  auto mask = index_mask(active, inst.m());
  for (std::size_t j = 0; j < inst.m(); ++j)
    add_primal_row(lp, inst, v, j, mask[j] ? Rel::Eq : Rel::Le);
  for (std::size_t r = 0; r < inst.m(); ++r) {
    lp.upper[v.mu + r] = 0;
    if (!mask[r]) lp.lower[v.mu + r] = 0;
  }
  add_dual_rows(lp, inst, v, std::vector<Rel>(inst.n(), Rel::Eq));
  for (std::size_t h = 0; h < S.rows(); ++h) {
    auto& row = lp.add_row(Rel::Le, t[h]);
    for (std::size_t i = 0; i < inst.n(); ++i) row.coeffs[v.y + i] = S.at(h, i);
  }
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

GeneralLP polyhedral_pess_eps(const Instance& inst, const std::vector<std::size_t>& active,
                              const std::vector<SlackPair>& slacks, const RatVector& t,
                              const Rational& eps_cap, Vars& v) {
  GeneralLP lp = make_base(inst, true, &eps_cap, v);
  auto mask = index_mask(active, inst.m());
  for (std::size_t j = 0; j < inst.m(); ++j) {
    if (mask[j])
      add_primal_row(lp, inst, v, j, Rel::Eq);
    else
      add_primal_row(lp, inst, v, j, Rel::Le, Rational(1));
  }
  for (std::size_t r = 0; r < inst.m(); ++r) {
    lp.upper[v.mu + r] = 0;
    if (!mask[r]) lp.lower[v.mu + r] = 0;
  }
  add_dual_rows(lp, inst, v, std::vector<Rel>(inst.n(), Rel::Eq));
  for (std::size_t j : active) {
    auto& strict = lp.add_row(Rel::Le, 0);
    strict.coeffs[v.mu + j] = 1;
    strict.coeffs[v.eps] = 1;
  }
  // face containment rows: (Bx+b)^T s1 - (Bx+b)_A^T s2 <= t_h
  for (std::size_t h = 0; h < slacks.size(); ++h) {
    const auto& s = slacks[h];
    Rational rhs = t[h] - dot(s.s1, inst.b);
    for (std::size_t p = 0; p < active.size(); ++p) rhs += s.s2[p] * inst.b[active[p]];
    auto& row = lp.add_row(Rel::Le, rhs);
    for (std::size_t tcol = 0; tcol < inst.k(); ++tcol) {
      Rational coeff = 0;
      for (std::size_t r = 0; r < inst.m(); ++r)
        if (s.s1[r] != 0) coeff += s.s1[r] * inst.B.at(r, tcol);
      for (std::size_t p = 0; p < active.size(); ++p)
        if (s.s2[p] != 0) coeff -= s.s2[p] * inst.B.at(active[p], tcol);
      row.coeffs[v.x + tcol] = coeff;
    }
  }
  add_param_domain(lp, v.x, inst.X);
  return lp;
}

bool partial_prefix_pinned(const Instance& inst, std::size_t fixed,
                           const std::vector<std::size_t>& zero_set) {
  const std::size_t n = inst.n();
  RatMatrix span = inst.A;
  auto zeroed = index_mask(zero_set, n);
  for (std::size_t i : zero_set) {
    RatVector unit(n, Rational(0));
    unit[i] = 1;
    span.append_row(unit);
  }
  std::size_t base_rank = rank(span);
  for (std::size_t h = 0; h < fixed; ++h) {
    if (zeroed[h]) continue;
    RatMatrix ext = span;
    RatVector unit(n, Rational(0));
    unit[h] = 1;
    ext.append_row(unit);
    if (rank(ext) != base_rank) return false;
  }
  return true;
}

std::optional<SlackPair> solve_slack_pair(const Instance& inst,
                                          const std::vector<std::size_t>& active,
                                          const RatVector& target_row,
                                          const std::vector<std::size_t>& supp1,
                                          const std::vector<std::size_t>& supp2) {
  const std::size_t m = inst.m(), n = inst.n(), a = active.size();
  RatMatrix sys(n, m + a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < m; ++r) sys.at(i, r) = inst.A.at(r, i);
    for (std::size_t p = 0; p < a; ++p) sys.at(i, m + p) = -inst.A.at(active[p], i);
  }
  std::vector<bool> forced(m + a, true);
  for (std::size_t r : supp1) forced[r] = false;
  for (std::size_t j : supp2) {
    auto it = std::lower_bound(active.begin(), active.end(), j);
    if (it == active.end() || *it != j) return std::nullopt;  // supports must lie in A
    forced[m + static_cast<std::size_t>(it - active.begin())] = false;
  }
  auto res = solve_unique(sys, target_row, forced);
  if (res.status != SolveStatus::Unique) return std::nullopt;
  SlackPair out;
  out.s1.assign(res.solution.begin(), res.solution.begin() + static_cast<long>(m));
  out.s2.assign(res.solution.begin() + static_cast<long>(m), res.solution.end());
  for (const auto& q : res.solution)
    if (q < 0) return std::nullopt;
  return out;
}

bool eps_positive(const GeneralLP& lp, RatVector* solution) {
  auto out = solve_lp(lp);
  auto* opt = std::get_if<LpOptimal>(&out);
  if (opt == nullptr || opt->value >= 0) return false;
  if (solution) *solution = opt->primal;
  return true;
}

}  // namespace invlfp::sys
