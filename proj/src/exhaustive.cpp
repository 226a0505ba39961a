#include "invlfp/exhaustive.hpp"

#include <algorithm>

#include "fixed_x.hpp"
#include "invlfp/errors.hpp"
#include "invlfp/evaluate.hpp"
#include "systems.hpp"

namespace invlfp {

namespace {

enum class RowState { Undecided, Active, Inactive };

struct Budget {
  std::size_t limit;
  SearchStats* stats;
  std::size_t used = 0;
  void charge() {
    ++used;
    if (stats) ++stats->systems_examined;
    if (used > limit) throw SizeGuardError("candidate system budget exhausted");
  }
};

RatVector matrix_row(const RatMatrix& m, std::size_t r) {
  RatVector row(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) row[i] = m.at(r, i);
  return row;
}

RatVector slice(const RatVector& v, std::size_t from, std::size_t len) {
  return RatVector(v.begin() + static_cast<long>(from),
                   v.begin() + static_cast<long>(from + len));
}

void require_natural(const Instance& inst) {
  if (inst.form != Form::Natural)
    throw ValidationError(ValidationError::Kind::FormMismatch,
                          "polyhedral search requires natural form");
}

Rational row_slack(const Instance& inst, const RatVector& sol, const sys::Vars& v,
                   std::size_t j) {
  Rational lhs = 0;
  for (std::size_t i = 0; i < inst.n(); ++i) lhs += inst.A.at(j, i) * sol[v.y + i];
  for (std::size_t t = 0; t < inst.k(); ++t) lhs -= inst.B.at(j, t) * sol[v.x + t];
  return inst.b[j] - lhs;
}

// ---------------------------------------------------------------------------
// optimistic polyhedral search
// ---------------------------------------------------------------------------

GeneralLP opt_node_lp(const Instance& inst, const PolyhedronTarget& tgt,
                      const std::vector<RowState>& state, sys::Vars& v) {
  GeneralLP lp;
  v = sys::Vars{};
  v.x = lp.add_vars(inst.k());
  v.y = lp.add_vars(inst.n());
  v.has_y = true;
  v.mu = lp.add_vars(inst.m());
  for (std::size_t j = 0; j < inst.m(); ++j) {
    auto& row = lp.add_row(state[j] == RowState::Active ? Rel::Eq : Rel::Le, inst.b[j]);
    for (std::size_t i = 0; i < inst.n(); ++i) row.coeffs[v.y + i] = inst.A.at(j, i);
    for (std::size_t t = 0; t < inst.k(); ++t) row.coeffs[v.x + t] = -inst.B.at(j, t);
    lp.upper[v.mu + j] = 0;
    if (state[j] == RowState::Inactive) lp.lower[v.mu + j] = 0;
  }
  sys::add_dual_rows(lp, inst, v, std::vector<Rel>(inst.n(), Rel::Eq));
  for (std::size_t h = 0; h < tgt.S.rows(); ++h) {
    auto& row = lp.add_row(Rel::Le, tgt.t[h]);
    for (std::size_t i = 0; i < inst.n(); ++i) row.coeffs[v.y + i] = tgt.S.at(h, i);
  }
  sys::add_param_domain(lp, v.x, inst.X);
  return lp;
}

std::optional<Decision> opt_search(const Instance& inst, const PolyhedronTarget& tgt,
                                   std::vector<RowState>& state, Budget& budget) {
  budget.charge();
  sys::Vars v;
  auto out = check_feasible(opt_node_lp(inst, tgt, state, v));
  auto* fp = std::get_if<FeasiblePoint>(&out);
  if (fp == nullptr) return std::nullopt;

  // complementarity holds on every undecided row? then the solution's own
  // active set is a feasible certificate
  std::size_t branch_row = inst.m();
  for (std::size_t j = 0; j < inst.m(); ++j) {
    if (state[j] != RowState::Undecided) continue;
    if (row_slack(inst, fp->point, v, j) != 0 && fp->point[v.mu + j] != 0) {
      branch_row = j;
      break;
    }
  }
  if (branch_row == inst.m()) {
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < inst.m(); ++j)
      if (row_slack(inst, fp->point, v, j) == 0) active.push_back(j);
    return Decision{true, Scenario::Optimistic, slice(fp->point, v.x, inst.k()),
                    ActiveSetCertificate{std::move(active)}};
  }
  for (RowState choice : {RowState::Active, RowState::Inactive}) {
    state[branch_row] = choice;
    auto res = opt_search(inst, tgt, state, budget);
    state[branch_row] = RowState::Undecided;
    if (res) return res;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// pessimistic polyhedral search
// ---------------------------------------------------------------------------

// s-vector for one target row, purified so that its support solves uniquely.
struct ResolvedSupports {
  sys::SlackPair pair;
  SupportFamilyCertificate::Supports supports;
};

/// min (rhs^T s1 - rhs_A^T s2) over {A^T s1 - A_A^T s2 = target_row, s >= 0},
/// the dual of maximizing target_row^T y over the face of `active` at fixed
/// rhs. Returns nullopt when infeasible or unbounded.
std::optional<ResolvedSupports> dual_supports(const Instance& inst,
                                              const std::vector<std::size_t>& active,
                                              const RatVector& rhs,
                                              const RatVector& target_row, Budget& budget) {
  const std::size_t m = inst.m(), a = active.size();
  budget.charge();
  GeneralLP lp;
  std::size_t s0 = lp.add_vars(m + a);
  for (std::size_t p = 0; p < m + a; ++p) lp.lower[p] = 0;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    auto& row = lp.add_row(Rel::Eq, target_row[i]);
    for (std::size_t r = 0; r < m; ++r) row.coeffs[s0 + r] = inst.A.at(r, i);
    for (std::size_t p = 0; p < a; ++p) row.coeffs[s0 + m + p] = -inst.A.at(active[p], i);
  }
  for (std::size_t r = 0; r < m; ++r) lp.objective[s0 + r] = rhs[r];
  for (std::size_t p = 0; p < a; ++p) lp.objective[s0 + m + p] = -rhs[active[p]];
  auto out = solve_lp(lp);
  auto* opt = std::get_if<LpOptimal>(&out);
  if (opt == nullptr) return std::nullopt;

  RatVector s = opt->primal;
  // Purify to a vertex: while the support columns are dependent, slide along
  // a kernel direction until a support coordinate hits zero. The objective is
  // constant along such moves at an optimum.
  for (;;) {
    std::vector<std::size_t> supp;
    for (std::size_t p = 0; p < m + a; ++p)
      if (s[p] != 0) supp.push_back(p);
    RatMatrix cols(inst.n(), supp.size());
    for (std::size_t i = 0; i < inst.n(); ++i)
      for (std::size_t q = 0; q < supp.size(); ++q)
        cols.at(i, q) =
            supp[q] < m ? inst.A.at(supp[q], i) : -inst.A.at(active[supp[q] - m], i);
    auto kernel = null_vector(cols);
    if (!kernel) break;
    RatVector dir = *kernel;
    if (std::all_of(dir.begin(), dir.end(), [](const Rational& q) { return q >= 0; }))
      for (auto& q : dir) q = -q;
    std::optional<Rational> step;
    for (std::size_t q = 0; q < supp.size(); ++q) {
      if (dir[q] >= 0) continue;
      Rational limit = s[supp[q]] / -dir[q];
      if (!step || limit < *step) step = limit;
    }
    for (std::size_t q = 0; q < supp.size(); ++q) s[supp[q]] += *step * dir[q];
  }

  ResolvedSupports res;
  res.pair.s1 = slice(s, 0, m);
  res.pair.s2 = slice(s, m, a);
  for (std::size_t r = 0; r < m; ++r)
    if (res.pair.s1[r] != 0) res.supports.s1.push_back(r);
  for (std::size_t p = 0; p < a; ++p)
    if (res.pair.s2[p] != 0) res.supports.s2.push_back(active[p]);
  return res;
}

/// Builds the full pessimistic certificate at a parameter already known to
/// satisfy the pessimistic condition.
std::optional<Decision> pess_yes_at(const Instance& inst, const PolyhedronTarget& tgt,
                                    const RatVector& xbar, Budget& budget) {
  budget.charge();
  auto out = solve_lp(fx::lp_x(inst, xbar));
  auto* opt = std::get_if<LpOptimal>(&out);
  if (opt == nullptr) return std::nullopt;

  RatVector rhs = fx::rhs_at(inst, xbar);
  GeneralLP face = fx::face_lp(inst, xbar, opt->value);
  std::vector<std::size_t> active;  // rows tight on the whole optimal face
  for (std::size_t j = 0; j < inst.m(); ++j) {
    budget.charge();
    RatVector neg_row = matrix_row(inst.A, j);
    for (auto& q : neg_row) q = -q;
    auto min_lhs = fx::face_max(face, neg_row);
    if (min_lhs && *min_lhs == -rhs[j]) active.push_back(j);
  }

  SupportFamilyCertificate cert;
  cert.active = active;
  std::vector<sys::SlackPair> slacks;
  for (std::size_t h = 0; h < tgt.S.rows(); ++h) {
    auto res = dual_supports(inst, active, rhs, matrix_row(tgt.S, h), budget);
    if (!res || dot(res->pair.s1, rhs) - [&] {
          Rational acc = 0;
          for (std::size_t p = 0; p < active.size(); ++p)
            acc += res->pair.s2[p] * rhs[active[p]];
          return acc;
        }() > tgt.t[h])
      return std::nullopt;
    slacks.push_back(res->pair);
    cert.supports.push_back(res->supports);
  }
  return Decision{true, Scenario::Pessimistic, xbar, std::move(cert)};
}

GeneralLP pess_node_lp(const Instance& inst, const PolyhedronTarget& tgt,
                       const std::vector<RowState>& state, const Rational& cap,
                       sys::Vars& v) {
  GeneralLP lp;
  v = sys::Vars{};
  v.x = lp.add_vars(inst.k());
  v.y = lp.add_vars(inst.n());
  v.has_y = true;
  v.mu = lp.add_vars(inst.m());
  v.eps = lp.add_var();
  v.has_eps = true;
  lp.objective[v.eps] = -1;
  lp.upper[v.eps] = cap;
  for (std::size_t j = 0; j < inst.m(); ++j) {
    auto& row = lp.add_row(state[j] == RowState::Active ? Rel::Eq : Rel::Le, inst.b[j]);
    for (std::size_t i = 0; i < inst.n(); ++i) row.coeffs[v.y + i] = inst.A.at(j, i);
    for (std::size_t t = 0; t < inst.k(); ++t) row.coeffs[v.x + t] = -inst.B.at(j, t);
    lp.upper[v.mu + j] = 0;
    if (state[j] == RowState::Inactive) {
      row.coeffs[v.eps] = 1;  // strictly slack
      lp.lower[v.mu + j] = 0;
    } else if (state[j] == RowState::Active) {
      auto& strict = lp.add_row(Rel::Le, 0);  // mu_j + eps <= 0
      strict.coeffs[v.mu + j] = 1;
      strict.coeffs[v.eps] = 1;
    }
  }
  sys::add_dual_rows(lp, inst, v, std::vector<Rel>(inst.n(), Rel::Eq));
  // Relaxation of the containment requirement: the strictly-complementary
  // point itself must land in Y. Sound for pruning because every accepting
  // leaf keeps these rows.
  for (std::size_t h = 0; h < tgt.S.rows(); ++h) {
    auto& row = lp.add_row(Rel::Le, tgt.t[h]);
    for (std::size_t i = 0; i < inst.n(); ++i) row.coeffs[v.y + i] = tgt.S.at(h, i);
  }
  sys::add_param_domain(lp, v.x, inst.X);
  return lp;
}

/// True iff the recession cone of the face of `active` never increases any
/// target row (a parameter-free necessary condition for containment).
bool rays_bounded(const Instance& inst, const PolyhedronTarget& tgt,
                  const std::vector<std::size_t>& active, Budget& budget) {
  auto mask = sys::index_mask(active, inst.m());
  for (std::size_t h = 0; h < tgt.S.rows(); ++h) {
    budget.charge();
    GeneralLP lp;
    std::size_t r0 = lp.add_vars(inst.n());
    for (std::size_t j = 0; j < inst.m(); ++j) {
      auto& row = lp.add_row(mask[j] ? Rel::Eq : Rel::Le, 0);
      for (std::size_t i = 0; i < inst.n(); ++i) row.coeffs[r0 + i] = inst.A.at(j, i);
    }
    for (std::size_t i = 0; i < inst.n(); ++i) lp.objective[r0 + i] = -tgt.S.at(h, i);
    auto out = solve_lp(lp);
    auto* opt = std::get_if<LpOptimal>(&out);
    if (opt == nullptr || opt->value != 0) return false;  // unbounded or weird
  }
  return true;
}

/// Exhaustive support enumeration for one active set — the complete fallback
/// when the quick checks at a leaf are inconclusive.
std::optional<Decision> pess_leaf_supports(const Instance& inst,
                                           const PolyhedronTarget& tgt,
                                           const std::vector<std::size_t>& active,
                                           const Rational& cap, Budget& budget) {
  const std::size_t m = inst.m(), r = tgt.S.rows();
  auto mask = sys::index_mask(active, m);

  // All support-resolvable slack pairs per target row, small supports first.
  std::vector<std::vector<ResolvedSupports>> options(r);
  for (std::size_t h = 0; h < r; ++h) {
    RatVector target_row = matrix_row(tgt.S, h);
    std::vector<std::size_t> trits(m, 0);  // 0: unused, 1: in s1, 2: in s2
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> assignments;
    auto enumerate = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
      if (pos == m) {
        assignments.emplace_back(used, trits);
        return;
      }
      for (std::size_t choice = 0; choice <= (mask[pos] ? 2u : 1u); ++choice) {
        if (choice != 0 && used == inst.n()) continue;  // supports stay independent
        trits[pos] = choice;
        self(self, pos + 1, used + (choice != 0 ? 1 : 0));
      }
      trits[pos] = 0;
    };
    enumerate(enumerate, 0, 0);
    std::stable_sort(assignments.begin(), assignments.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [used, assign] : assignments) {
      std::vector<std::size_t> s1, s2;
      for (std::size_t pos = 0; pos < m; ++pos) {
        if (assign[pos] == 1) s1.push_back(pos);
        if (assign[pos] == 2) s2.push_back(pos);
      }
      budget.charge();
      auto sp = sys::solve_slack_pair(inst, active, target_row, s1, s2);
      if (!sp) continue;
      ResolvedSupports rs;
      rs.pair = std::move(*sp);
      rs.supports.s1 = std::move(s1);
      rs.supports.s2 = std::move(s2);
      options[h].push_back(std::move(rs));
    }
    if (options[h].empty()) return std::nullopt;
  }

  std::vector<std::size_t> pick(r, 0);
  for (;;) {
    std::vector<sys::SlackPair> slacks;
    SupportFamilyCertificate cert;
    cert.active = active;
    for (std::size_t h = 0; h < r; ++h) {
      slacks.push_back(options[h][pick[h]].pair);
      cert.supports.push_back(options[h][pick[h]].supports);
    }
    budget.charge();
    sys::Vars v;
    GeneralLP lp = sys::polyhedral_pess_eps(inst, active, slacks, tgt.t, cap, v);
    RatVector sol;
    if (sys::eps_positive(lp, &sol))
      return Decision{true, Scenario::Pessimistic, slice(sol, v.x, inst.k()),
                      std::move(cert)};
    std::size_t h = 0;
    while (h < r && ++pick[h] == options[h].size()) pick[h++] = 0;
    if (h == r) return std::nullopt;
  }
}

std::optional<Decision> pess_search(const Instance& inst, const PolyhedronTarget& tgt,
                                    std::vector<RowState>& state, const Rational& cap,
                                    Budget& budget) {
  budget.charge();
  sys::Vars v;
  auto out = solve_lp(pess_node_lp(inst, tgt, state, cap, v));
  auto* opt = std::get_if<LpOptimal>(&out);
  if (opt == nullptr || opt->value >= 0) return std::nullopt;  // no positive margin

  std::size_t branch_row = inst.m();
  for (std::size_t j = 0; j < inst.m(); ++j)
    if (state[j] == RowState::Undecided) {
      branch_row = j;
      break;
    }
  if (branch_row != inst.m()) {
    for (RowState choice : {RowState::Active, RowState::Inactive}) {
      state[branch_row] = choice;
      auto res = pess_search(inst, tgt, state, cap, budget);
      state[branch_row] = RowState::Undecided;
      if (res) return res;
    }
    return std::nullopt;
  }

  // Leaf: active set fully decided and some x gives it a positive margin.
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < inst.m(); ++j)
    if (state[j] == RowState::Active) active.push_back(j);
  if (!rays_bounded(inst, tgt, active, budget)) return std::nullopt;

  // Quick accept: the margin-maximizing parameter often already works.
  RatVector xhat = slice(opt->primal, v.x, inst.k());
  budget.charge();
  if (evaluate_fixed_parameter(inst, TargetSet{tgt}, Scenario::Pessimistic, xhat))
    if (auto dec = pess_yes_at(inst, tgt, xhat, budget)) return dec;

  return pess_leaf_supports(inst, tgt, active, cap, budget);
}

/// Vertices of X (plus one interior feasible point) for the pessimistic
/// fast-accept pass. Best effort: gives up quietly on large row counts.
std::vector<RatVector> domain_samples(const ParamPolyhedron& X, std::size_t limit) {
  std::vector<RatVector> samples;
  const std::size_t p = X.D.rows(), k = X.D.cols();
  {
    GeneralLP lp;
    std::size_t x0 = lp.add_vars(k);
    for (std::size_t r = 0; r < p; ++r) {
      auto& row = lp.add_row(Rel::Le, X.d[r]);
      for (std::size_t t = 0; t < k; ++t) row.coeffs[x0 + t] = X.D.at(r, t);
    }
    auto out = check_feasible(lp);
    auto* fp = std::get_if<FeasiblePoint>(&out);
    if (fp == nullptr) return samples;  // empty domain
    samples.push_back(fp->point);
  }
  if (k == 0 || p < k) return samples;

  std::vector<std::size_t> subset;
  std::size_t seen = 0;
  bool aborted = false;
  auto dfs = [&](auto&& self, std::size_t next) -> void {
    if (aborted) return;
    if (subset.size() == k) {
      if (++seen > limit) {
        aborted = true;
        return;
      }
      auto res = solve_unique(X.D.select_rows(subset),
                              [&] {
                                RatVector rhs(k);
                                for (std::size_t q = 0; q < k; ++q) rhs[q] = X.d[subset[q]];
                                return rhs;
                              }());
      if (res.status == SolveStatus::Unique && fx::in_domain(X, res.solution))
        samples.push_back(res.solution);
      return;
    }
    for (std::size_t r = next; r < p; ++r) {
      subset.push_back(r);
      self(self, r + 1);
      subset.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  return samples;
}

}  // namespace

PolyhedronTarget singleton_as_polyhedron(const RatVector& ybar) {
  const std::size_t n = ybar.size();
  PolyhedronTarget tgt;
  tgt.S = RatMatrix(2 * n, n);
  tgt.t = RatVector(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    tgt.S.at(i, i) = 1;
    tgt.t[i] = ybar[i];
    tgt.S.at(n + i, i) = -1;
    tgt.t[n + i] = -ybar[i];
  }
  return tgt;
}

Decision solve_polyhedral_optimistic(const Instance& inst, const PolyhedronTarget& target,
                                     const SolveOptions& opts, SearchStats* stats) {
  require_natural(inst);
  Budget budget{opts.budget, stats};
  std::vector<RowState> state(inst.m(), RowState::Undecided);
  if (auto dec = opt_search(inst, target, state, budget)) return *dec;
  return Decision{false, Scenario::Optimistic, std::nullopt, std::nullopt};
}

Decision solve_polyhedral_pessimistic(const Instance& inst, const PolyhedronTarget& target,
                                      const SolveOptions& opts, SearchStats* stats) {
  require_natural(inst);
  Budget budget{opts.budget, stats};
  for (const RatVector& x : domain_samples(inst.X, opts.budget)) {
    budget.charge();
    if (!evaluate_fixed_parameter(inst, TargetSet{target}, Scenario::Pessimistic, x))
      continue;
    if (auto dec = pess_yes_at(inst, target, x, budget)) return *dec;
  }
  std::vector<RowState> state(inst.m(), RowState::Undecided);
  if (auto dec = pess_search(inst, target, state, opts.eps_cap, budget)) return *dec;
  return Decision{false, Scenario::Pessimistic, std::nullopt, std::nullopt};
}

Decision solve_basis_optimistic(const Instance& inst, const BasisTarget& target,
                                const SolveOptions& opts, SearchStats* stats) {
  if (inst.form != Form::Standard)
    throw ValidationError(ValidationError::Kind::FormMismatch,
                          "basis targets require standard form");
  if (target.cols.size() != inst.m() || rank(inst.A.select_cols(target.cols)) != inst.m())
    throw InvalidBasisError("target columns do not form a basis of A");
  Budget budget{opts.budget, stats};

  std::vector<bool> in_basis(inst.n(), false);
  for (std::size_t i : target.cols) in_basis[i] = true;
  std::vector<std::size_t> nonbasis;
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (!in_basis[i]) nonbasis.push_back(i);

  // Per basic index: undecided / forced zero ("active") / dual-tight.
  std::vector<RowState> state(inst.n(), RowState::Undecided);

  auto node_lp = [&](sys::Vars& v) {
    GeneralLP lp;
    v = sys::Vars{};
    v.x = lp.add_vars(inst.k());
    v.y = lp.add_vars(inst.n());
    v.has_y = true;
    v.mu = lp.add_vars(inst.m());
    for (std::size_t i = 0; i < inst.n(); ++i) {
      lp.lower[v.y + i] = 0;
      if (!in_basis[i] || state[i] == RowState::Active) lp.upper[v.y + i] = 0;
    }
    for (std::size_t j = 0; j < inst.m(); ++j) {
      auto& row = lp.add_row(Rel::Eq, inst.b[j]);
      for (std::size_t i = 0; i < inst.n(); ++i) row.coeffs[v.y + i] = inst.A.at(j, i);
      for (std::size_t t = 0; t < inst.k(); ++t) row.coeffs[v.x + t] = -inst.B.at(j, t);
    }
    std::vector<Rel> rels(inst.n(), Rel::Le);
    for (std::size_t i = 0; i < inst.n(); ++i)
      if (state[i] == RowState::Inactive) rels[i] = Rel::Eq;  // dual tight
    sys::add_dual_rows(lp, inst, v, rels);
    sys::add_param_domain(lp, v.x, inst.X);
    return lp;
  };

  auto dual_slack = [&](const RatVector& sol, const sys::Vars& v, std::size_t i) {
    Rational lhs = 0;
    for (std::size_t r = 0; r < inst.m(); ++r) lhs += inst.A.at(r, i) * sol[v.mu + r];
    Rational rhs = inst.c[i];
    for (std::size_t t = 0; t < inst.k(); ++t) rhs += inst.C.at(i, t) * sol[v.x + t];
    return rhs - lhs;
  };

  auto search = [&](auto&& self) -> std::optional<Decision> {
    budget.charge();
    sys::Vars v;
    auto out = check_feasible(node_lp(v));
    auto* fp = std::get_if<FeasiblePoint>(&out);
    if (fp == nullptr) return std::nullopt;
    std::size_t branch = inst.n();
    for (std::size_t i = 0; i < inst.n(); ++i) {
      if (!in_basis[i] || state[i] != RowState::Undecided) continue;
      if (fp->point[v.y + i] != 0 && dual_slack(fp->point, v, i) != 0) {
        branch = i;
        break;
      }
    }
    if (branch == inst.n()) {
      std::vector<std::size_t> zero_set = nonbasis;
      for (std::size_t i = 0; i < inst.n(); ++i)
        if (in_basis[i] && fp->point[v.y + i] == 0) zero_set.push_back(i);
      std::sort(zero_set.begin(), zero_set.end());
      return Decision{true, Scenario::Optimistic, slice(fp->point, v.x, inst.k()),
                      BasisZeroSetCertificate{std::move(zero_set)}};
    }
    for (RowState choice : {RowState::Active, RowState::Inactive}) {
      state[branch] = choice;
      auto res = self(self);
      state[branch] = RowState::Undecided;
      if (res) return res;
    }
    return std::nullopt;
  };
  if (auto dec = search(search)) return *dec;
  return Decision{false, Scenario::Optimistic, std::nullopt, std::nullopt};
}

}  // namespace invlfp
