#include "invlfp/evaluate.hpp"

#include <algorithm>

#include "fixed_x.hpp"
#include "invlfp/errors.hpp"
#include "invlfp/oracle.hpp"
#include "systems.hpp"

namespace invlfp {

namespace {

RatVector unit(std::size_t n, std::size_t i, const Rational& v = Rational(1)) {
  RatVector e(n, Rational(0));
  e[i] = v;
  return e;
}

RatVector matrix_row(const RatMatrix& m, std::size_t r) {
  RatVector row(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) row[i] = m.at(r, i);
  return row;
}

bool nonnegative(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= 0; });
}

/// Solves A_basis y_basis = rhs; returns the full-length basic solution.
RatVector basic_solution(const Instance& inst, const std::vector<std::size_t>& basis,
                         const RatVector& rhs) {
  auto res = solve_unique(inst.A.select_cols(basis), rhs);
  if (res.status != SolveStatus::Unique)
    throw InvalidBasisError("target basis does not determine a point");
  RatVector y(inst.n(), Rational(0));
  for (std::size_t p = 0; p < basis.size(); ++p) y[basis[p]] = res.solution[p];
  return y;
}

/// max s^T y <= bound and min s^T y >= bound over the face (i.e. s^T y pinned).
bool face_pins(const GeneralLP& face, const RatVector& s, const Rational& bound) {
  auto hi = fx::face_max(face, s);
  if (!hi || *hi > bound) return false;
  RatVector neg(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) neg[i] = -s[i];
  auto lo = fx::face_max(face, neg);
  return lo && *lo <= -bound;
}

bool eval_optimistic(const Instance& inst, const TargetSet& target, const RatVector& x,
                     const LpOptimal& opt) {
  const RatVector cost = fx::cost_at(inst, x);
  const RatVector rhs = fx::rhs_at(inst, x);
  return std::visit(
      [&](const auto& tgt) -> bool {
        using T = std::decay_t<decltype(tgt)>;
        if constexpr (std::is_same_v<T, SingletonTarget>) {
          RatVector ay = inst.A.mul(tgt.ybar);
          for (std::size_t j = 0; j < inst.m(); ++j) {
            if (inst.form == Form::Standard ? ay[j] != rhs[j] : ay[j] > rhs[j])
              return false;
          }
          if (inst.form == Form::Standard && !nonnegative(tgt.ybar)) return false;
          return dot(cost, tgt.ybar) == opt.value;
        } else if constexpr (std::is_same_v<T, BasisTarget>) {
          RatVector y = basic_solution(inst, tgt.cols, rhs);
          return nonnegative(y) && dot(cost, y) == opt.value;
        } else if constexpr (std::is_same_v<T, PartialFixTarget>) {
          GeneralLP face = fx::face_lp(inst, x, opt.value);
          for (std::size_t i = 0; i < tgt.ybar.size(); ++i) {
            face.lower[i] = tgt.ybar[i];
            face.upper[i] = tgt.ybar[i];
          }
          return is_feasible(check_feasible(face));
        } else if constexpr (std::is_same_v<T, PolyhedronTarget>) {
          GeneralLP face = fx::face_lp(inst, x, opt.value);
          for (std::size_t h = 0; h < tgt.S.rows(); ++h) {
            auto& row = face.add_row(Rel::Le, tgt.t[h]);
            for (std::size_t i = 0; i < inst.n(); ++i) row.coeffs[i] = tgt.S.at(h, i);
          }
          return is_feasible(check_feasible(face));
        } else {
          throw ValidationError(ValidationError::Kind::Other,
                                "oracle-backed targets cannot be evaluated exactly");
        }
      },
      target);
}

bool eval_pessimistic(const Instance& inst, const TargetSet& target, const RatVector& x,
                      const LpOptimal& opt) {
  GeneralLP face = fx::face_lp(inst, x, opt.value);
  const std::size_t n = inst.n();
  return std::visit(
      [&](const auto& tgt) -> bool {
        using T = std::decay_t<decltype(tgt)>;
        if constexpr (std::is_same_v<T, SingletonTarget>) {
          for (std::size_t i = 0; i < n; ++i)
            if (!face_pins(face, unit(n, i), tgt.ybar[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, PartialFixTarget>) {
          for (std::size_t i = 0; i < tgt.ybar.size(); ++i)
            if (!face_pins(face, unit(n, i), tgt.ybar[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, PolyhedronTarget>) {
          for (std::size_t h = 0; h < tgt.S.rows(); ++h) {
            auto hi = fx::face_max(face, matrix_row(tgt.S, h));
            if (!hi || *hi > tgt.t[h]) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, BasisTarget>) {
          const RatVector cost = fx::cost_at(inst, x);
          const RatVector rhs = fx::rhs_at(inst, x);
          RatVector y = basic_solution(inst, tgt.cols, rhs);
          if (!nonnegative(y) || dot(cost, y) != opt.value) return false;
          // unique optimality: every optimal solution must vanish off the basis
          std::vector<bool> in_basis(n, false);
          for (std::size_t i : tgt.cols) in_basis[i] = true;
          for (std::size_t i = 0; i < n; ++i) {
            if (in_basis[i]) continue;
            auto hi = fx::face_max(face, unit(n, i));
            if (!hi || *hi > 0) return false;
          }
          for (std::size_t i : compute_nonessential_part(inst.A, tgt.cols))
            if (y[i] <= 0) return false;
          return true;
        } else {
          throw ValidationError(ValidationError::Kind::Other,
                                "oracle-backed targets cannot be evaluated exactly");
        }
      },
      target);
}

}  // namespace

bool evaluate_fixed_parameter(const Instance& inst, const TargetSet& target,
                              Scenario scenario, const RatVector& x,
                              const SolveOptions&) {
  if (!fx::in_domain(inst.X, x))
    throw XViolationError("parameter outside the admissible domain");
  auto out = solve_lp(fx::lp_x(inst, x));
  auto* opt = std::get_if<LpOptimal>(&out);
  if (opt == nullptr) return false;
  return scenario == Scenario::Optimistic ? eval_optimistic(inst, target, x, *opt)
                                          : eval_pessimistic(inst, target, x, *opt);
}

bool check_unique_optimal_face(const RatMatrix& A, const RatVector& rhs,
                               const RatVector& cost,
                               const std::vector<std::size_t>& active,
                               const Rational& eps_cap) {
  const std::size_t m = A.rows(), n = A.cols();
  auto mask = sys::index_mask(active, m);
  {
    GeneralLP lp;
    std::size_t y0 = lp.add_vars(n);
    for (std::size_t j = 0; j < m; ++j) {
      auto& row = lp.add_row(mask[j] ? Rel::Eq : Rel::Le, rhs[j]);
      for (std::size_t i = 0; i < n; ++i) row.coeffs[y0 + i] = A.at(j, i);
    }
    if (!is_feasible(check_feasible(lp))) throw EmptyFaceError("face is empty");
  }
  GeneralLP lp;
  std::size_t mu0 = lp.add_vars(m);
  std::size_t eps = lp.add_var();
  lp.objective[eps] = -1;
  lp.upper[eps] = eps_cap;
  for (std::size_t j = 0; j < m; ++j) {
    lp.upper[mu0 + j] = 0;
    if (!mask[j]) lp.lower[mu0 + j] = 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& row = lp.add_row(Rel::Eq, cost[i]);
    for (std::size_t j = 0; j < m; ++j) row.coeffs[mu0 + j] = A.at(j, i);
  }
  for (std::size_t j : active) {
    auto& strict = lp.add_row(Rel::Le, 0);
    strict.coeffs[mu0 + j] = 1;
    strict.coeffs[eps] = 1;
  }
  return sys::eps_positive(lp);
}

namespace {

VerifyResult reject(std::string reason) {
  VerifyResult r;
  r.reason = std::move(reason);
  return r;
}

VerifyResult accept_from(const RatVector& sol, const sys::Vars& v, std::size_t k) {
  VerifyResult r;
  r.accepted = true;
  r.witness_x = RatVector(sol.begin() + static_cast<long>(v.x),
                          sol.begin() + static_cast<long>(v.x + k));
  return r;
}

VerifyResult run_feasibility(const GeneralLP& lp, const sys::Vars& v, std::size_t k,
                             const char* what) {
  auto out = check_feasible(lp);
  auto* fp = std::get_if<FeasiblePoint>(&out);
  if (fp == nullptr) return reject(std::string(what) + " system is infeasible");
  return accept_from(fp->point, v, k);
}

VerifyResult run_eps(const GeneralLP& lp, const sys::Vars& v, std::size_t k,
                     const char* what) {
  RatVector sol;
  if (!sys::eps_positive(lp, &sol))
    return reject(std::string(what) + " strictness margin is not positive");
  return accept_from(sol, v, k);
}

VerifyResult verify_singleton(const Instance& inst, const SingletonTarget& tgt,
                              Scenario scenario, const ActiveSetCertificate& cert,
                              const SolveOptions& opts) {
  const RatVector& ybar = tgt.ybar;
  sys::Vars v;
  if (inst.form == Form::Natural) {
    if (scenario == Scenario::Optimistic)
      return run_feasibility(sys::nat_singleton_active_opt(inst, ybar, cert.rows, v), v,
                             inst.k(), "active-set");
    if (rank(inst.A.select_rows(cert.rows)) != inst.n())
      return reject("active rows do not pin the target point");
    return run_eps(sys::nat_singleton_active_pess(inst, ybar, cert.rows, opts.eps_cap, v),
                   v, inst.k(), "active-set");
  }
  // standard form: the certificate lists variable indices claimed zero
  for (std::size_t i : cert.rows) {
    if (i >= inst.n() || ybar[i] != 0)
      return reject("claimed zero coordinate is not zero in the target");
  }
  if (!nonnegative(ybar)) return reject("target point is not nonnegative");
  if (scenario == Scenario::Optimistic)
    return run_feasibility(sys::std_singleton_opt(inst, ybar, v), v, inst.k(),
                           "complementarity");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (ybar[i] != 0) support.push_back(i);
  if (rank(inst.A.select_cols(support)) != support.size())
    return reject("support columns are dependent; the point cannot be uniquely optimal");
  return run_eps(sys::std_singleton_pess(inst, ybar, opts.eps_cap, v), v, inst.k(),
                 "complementarity");
}

VerifyResult verify_basis(const Instance& inst, const BasisTarget& tgt, Scenario scenario,
                          const BasisZeroSetCertificate& cert, const SolveOptions& opts) {
  std::vector<bool> in_basis(inst.n(), false);
  for (std::size_t i : tgt.cols) in_basis[i] = true;
  std::vector<std::size_t> nonbasis;
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (!in_basis[i]) nonbasis.push_back(i);

  auto zeroed = sys::index_mask(cert.zero_set, inst.n());
  sys::Vars v;
  if (scenario == Scenario::Optimistic) {
    for (std::size_t i : nonbasis)
      if (!zeroed[i]) return reject("zero set must cover the non-basic indices");
    return run_feasibility(sys::basis_opt_system(inst, cert.zero_set, v), v, inst.k(),
                           "basis");
  }
  std::vector<std::size_t> sorted = cert.zero_set;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != nonbasis) return reject("pessimistic zero set must equal the non-basis");
  auto nonessential = compute_nonessential_part(inst.A, tgt.cols);
  return run_eps(sys::basis_pess_eps(inst, nonbasis, nonessential, opts.eps_cap, v), v,
                 inst.k(), "basis");
}

VerifyResult verify_partial(const Instance& inst, const PartialFixTarget& tgt,
                            Scenario scenario, const BasisZeroSetCertificate& cert,
                            const SolveOptions& opts) {
  const std::size_t fixed = tgt.ybar.size();
  if (!nonnegative(tgt.ybar)) return reject("fixed prefix is not nonnegative");
  std::vector<std::size_t> guess;
  for (std::size_t i : cert.zero_set) {
    if (i >= inst.n()) return reject("zero-set index out of range");
    if (i < fixed) {
      if (tgt.ybar[i] != 0) return reject("claimed zero coordinate is fixed nonzero");
    } else {
      guess.push_back(i);
    }
  }
  sys::Vars v;
  if (scenario == Scenario::Optimistic)
    return run_feasibility(sys::partial_opt_system(inst, tgt.ybar, guess, v), v, inst.k(),
                           "partial-fix");
  std::vector<std::size_t> zero_set = guess;
  for (std::size_t i = 0; i < fixed; ++i)
    if (tgt.ybar[i] == 0) zero_set.push_back(i);
  if (!sys::partial_prefix_pinned(inst, fixed, zero_set))
    return reject("zero set does not pin the fixed coordinates");
  return run_eps(sys::partial_pess_eps(inst, tgt.ybar, guess, opts.eps_cap, v), v,
                 inst.k(), "partial-fix");
}

VerifyResult verify_polyhedron_opt(const Instance& inst, const PolyhedronTarget& tgt,
                                   const ActiveSetCertificate& cert) {
  sys::Vars v;
  return run_feasibility(sys::polyhedral_opt_system(inst, cert.rows, tgt.S, tgt.t, v), v,
                         inst.k(), "polyhedral");
}

VerifyResult verify_polyhedron_pess(const Instance& inst, const PolyhedronTarget& tgt,
                                    const SupportFamilyCertificate& cert,
                                    const SolveOptions& opts) {
  if (cert.supports.size() != tgt.S.rows())
    return reject("one support pair per target row is required");
  std::vector<sys::SlackPair> slacks;
  for (std::size_t h = 0; h < tgt.S.rows(); ++h) {
    auto sp = sys::solve_slack_pair(inst, cert.active, matrix_row(tgt.S, h),
                                    cert.supports[h].s1, cert.supports[h].s2);
    if (!sp) return reject("supports do not resolve to nonnegative slack vectors");
    slacks.push_back(std::move(*sp));
  }
  sys::Vars v;
  return run_eps(
      sys::polyhedral_pess_eps(inst, cert.active, slacks, tgt.t, opts.eps_cap, v), v,
      inst.k(), "polyhedral");
}

}  // namespace

VerifyResult verify_certificate(const Instance& inst, const TargetSet& target,
                                Scenario scenario, const Certificate& cert,
                                const SolveOptions& opts) {
  if (auto* tgt = std::get_if<SingletonTarget>(&target)) {
    auto* c = std::get_if<ActiveSetCertificate>(&cert);
    if (c == nullptr)
      throw IncompatibleCertificateError("singleton targets take active-set certificates");
    return verify_singleton(inst, *tgt, scenario, *c, opts);
  }
  if (auto* tgt = std::get_if<BasisTarget>(&target)) {
    auto* c = std::get_if<BasisZeroSetCertificate>(&cert);
    if (c == nullptr)
      throw IncompatibleCertificateError("basis targets take zero-set certificates");
    return verify_basis(inst, *tgt, scenario, *c, opts);
  }
  if (auto* tgt = std::get_if<PartialFixTarget>(&target)) {
    auto* c = std::get_if<BasisZeroSetCertificate>(&cert);
    if (c == nullptr)
      throw IncompatibleCertificateError("partial-fix targets take zero-set certificates");
    return verify_partial(inst, *tgt, scenario, *c, opts);
  }
  if (auto* tgt = std::get_if<PolyhedronTarget>(&target)) {
    if (inst.form != Form::Natural)
      throw ValidationError(ValidationError::Kind::FormMismatch,
                            "polyhedral targets require natural form");
    if (scenario == Scenario::Optimistic) {
      auto* c = std::get_if<ActiveSetCertificate>(&cert);
      if (c == nullptr)
        throw IncompatibleCertificateError(
            "optimistic polyhedral targets take active-set certificates");
      return verify_polyhedron_opt(inst, *tgt, *c);
    }
    auto* c = std::get_if<SupportFamilyCertificate>(&cert);
    if (c == nullptr)
      throw IncompatibleCertificateError(
          "pessimistic polyhedral targets take support-family certificates");
    return verify_polyhedron_pess(inst, *tgt, *c, opts);
  }
  const auto& tgt = std::get<OracleBackedTarget>(target);
  if (scenario == Scenario::Pessimistic)
    throw ValidationError(ValidationError::Kind::Other,
                          "no pessimistic verification exists for oracle-backed targets");
  auto* c = std::get_if<OracleCertificate>(&cert);
  if (c == nullptr)
    throw IncompatibleCertificateError("oracle targets take oracle certificates");
  auto oracle = make_oracle(tgt);
  auto res = verify_oracle_certificate(inst, *c, *oracle);
  VerifyResult out;
  out.accepted = res.accepted;
  out.witness_x = res.witness_x;
  if (!res.accepted) out.reason = "oracle certificate rejected";
  return out;
}

}  // namespace invlfp
