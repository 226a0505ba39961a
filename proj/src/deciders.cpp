#include "invlfp/deciders.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "invlfp/errors.hpp"
#include "systems.hpp"

namespace invlfp {

namespace {

RatVector x_block(const RatVector& sol, const sys::Vars& v, std::size_t k) {
  return RatVector(sol.begin() + static_cast<long>(v.x),
                   sol.begin() + static_cast<long>(v.x + k));
}

Decision no(Scenario s) { return Decision{false, s, std::nullopt, std::nullopt}; }

Decision yes(Scenario s, RatVector x, Certificate cert) {
  return Decision{true, s, std::move(x), std::move(cert)};
}

std::vector<std::size_t> zero_coords(const RatVector& ybar) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ybar.size(); ++i)
    if (ybar[i] == 0) out.push_back(i);
  return out;
}

bool nonnegative(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= 0; });
}

}  // namespace

Decision decide_singleton_standard(const Instance& inst, const RatVector& ybar,
                                   Scenario scenario, const SolveOptions& opts) {
  if (inst.form != Form::Standard)
    throw ValidationError(ValidationError::Kind::FormMismatch,
                          "standard-form decider on natural-form instance");
  if (ybar.size() != inst.n()) throw DimensionError("target point has wrong length");
  if (!nonnegative(ybar)) return no(scenario);

  sys::Vars v;
  if (scenario == Scenario::Optimistic) {
    GeneralLP lp = sys::std_singleton_opt(inst, ybar, v);
    auto out = check_feasible(lp);
    auto* fp = std::get_if<FeasiblePoint>(&out);
    if (fp == nullptr) return no(scenario);
    return yes(scenario, x_block(fp->point, v, inst.k()),
               ActiveSetCertificate{zero_coords(ybar)});
  }

  // Every optimal solution can equal ybar only if the columns of its support
  // are independent; otherwise the optimal face contains a segment through it.
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (ybar[i] != 0) support.push_back(i);
  if (rank(inst.A.select_cols(support)) != support.size()) return no(scenario);

  GeneralLP lp = sys::std_singleton_pess(inst, ybar, opts.eps_cap, v);
  RatVector sol;
  if (!sys::eps_positive(lp, &sol)) return no(scenario);
  return yes(scenario, x_block(sol, v, inst.k()), ActiveSetCertificate{zero_coords(ybar)});
}

Decision decide_singleton_natural_of(const Instance& inst, const RatVector& ybar,
                                     Scenario scenario, const SolveOptions& opts) {
  if (inst.form != Form::Natural)
    throw ValidationError(ValidationError::Kind::FormMismatch,
                          "natural-form decider on standard-form instance");
  for (std::size_t j = 0; j < inst.B.rows(); ++j)
    for (std::size_t t = 0; t < inst.B.cols(); ++t)
      if (inst.B.at(j, t) != 0)
        throw ValidationError(ValidationError::Kind::Other,
                              "objective-only decider requires B = 0");
  if (ybar.size() != inst.n()) throw DimensionError("target point has wrong length");

  RatVector a_ybar = inst.A.mul(ybar);
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < inst.m(); ++j) {
    if (a_ybar[j] > inst.b[j]) return no(scenario);  // target not feasible
    if (a_ybar[j] == inst.b[j]) active.push_back(j);
  }

  sys::Vars v;
  if (scenario == Scenario::Optimistic) {
    GeneralLP lp = sys::nat_of_singleton_opt(inst, ybar, v);
    auto out = check_feasible(lp);
    auto* fp = std::get_if<FeasiblePoint>(&out);
    if (fp == nullptr) return no(scenario);
    return yes(scenario, x_block(fp->point, v, inst.k()), ActiveSetCertificate{active});
  }

  // Unique optimality needs the active rows to pin y down completely.
  if (rank(inst.A.select_rows(active)) != inst.n()) return no(scenario);
  GeneralLP lp = sys::nat_of_singleton_pess(inst, ybar, active, opts.eps_cap, v);
  RatVector sol;
  if (!sys::eps_positive(lp, &sol)) return no(scenario);
  return yes(scenario, x_block(sol, v, inst.k()), ActiveSetCertificate{active});
}

std::vector<std::size_t> compute_nonessential_part(const RatMatrix& A,
                                                   const std::vector<std::size_t>& basis) {
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::size_t> out;
  for (std::size_t i : basis) {
    std::vector<std::size_t> keep;
    keep.reserve(n - 1);
    for (std::size_t jcol = 0; jcol < n; ++jcol)
      if (jcol != i) keep.push_back(jcol);
    if (rank(A.select_cols(keep)) == m) out.push_back(i);
  }
  return out;
}

Decision decide_basis_pessimistic(const Instance& inst, const BasisTarget& target,
                                  const SolveOptions& opts) {
  if (inst.form != Form::Standard)
    throw ValidationError(ValidationError::Kind::FormMismatch,
                          "basis target requires standard form");
  if (target.cols.size() != inst.m() || rank(inst.A.select_cols(target.cols)) != inst.m())
    throw InvalidBasisError("target columns do not form a basis of A");
  std::vector<bool> in_basis(inst.n(), false);
  for (std::size_t i : target.cols) in_basis[i] = true;
  std::vector<std::size_t> nonbasis;
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (!in_basis[i]) nonbasis.push_back(i);

  auto nonessential = compute_nonessential_part(inst.A, target.cols);
  sys::Vars v;
  GeneralLP lp = sys::basis_pess_eps(inst, nonbasis, nonessential, opts.eps_cap, v);
  RatVector sol;
  if (!sys::eps_positive(lp, &sol)) return no(Scenario::Pessimistic);
  return yes(Scenario::Pessimistic, x_block(sol, v, inst.k()),
             BasisZeroSetCertificate{nonbasis});
}

Decision decide_partial_standard(const Instance& inst, const PartialFixTarget& target,
                                 Scenario scenario, const SolveOptions& opts) {
  if (inst.form != Form::Standard)
    throw ValidationError(ValidationError::Kind::FormMismatch,
                          "partial-fix target requires standard form");
  const RatVector& ybar = target.ybar;
  const std::size_t fixed = ybar.size(), ell = target.free_count, n = inst.n();
  if (fixed + ell != n) throw DimensionError("fixed prefix plus free tail must cover y");
  if (!nonnegative(ybar)) return no(scenario);

  std::vector<std::size_t> fixed_zeros = zero_coords(ybar);  // all lie in the prefix

  if (ell >= 63) throw SizeGuardError("too many free coordinates to enumerate");
  std::vector<std::uint64_t> order(std::uint64_t(1) << ell);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  std::size_t solves = 0;
  for (std::uint64_t mask : order) {
    if (++solves > opts.budget) throw SizeGuardError("LP solve budget exhausted");
    std::vector<std::size_t> guess;
    for (std::size_t p = 0; p < ell; ++p)
      if (mask >> p & 1) guess.push_back(fixed + p);

    std::vector<std::size_t> zero_set = fixed_zeros;
    zero_set.insert(zero_set.end(), guess.begin(), guess.end());

    sys::Vars v;
    if (scenario == Scenario::Optimistic) {
      GeneralLP lp = sys::partial_opt_system(inst, ybar, guess, v);
      auto out = check_feasible(lp);
      auto* fp = std::get_if<FeasiblePoint>(&out);
      if (fp == nullptr) continue;
      return yes(scenario, x_block(fp->point, v, inst.k()),
                 BasisZeroSetCertificate{zero_set});
    }

    // The fixed coordinates must be determined by A together with the zero
    // set, or the optimal face cannot consist of points matching the prefix.
    if (!sys::partial_prefix_pinned(inst, fixed, zero_set)) continue;

    GeneralLP lp = sys::partial_pess_eps(inst, ybar, guess, opts.eps_cap, v);
    RatVector sol;
    if (!sys::eps_positive(lp, &sol)) continue;
    return yes(scenario, x_block(sol, v, inst.k()), BasisZeroSetCertificate{zero_set});
  }
  return no(scenario);
}

}  // namespace invlfp
