#include "fixed_x.hpp"

#include "invlfp/errors.hpp"

namespace invlfp::fx {

RatVector cost_at(const Instance& inst, const RatVector& x) {
  RatVector cost = inst.c;
  for (std::size_t i = 0; i < inst.n(); ++i)
    for (std::size_t t = 0; t < inst.k(); ++t) cost[i] += inst.C.at(i, t) * x[t];
  return cost;
}

RatVector rhs_at(const Instance& inst, const RatVector& x) {
  RatVector rhs = inst.b;
  for (std::size_t j = 0; j < inst.m(); ++j)
    for (std::size_t t = 0; t < inst.k(); ++t) rhs[j] += inst.B.at(j, t) * x[t];
  return rhs;
}

GeneralLP lp_x(const Instance& inst, const RatVector& x) {
  if (x.size() != inst.k()) throw DimensionError("parameter vector has wrong length");
  GeneralLP lp;
  std::size_t y0 = lp.add_vars(inst.n());
  RatVector rhs = rhs_at(inst, x);
  Rel rel = inst.form == Form::Standard ? Rel::Eq : Rel::Le;
  for (std::size_t j = 0; j < inst.m(); ++j) {
    auto& row = lp.add_row(rel, rhs[j]);
    for (std::size_t i = 0; i < inst.n(); ++i) row.coeffs[y0 + i] = inst.A.at(j, i);
  }
  if (inst.form == Form::Standard)
    for (std::size_t i = 0; i < inst.n(); ++i) lp.lower[y0 + i] = 0;
  lp.objective = cost_at(inst, x);
  return lp;
}

GeneralLP face_lp(const Instance& inst, const RatVector& x, const Rational& vstar) {
  GeneralLP lp = lp_x(inst, x);
  auto& pin = lp.add_row(Rel::Eq, vstar);
  pin.coeffs = lp.objective;
  lp.objective.assign(lp.num_vars, Rational(0));
  return lp;
}

std::optional<Rational> face_max(const GeneralLP& face, const RatVector& s) {
  GeneralLP lp = face;
  for (std::size_t i = 0; i < s.size(); ++i) lp.objective[i] = -s[i];
  auto out = solve_lp(lp);
  if (auto* opt = std::get_if<LpOptimal>(&out)) return -opt->value;
  return std::nullopt;  // face is nonempty by construction, so: unbounded
}

bool in_domain(const ParamPolyhedron& X, const RatVector& x) {
  for (std::size_t p = 0; p < X.D.rows(); ++p) {
    Rational lhs = 0;
    for (std::size_t t = 0; t < X.D.cols(); ++t) lhs += X.D.at(p, t) * x[t];
    if (lhs > X.d[p]) return false;
  }
  return true;
}

}  // namespace invlfp::fx
