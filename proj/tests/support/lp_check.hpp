#pragma once

// Independent validation of LP outcomes against the stated dual conventions.
// Used as an oracle in tests: a claimed optimum must carry duals proving
// optimality, a claimed infeasibility must carry a Farkas certificate.

#include <cstddef>

#include "invlfp/lp.hpp"

namespace invlfp::testing {

inline bool satisfies(const GeneralLP& lp, const RatVector& x) {
  if (x.size() != lp.num_vars) return false;
  for (const auto& row : lp.rows) {
    Rational lhs = dot(row.coeffs, x);
    if (row.rel == Rel::Le && lhs > row.rhs) return false;
    if (row.rel == Rel::Ge && lhs < row.rhs) return false;
    if (row.rel == Rel::Eq && lhs != row.rhs) return false;
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (lp.lower[j] && x[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
  }
  return true;
}

// Checks primal feasibility, dual sign/stationarity, and strong duality.
inline bool valid_optimal(const GeneralLP& lp, const LpOptimal& opt) {
  if (!satisfies(lp, opt.primal)) return false;
  if (dot(lp.objective, opt.primal) != opt.value) return false;
  Rational dual_value = 0;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const Rational& l = opt.dual_rows[i];
    if (lp.rows[i].rel == Rel::Le && l > 0) return false;
    if (lp.rows[i].rel == Rel::Ge && l < 0) return false;
    dual_value += l * lp.rows[i].rhs;
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (opt.dual_lower[j] < 0 || (!lp.lower[j] && opt.dual_lower[j] != 0)) return false;
    if (opt.dual_upper[j] > 0 || (!lp.upper[j] && opt.dual_upper[j] != 0)) return false;
    if (lp.lower[j]) dual_value += opt.dual_lower[j] * *lp.lower[j];
    if (lp.upper[j]) dual_value += opt.dual_upper[j] * *lp.upper[j];
    Rational stat = opt.dual_lower[j] + opt.dual_upper[j];
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
      stat += opt.dual_rows[i] * lp.rows[i].coeffs[j];
    if (stat != lp.objective[j]) return false;
  }
  return dual_value == opt.value;
}

// Checks the certificate proves infeasibility: signed multipliers combine
// the rows into 0 = (something positive).
inline bool valid_farkas(const GeneralLP& lp, const FarkasRay& ray) {
  Rational total = 0;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const Rational& l = ray.row_mult[i];
    if (lp.rows[i].rel == Rel::Le && l > 0) return false;
    if (lp.rows[i].rel == Rel::Ge && l < 0) return false;
    total += l * lp.rows[i].rhs;
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (ray.lb_mult[j] < 0 || (!lp.lower[j] && ray.lb_mult[j] != 0)) return false;
    if (ray.ub_mult[j] > 0 || (!lp.upper[j] && ray.ub_mult[j] != 0)) return false;
    if (lp.lower[j]) total += ray.lb_mult[j] * *lp.lower[j];
    if (lp.upper[j]) total += ray.ub_mult[j] * *lp.upper[j];
    Rational combo = ray.lb_mult[j] + ray.ub_mult[j];
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
      combo += ray.row_mult[i] * lp.rows[i].coeffs[j];
    if (combo != 0) return false;
  }
  return total > 0;
}

// Checks a claimed unbounded certificate: feasible point plus a recession
// direction that strictly improves the objective.
inline bool valid_unbounded(const GeneralLP& lp, const LpUnbounded& unb) {
  if (!satisfies(lp, unb.point)) return false;
  if (dot(lp.objective, unb.ray) >= 0) return false;
  for (const auto& row : lp.rows) {
    Rational d = dot(row.coeffs, unb.ray);
    if (row.rel == Rel::Le && d > 0) return false;
    if (row.rel == Rel::Ge && d < 0) return false;
    if (row.rel == Rel::Eq && d != 0) return false;
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (lp.lower[j] && unb.ray[j] < 0) return false;
    if (lp.upper[j] && unb.ray[j] > 0) return false;
  }
  return true;
}

}  // namespace invlfp::testing
