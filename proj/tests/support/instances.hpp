#pragma once

// Shared fixtures and an independent ground-truth oracle for the solver
// tests. The oracle enumerates basic points of the (bounded) feasible
// region directly from the linear algebra layer, bypassing the simplex
// code entirely, so it can arbitrate disagreements.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "invlfp/linalg.hpp"
#include "invlfp/model.hpp"

namespace invlfp::testing {

inline RatMatrix mat(std::size_t r, std::size_t c,
                     std::initializer_list<Rational> vals) {
  RatMatrix m(r, c);
  std::size_t idx = 0;
  for (const Rational& v : vals) m.at(idx / c, idx % c) = v, ++idx;
  return m;
}

inline ParamPolyhedron interval(const Rational& lo, const Rational& hi) {
  return {mat(2, 1, {1, -1}), {hi, -lo}};
}

// Standard form, n=2, m=1, k=1: y1+y2 = b with b(x) = 1, objective
// (x, -x) . y, parameter x in [-1, 1].
inline Instance make_i1() {
  Instance inst;
  inst.form = Form::Standard;
  inst.A = mat(1, 2, {1, 1});
  inst.B = mat(1, 1, {0});
  inst.b = {1};
  inst.C = mat(2, 1, {1, -1});
  inst.c = {0, 0};
  inst.X = interval(-1, 1);
  return inst;
}

// Natural form, n=1, m=2: y <= x, -y <= 0, objective -y, x in [0, 1].
inline Instance make_i2() {
  Instance inst;
  inst.form = Form::Natural;
  inst.A = mat(2, 1, {1, -1});
  inst.B = mat(2, 1, {1, 0});
  inst.b = {0, 0};
  inst.C = mat(1, 1, {0});
  inst.c = {-1};
  inst.X = interval(0, 1);
  return inst;
}

// Natural form with B = 0, n=1, m=2: y <= 1, -y <= 0, objective x*y,
// x in [-1, 1].
inline Instance make_i3() {
  Instance inst;
  inst.form = Form::Natural;
  inst.A = mat(2, 1, {1, -1});
  inst.B = mat(2, 1, {0, 0});
  inst.b = {1, 0};
  inst.C = mat(1, 1, {1});
  inst.c = {0};
  inst.X = interval(-1, 1);
  return inst;
}

// Deterministic 64-bit LCG for randomized cross-checks.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed * 2862933555777941757ull + 3037000493ull) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 16;
  }
  // Uniform integer in [lo, hi].
  long pick(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// One linear constraint of an enumeration system.
struct RefRow {
  RatVector coeffs;
  Rational rhs;
  bool eq = false;  // false: coeffs.y <= rhs
};

inline bool ref_satisfies(const std::vector<RefRow>& rows, const RatVector& y) {
  for (const auto& r : rows) {
    Rational lhs = dot(r.coeffs, y);
    if (r.eq ? lhs != r.rhs : lhs > r.rhs) return false;
  }
  return true;
}

// All basic feasible points: solutions of full-rank n-subsets of the rows
// (as equalities) that satisfy every constraint. For a nonempty bounded
// polyhedron this is exactly its vertex set.
inline std::vector<RatVector> ref_vertices(const std::vector<RefRow>& rows,
                                           std::size_t n) {
  std::vector<RatVector> out;
  std::vector<std::size_t> pick(n);
  const std::size_t m = rows.size();
  if (m < n) return out;
  // Iterate over all n-combinations of row indices.
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    RatMatrix sub(n, n);
    RatVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sub.at(i, j) = rows[pick[i]].coeffs[j];
      rhs[i] = rows[pick[i]].rhs;
    }
    auto sol = solve_unique(sub, rhs);
    if (sol.status == SolveStatus::Unique && ref_satisfies(rows, sol.solution))
      out.push_back(sol.solution);
    // Next combination.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Feasible region of LP_x as enumeration rows (natural: Ay <= Bx+b;
// standard: Ay = Bx+b, y >= 0).
inline std::vector<RefRow> ref_region(const Instance& inst, const RatVector& x) {
  std::vector<RefRow> rows;
  RatVector rhs = inst.B.mul(x);
  for (std::size_t j = 0; j < inst.m(); ++j) rhs[j] += inst.b[j];
  for (std::size_t j = 0; j < inst.m(); ++j) {
    RatVector coeffs(inst.n());
    for (std::size_t i = 0; i < inst.n(); ++i) coeffs[i] = inst.A.at(j, i);
    rows.push_back({coeffs, rhs[j], inst.form == Form::Standard});
  }
  if (inst.form == Form::Standard)
    for (std::size_t i = 0; i < inst.n(); ++i) {
      RatVector coeffs(inst.n());
      coeffs[i] = -1;
      rows.push_back({coeffs, Rational(0), false});
    }
  return rows;
}

inline RatVector ref_cost(const Instance& inst, const RatVector& x) {
  RatVector cost = inst.C.mul(x);
  for (std::size_t i = 0; i < inst.n(); ++i) cost[i] += inst.c[i];
  return cost;
}

// Vertices of the optimal face of LP_x. Valid only for bounded feasible
// regions (the fixtures and generated tests guarantee this). Empty result
// means LP_x is infeasible.
inline std::vector<RatVector> ref_optimal_vertices(const Instance& inst,
                                                   const RatVector& x) {
  auto region = ref_region(inst, x);
  auto verts = ref_vertices(region, inst.n());
  if (verts.empty()) return verts;
  RatVector cost = ref_cost(inst, x);
  Rational best = dot(cost, verts.front());
  for (const auto& v : verts) best = std::min(best, dot(cost, v));
  std::vector<RatVector> out;
  for (auto& v : verts)
    if (dot(cost, v) == best) out.push_back(std::move(v));
  return out;
}

// Ground truth for a singleton target at fixed x, again assuming a bounded
// feasible region: optimistic = ybar lies on the optimal face, pessimistic
// = the optimal face is exactly {ybar}.
inline bool ref_singleton_at(const Instance& inst, const RatVector& ybar,
                             Scenario scenario, const RatVector& x) {
  auto opt = ref_optimal_vertices(inst, x);
  if (opt.empty()) return false;
  if (scenario == Scenario::Pessimistic)
    return opt.size() == 1 && opt.front() == ybar;
  if (!ref_satisfies(ref_region(inst, x), ybar)) return false;
  return dot(ref_cost(inst, x), ybar) == dot(ref_cost(inst, x), opt.front());
}

}  // namespace invlfp::testing
