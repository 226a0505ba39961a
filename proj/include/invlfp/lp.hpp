#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "invlfp/linalg.hpp"
#include "invlfp/rational.hpp"

namespace invlfp {

enum class Rel { Le, Eq, Ge };

struct LinearConstraint {
  RatVector coeffs;
  Rel rel = Rel::Le;
  Rational rhs = 0;
};

/// Minimization LP in general form: rows may mix <=, =, >= and variables may
/// carry optional lower/upper bounds (absent bound = free side).
struct GeneralLP {
  std::size_t num_vars = 0;
  RatVector objective;
  std::vector<LinearConstraint> rows;
  std::vector<std::optional<Rational>> lower, upper;

  std::size_t add_var();
  std::size_t add_vars(std::size_t count);  // returns index of the first
  /// Appends a row with zeroed coefficients; caller fills coeffs.
  LinearConstraint& add_row(Rel rel, Rational rhs);
};

struct LpOptimal {
  Rational value;
  RatVector primal;
  /// Duals in original coordinates: lambda_i <= 0 for Le rows, >= 0 for Ge
  /// rows, free for Eq rows; sum_i lambda_i a_i + bound multipliers = c and
  /// value = sum_i lambda_i b_i + sum_j (lb_j*lambda_lb_j + ub_j*lambda_ub_j).
  RatVector dual_rows;
  RatVector dual_lower, dual_upper;  // >= 0 resp. <= 0; zero where bound absent
};

/// Infeasibility certificate: multipliers with lambda_i <= 0 on Le rows,
/// >= 0 on Ge rows, free on Eq rows (and lb_mult >= 0, ub_mult <= 0) such
/// that the combined constraint reads 0 = sum lambda_i a_i with
/// sum lambda_i b_i + sum lb_mult_j lb_j + sum ub_mult_j ub_j > 0.
struct FarkasRay {
  RatVector row_mult;
  RatVector lb_mult, ub_mult;
};

struct LpInfeasible {
  FarkasRay ray;
};

struct LpUnbounded {
  RatVector point;  // feasible
  RatVector ray;    // improving recession direction
};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

/// Exact two-phase primal simplex with Bland's pivot rule. Deterministic:
/// identical inputs produce identical outcomes.
LpOutcome solve_lp(const GeneralLP& lp);

struct FeasiblePoint {
  RatVector point;
};

using FeasibilityOutcome = std::variant<FeasiblePoint, LpInfeasible>;

/// Feasibility check (objective ignored).
FeasibilityOutcome check_feasible(const GeneralLP& lp);

bool is_optimal(const LpOutcome& o);
bool is_feasible(const FeasibilityOutcome& o);

}  // namespace invlfp
