#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "invlfp/certificate.hpp"
#include "invlfp/linalg.hpp"
#include "invlfp/rational.hpp"

namespace invlfp {

/// Natural:  min (Cx+c)^T y  s.t.  Ay <= Bx+b,  y free.
/// Standard: min (Cx+c)^T y  s.t.  Ay  = Bx+b,  y >= 0.
enum class Form { Natural, Standard };

enum class Scenario { Optimistic, Pessimistic };

/// Parameter set X = {x : Dx <= d}.
struct ParamPolyhedron {
  RatMatrix D;
  RatVector d;
};

struct SingletonTarget {
  RatVector ybar;
};

/// Index set of m columns of A forming a regular basis (0-based).
struct BasisTarget {
  std::vector<std::size_t> cols;
};

/// Fixes the first n - free_count coordinates to ybar; the trailing
/// free_count coordinates are unconstrained.
struct PartialFixTarget {
  RatVector ybar;
  std::size_t free_count = 0;
};

/// Y = {y : Sy <= t}.
struct PolyhedronTarget {
  RatMatrix S;
  RatVector t;
};

// Exact backing sets for oracle-based targets.
struct BoxSpec {
  RatVector lo, hi;
};
struct BallSpec {
  RatVector center;
  Rational radius;
};
struct PolytopeSpec {
  RatMatrix S;
  RatVector t;
};
using OracleSpec = std::variant<BoxSpec, BallSpec, PolytopeSpec>;

/// Target known only through a weak outer membership oracle; R bounds Y.
struct OracleBackedTarget {
  OracleSpec backing;
  Rational R;
};

using TargetSet = std::variant<SingletonTarget, BasisTarget, PartialFixTarget,
                               PolyhedronTarget, OracleBackedTarget>;

/// Parametric LP: objective (Cx+c)^T y, constraints Ay {<=,=} Bx+b per form,
/// parameter restricted to X.
struct Instance {
  Form form = Form::Natural;
  RatMatrix A;  // m x n
  RatMatrix B;  // m x k
  RatVector b;  // m
  RatMatrix C;  // n x k
  RatVector c;  // n
  ParamPolyhedron X;

  std::size_t n() const { return c.size(); }
  std::size_t m() const { return b.size(); }
  std::size_t k() const { return B.cols(); }
};

struct Decision {
  bool yes = false;
  Scenario scenario = Scenario::Optimistic;
  std::optional<RatVector> witness_x;  // present iff yes
  std::optional<Certificate> certificate;
};

/// Checks all dimensional and structural invariants; throws ValidationError
/// naming the violated one.
void validate(const Instance& inst, const TargetSet& target);

/// Rewrites Ay = Bx+b, y >= 0 as the natural-form rows (A; -A; -I) with
/// right-hand sides (Bx+b; -Bx-b; 0). Feasible and optimal sets of LP_x are
/// pointwise identical for every x.
Instance convert_standard_to_natural(const Instance& inst);

}  // namespace invlfp
