#pragma once

// Helpers for working with LP_x, the inner program with the parameter pinned.

#include <optional>

#include "invlfp/lp.hpp"
#include "invlfp/model.hpp"

namespace invlfp::fx {

/// Objective coefficients Cx + c.
RatVector cost_at(const Instance& inst, const RatVector& x);

/// Right-hand side Bx + b.
RatVector rhs_at(const Instance& inst, const RatVector& x);

/// LP_x over variables y only (natural: Ay <= Bx+b, y free; standard:
/// Ay = Bx+b, y >= 0), with objective (Cx+c)^T y.
GeneralLP lp_x(const Instance& inst, const RatVector& x);

/// LP_x restricted to its optimal face (objective pinned to vstar), with a
/// zero objective, ready for face probing.
GeneralLP face_lp(const Instance& inst, const RatVector& x, const Rational& vstar);

/// max s^T y over the given (nonempty) face LP; nullopt when unbounded.
std::optional<Rational> face_max(const GeneralLP& face, const RatVector& s);

/// True iff Dx <= d.
bool in_domain(const ParamPolyhedron& X, const RatVector& x);

}  // namespace invlfp::fx
