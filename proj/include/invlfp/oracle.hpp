#pragma once

// Weak outer membership oracles over exact backing sets, plus the optimistic
// verification procedure for oracle-backed targets. S(Y,eps) is the Euclidean
// eps-neighborhood of Y. No pessimistic verifier exists for oracle targets;
// that problem is undecidable through a membership oracle alone.

#include <memory>
#include <optional>

#include "invlfp/certificate.hpp"
#include "invlfp/model.hpp"

namespace invlfp {

enum class OuterAnswer { NotInOuter, InWiderOuter };

/// NotInOuter may be answered only if y is outside S(Y,delta); InWiderOuter
/// only if y lies in S(Y,2*delta). The concrete oracles below answer exactly
/// at threshold delta, which satisfies both obligations.
class WeakOuterMembershipOracle {
 public:
  virtual ~WeakOuterMembershipOracle() = default;
  virtual OuterAnswer query(const RatVector& y, const Rational& delta) const = 0;
  virtual Rational bounding_radius() const = 0;
};

/// Exact squared Euclidean distance from y to {z : Sz <= t}, by enumerating
/// row subsets as equality candidates and projecting. Throws EmptySetError if
/// the polytope is empty and SizeGuardError past `subset_budget` candidates.
Rational polytope_distance_sq(const RatMatrix& S, const RatVector& t, const RatVector& y,
                              std::size_t subset_budget = std::size_t(1) << 20);

/// Squared distance to an axis-aligned box.
Rational box_distance_sq(const BoxSpec& box, const RatVector& y);

std::unique_ptr<WeakOuterMembershipOracle> make_oracle(const OracleBackedTarget& target);

struct OracleVerifyResult {
  bool accepted = false;
  std::optional<RatVector> witness_x;
};

/// Accepts iff the oracle places y_hat within S(Y,delta/2) and the optimistic
/// active-set system with the per-coordinate box |y_i - y_hat_i| <= rho,
/// rho = delta / (2*ceil(sqrt(n))), is feasible. Accept implies the instance
/// with target S(Y,delta) is an optimistic yes-instance.
OracleVerifyResult verify_oracle_certificate(const Instance& inst,
                                             const OracleCertificate& cert,
                                             const WeakOuterMembershipOracle& oracle);

}  // namespace invlfp
