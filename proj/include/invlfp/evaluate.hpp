#pragma once

// Fixed-parameter evaluation and certificate verification.

#include <string>

#include "invlfp/certificate.hpp"
#include "invlfp/deciders.hpp"
#include "invlfp/model.hpp"

namespace invlfp {

/// Decides the scenario condition at a pinned parameter: solves LP_x exactly
/// and checks argmin ∩ Y != {} (optimistic) or argmin != {} and argmin ⊆ Y
/// (pessimistic). Throws XViolationError if x violates Dx <= d.
bool evaluate_fixed_parameter(const Instance& inst, const TargetSet& target,
                              Scenario scenario, const RatVector& x,
                              const SolveOptions& opts = {});

/// For min cost^T y over {Ay <= rhs}: true iff the face {rows in `active`
/// tight} is exactly the optimal set, witnessed by a dual mu with mu_j < 0
/// precisely on `active`. Throws EmptyFaceError if the face is empty.
bool check_unique_optimal_face(const RatMatrix& A, const RatVector& rhs,
                               const RatVector& cost,
                               const std::vector<std::size_t>& active,
                               const Rational& eps_cap = 1);

struct VerifyResult {
  bool accepted = false;
  std::optional<RatVector> witness_x;  // present iff accepted
  std::string reason;                  // set iff rejected
};

/// Polynomial-time check of a claimed yes-certificate. Throws
/// IncompatibleCertificateError when the certificate variant cannot belong to
/// the target/scenario at all; content-level mismatches merely Reject.
VerifyResult verify_certificate(const Instance& inst, const TargetSet& target,
                                Scenario scenario, const Certificate& cert,
                                const SolveOptions& opts = {});

}  // namespace invlfp
