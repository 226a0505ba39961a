#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "invlfp/rational.hpp"

namespace invlfp {

/// Active constraint rows (0-based) of the optimal face at the witness
/// parameter. Used for singleton targets in natural form and for the
/// optimistic polyhedral search.
struct ActiveSetCertificate {
  std::vector<std::size_t> rows;
};

/// Pessimistic polyhedral certificate: active rows plus, per target row h,
/// the supports of the slack vectors expressing S_h as a conic combination
/// of constraint rows (s1 over all rows, s2 over active rows only).
struct SupportFamilyCertificate {
  std::vector<std::size_t> active;
  struct Supports {
    std::vector<std::size_t> s1, s2;
  };
  std::vector<Supports> supports;
};

/// Optimistic basis-target certificate: the variable indices forced to zero
/// (a superset of the non-basic indices; extra members cover degeneracy).
struct BasisZeroSetCertificate {
  std::vector<std::size_t> zero_set;
};

/// Oracle-target certificate: active rows plus a rounded candidate point and
/// the neighborhood radius it was built for.
struct OracleCertificate {
  std::vector<std::size_t> active;
  RatVector y_hat;
  Rational delta;
};

using Certificate = std::variant<ActiveSetCertificate, SupportFamilyCertificate,
                                 BasisZeroSetCertificate, OracleCertificate>;

}  // namespace invlfp
