#pragma once

#include <stdexcept>
#include <string>

namespace invlfp {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Semantic validation failure; `kind` names the violated invariant.
struct ValidationError : Error {
  enum class Kind { DimensionMismatch, SingularTargetBasis, FormMismatch, Other };
  Kind kind;
  ValidationError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

struct InvalidBasisError : Error {
  explicit InvalidBasisError(const std::string& msg) : Error(msg) {}
};

/// Raised when an exponential search exceeds its candidate-system budget.
struct SizeGuardError : Error {
  explicit SizeGuardError(const std::string& msg) : Error(msg) {}
};

struct XViolationError : Error {
  explicit XViolationError(const std::string& msg) : Error(msg) {}
};

struct IncompatibleCertificateError : Error {
  explicit IncompatibleCertificateError(const std::string& msg) : Error(msg) {}
};

struct EmptySetError : Error {
  explicit EmptySetError(const std::string& msg) : Error(msg) {}
};

struct EmptyFaceError : Error {
  explicit EmptyFaceError(const std::string& msg) : Error(msg) {}
};

}  // namespace invlfp
