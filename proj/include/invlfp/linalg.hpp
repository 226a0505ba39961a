#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invlfp/rational.hpp"

namespace invlfp {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;

  /// Row/column selection by 0-based index list; order is preserved.
  RatMatrix select_rows(const std::vector<std::size_t>& idx) const;
  RatMatrix select_cols(const std::vector<std::size_t>& idx) const;

  RatMatrix transpose() const;
  RatVector mul(const RatVector& v) const;

  void append_row(const RatVector& r);

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank over the rationals (Gaussian elimination).
std::size_t rank(const RatMatrix& m);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveStatus status;
  RatVector solution;  // valid iff status == Unique
};

/// Solves M x = rhs where columns flagged in `forced_zero` are pinned to 0.
/// Unique means the constrained system has exactly one solution; otherwise
/// the result distinguishes inconsistent from underdetermined.
SolveResult solve_unique(const RatMatrix& m, const RatVector& rhs,
                         const std::vector<bool>& forced_zero = {});

struct AffineSolveResult {
  SolveStatus status;
  RatMatrix solution;  // n x rhs.cols(), valid iff Unique
};

/// solve_unique with a matrix right-hand side (one solve per column).
AffineSolveResult solve_unique_multi(const RatMatrix& m, const RatMatrix& rhs,
                                     const std::vector<bool>& forced_zero = {});

/// Any nonzero vector z with M z = 0, or nullopt if the kernel is trivial.
std::optional<RatVector> null_vector(const RatMatrix& m);

}  // namespace invlfp
