#include "invlfp/linalg.hpp"

#include "invlfp/errors.hpp"

namespace invlfp {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionError("from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  RatVector out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

RatMatrix RatMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  RatMatrix out(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw DimensionError("select_rows: index out of range");
    for (std::size_t c = 0; c < cols_; ++c) out.at(i, c) = at(idx[i], c);
  }
  return out;
}

RatMatrix RatMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  RatMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= cols_) throw DimensionError("select_cols: index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out.at(r, i) = at(r, idx[i]);
  }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

RatVector RatMatrix::mul(const RatVector& v) const {
  if (v.size() != cols_) throw DimensionError("mul: dimension mismatch");
  RatVector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(r, c) != 0) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

void RatMatrix::append_row(const RatVector& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DimensionError("append_row: dimension mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

namespace {

// Forward elimination on an augmented grid. Returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<RatVector>& a, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < a[r].size(); ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  std::vector<RatVector> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a[r] = m.row(r);
  return eliminate(a, m.cols()).size();
}

AffineSolveResult solve_unique_multi(const RatMatrix& m, const RatMatrix& rhs,
                                     const std::vector<bool>& forced_zero) {
  if (rhs.rows() != m.rows()) throw DimensionError("solve_unique: rhs size mismatch");
  if (!forced_zero.empty() && forced_zero.size() != m.cols())
    throw DimensionError("solve_unique: forced_zero size mismatch");

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (forced_zero.empty() || !forced_zero[c]) free_cols.push_back(c);

  std::size_t k = rhs.cols();
  std::vector<RatVector> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    a[r].resize(free_cols.size() + k);
    for (std::size_t j = 0; j < free_cols.size(); ++j) a[r][j] = m.at(r, free_cols[j]);
    for (std::size_t j = 0; j < k; ++j) a[r][free_cols.size() + j] = rhs.at(r, j);
  }
  auto pivots = eliminate(a, free_cols.size());
  // consistency: a zero row in the coefficient part must have zero rhs
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    for (std::size_t j = 0; j < k; ++j)
      if (a[r][free_cols.size() + j] != 0) return {SolveStatus::Inconsistent, {}};
  if (pivots.size() < free_cols.size()) return {SolveStatus::Underdetermined, {}};

  RatMatrix sol(m.cols(), k);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) sol.at(free_cols[pivots[r]], j) = a[r][free_cols.size() + j];
  return {SolveStatus::Unique, sol};
}

std::optional<RatVector> null_vector(const RatMatrix& m) {
  std::vector<RatVector> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a[r] = m.row(r);
  auto pivots = eliminate(a, m.cols());
  if (pivots.size() == m.cols()) return std::nullopt;
  // pick the first non-pivot column as the free variable
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  RatVector z(m.cols(), Rational(0));
  z[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = -a[r][free_col];
  return z;
}

SolveResult solve_unique(const RatMatrix& m, const RatVector& rhs,
                         const std::vector<bool>& forced_zero) {
  RatMatrix r(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) r.at(i, 0) = rhs[i];
  auto res = solve_unique_multi(m, r, forced_zero);
  if (res.status != SolveStatus::Unique) return {res.status, {}};
  return {SolveStatus::Unique, res.solution.col(0)};
}

}  // namespace invlfp
