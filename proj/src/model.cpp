#include "invlfp/model.hpp"

#include <algorithm>

#include "invlfp/errors.hpp"

namespace invlfp {

namespace {

void require(bool ok, ValidationError::Kind kind, const std::string& msg) {
  if (!ok) throw ValidationError(kind, msg);
}

void check_index_set(const std::vector<std::size_t>& idx, std::size_t limit,
                     const std::string& what) {
  for (std::size_t i : idx)
    require(i < limit, ValidationError::Kind::DimensionMismatch, what + ": index out of range");
  require(std::is_sorted(idx.begin(), idx.end()) &&
              std::adjacent_find(idx.begin(), idx.end()) == idx.end(),
          ValidationError::Kind::Other, what + ": indices must be strictly increasing");
}

}  // namespace

void validate(const Instance& inst, const TargetSet& target) {
  const std::size_t n = inst.n(), m = inst.m(), k = inst.k();
  auto dim = ValidationError::Kind::DimensionMismatch;
  require(inst.A.rows() == m && inst.A.cols() == n, dim, "A must be m x n");
  require(inst.B.rows() == m && inst.B.cols() == k, dim, "B must be m x k");
  require(inst.C.rows() == n && inst.C.cols() == k, dim, "C must be n x k");
  require(inst.X.D.cols() == k && inst.X.D.rows() == inst.X.d.size(), dim,
          "X must be p x k with p bounds");

  if (const auto* s = std::get_if<SingletonTarget>(&target)) {
    require(s->ybar.size() == n, dim, "singleton target must have length n");
  } else if (const auto* bt = std::get_if<BasisTarget>(&target)) {
    require(inst.form == Form::Standard, ValidationError::Kind::FormMismatch,
            "basis target requires standard form");
    check_index_set(bt->cols, n, "basis");
    require(bt->cols.size() == m, dim, "basis must have exactly m columns");
    require(rank(inst.A.select_cols(bt->cols)) == m,
            ValidationError::Kind::SingularTargetBasis, "target basis columns are singular");
  } else if (const auto* p = std::get_if<PartialFixTarget>(&target)) {
    require(inst.form == Form::Standard, ValidationError::Kind::FormMismatch,
            "partial-fix target requires standard form");
    require(p->free_count <= n && p->ybar.size() + p->free_count == n, dim,
            "partial fix must cover exactly n - free coordinates");
  } else if (const auto* poly = std::get_if<PolyhedronTarget>(&target)) {
    require(poly->S.cols() == n && poly->S.rows() == poly->t.size(), dim,
            "target polyhedron must be r x n with r bounds");
  } else if (const auto* o = std::get_if<OracleBackedTarget>(&target)) {
    require(o->R > 0, ValidationError::Kind::Other, "oracle bounding radius must be positive");
    if (const auto* box = std::get_if<BoxSpec>(&o->backing)) {
      require(box->lo.size() == n && box->hi.size() == n, dim, "oracle box must have length n");
      for (std::size_t i = 0; i < n; ++i)
        require(box->lo[i] <= box->hi[i], ValidationError::Kind::Other, "oracle box is empty");
    } else if (const auto* ball = std::get_if<BallSpec>(&o->backing)) {
      require(ball->center.size() == n, dim, "oracle ball center must have length n");
      require(ball->radius >= 0, ValidationError::Kind::Other, "oracle ball radius negative");
    } else {
      const auto& pt = std::get<PolytopeSpec>(o->backing);
      require(pt.S.cols() == n && pt.S.rows() == pt.t.size(), dim,
              "oracle polytope must be r x n with r bounds");
    }
  }
}

Instance convert_standard_to_natural(const Instance& inst) {
  if (inst.form != Form::Standard)
    throw ValidationError(ValidationError::Kind::FormMismatch,
                          "convert_standard_to_natural requires standard form");
  const std::size_t n = inst.n(), m = inst.m(), k = inst.k();
  Instance out = inst;
  out.form = Form::Natural;
  out.A = RatMatrix(2 * m + n, n);
  out.B = RatMatrix(2 * m + n, k);
  out.b = RatVector(2 * m + n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.A.at(i, j) = inst.A.at(i, j);
      out.A.at(m + i, j) = -inst.A.at(i, j);
    }
    for (std::size_t j = 0; j < k; ++j) {
      out.B.at(i, j) = inst.B.at(i, j);
      out.B.at(m + i, j) = -inst.B.at(i, j);
    }
    out.b[i] = inst.b[i];
    out.b[m + i] = -inst.b[i];
  }
  for (std::size_t j = 0; j < n; ++j) out.A.at(2 * m + j, j) = -1;
  return out;
}

}  // namespace invlfp
