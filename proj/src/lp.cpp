#include "invlfp/lp.hpp"

#include <algorithm>
#include <cassert>

#include "invlfp/errors.hpp"

namespace invlfp {

std::size_t GeneralLP::add_var() { return add_vars(1); }

std::size_t GeneralLP::add_vars(std::size_t count) {
  std::size_t first = num_vars;
  num_vars += count;
  objective.resize(num_vars, Rational(0));
  lower.resize(num_vars);
  upper.resize(num_vars);
  for (auto& row : rows) row.coeffs.resize(num_vars, Rational(0));
  return first;
}

LinearConstraint& GeneralLP::add_row(Rel rel, Rational rhs) {
  rows.push_back(LinearConstraint{RatVector(num_vars, Rational(0)), rel, std::move(rhs)});
  return rows.back();
}

bool is_optimal(const LpOutcome& o) { return std::holds_alternative<LpOptimal>(o); }
bool is_feasible(const FeasibilityOutcome& o) { return std::holds_alternative<FeasiblePoint>(o); }

namespace {

// One equality row of the internal standard form, remembering where it came
// from so duals can be mapped back to the caller's coordinates.
enum class RowOrigin { Constraint, LowerBound, UpperBound };

struct EqRow {
  RowOrigin origin;
  std::size_t index;  // constraint index or variable index
  int sign = 1;       // -1 if the row was negated to make rhs nonnegative
};

struct Tableau {
  // equality system: cols = 2*num_vars split columns, then slack columns
  std::vector<RatVector> a;  // per row, length num_real_cols
  RatVector b;
  std::vector<EqRow> meta;
  std::size_t num_real_cols = 0;
};

class Simplex {
 public:
  explicit Simplex(const GeneralLP& lp) : lp_(lp) { build(); }

  LpOutcome run();

 private:
  const GeneralLP& lp_;
  Tableau t_;
  // working tableau: rows over columns [0, ncols); artificial columns appended
  std::vector<RatVector> tab_;
  RatVector rhs_;
  std::vector<std::size_t> basis_;       // column index per row
  std::vector<EqRow> meta_;              // per surviving row
  std::vector<RatVector> orig_cols_a_;   // copy of equality matrix rows (pre-pivot)
  RatVector orig_b_;
  std::size_t ncols_ = 0;  // real columns
  std::size_t nart_ = 0;

  void build();
  void pivot(std::size_t row, std::size_t col);
  // Runs Bland simplex for costs `cost` over columns [0, limit).
  // Returns false if unbounded (entering column stored in *unb_col).
  bool iterate(const RatVector& cost, std::size_t limit, std::size_t* unb_col);
  RatVector current_eq_point() const;
  RatVector eq_to_original(const RatVector& w) const;
  LpOutcome extract_infeasible(const RatVector& phase1_cost);
  LpOutcome extract_unbounded(std::size_t enter);
  LpOutcome extract_optimal();
};

void Simplex::build() {
  const std::size_t n = lp_.num_vars;
  for (const auto& row : lp_.rows)
    if (row.coeffs.size() != n) throw DimensionError("solve_lp: row width mismatch");

  // columns: v_j -> w_{2j} - w_{2j+1}; slacks appended per inequality row
  std::vector<std::pair<EqRow, const LinearConstraint*>> eq_rows;
  std::vector<LinearConstraint> bound_rows;
  for (const auto& row : lp_.rows)
    eq_rows.push_back({EqRow{RowOrigin::Constraint, eq_rows.size(), 1}, &row});
  for (std::size_t j = 0; j < n; ++j) {
    if (lp_.lower[j]) {
      LinearConstraint c{RatVector(n, Rational(0)), Rel::Ge, *lp_.lower[j]};
      c.coeffs[j] = 1;
      bound_rows.push_back(std::move(c));
      eq_rows.push_back({EqRow{RowOrigin::LowerBound, j, 1}, nullptr});
    }
    if (lp_.upper[j]) {
      LinearConstraint c{RatVector(n, Rational(0)), Rel::Le, *lp_.upper[j]};
      c.coeffs[j] = 1;
      bound_rows.push_back(std::move(c));
      eq_rows.push_back({EqRow{RowOrigin::UpperBound, j, 1}, nullptr});
    }
  }
  std::size_t bi = 0;
  for (auto& [meta, ptr] : eq_rows)
    if (!ptr) ptr = &bound_rows[bi++];

  std::size_t num_slacks = 0;
  for (auto& [meta, row] : eq_rows)
    if (row->rel != Rel::Eq) ++num_slacks;
  ncols_ = 2 * n + num_slacks;

  std::size_t slack = 2 * n;
  for (auto& [meta, row] : eq_rows) {
    RatVector a(ncols_, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      a[2 * j] = row->coeffs[j];
      a[2 * j + 1] = -row->coeffs[j];
    }
    if (row->rel == Rel::Le) a[slack++] = 1;
    if (row->rel == Rel::Ge) a[slack++] = -1;
    Rational b = row->rhs;
    EqRow m = meta;
    if (b < 0) {
      for (auto& e : a) e = -e;
      b = -b;
      m.sign = -1;
    }
    tab_.push_back(a);
    rhs_.push_back(b);
    meta_.push_back(m);
    orig_cols_a_.push_back(a);
    orig_b_.push_back(b);
  }
}


void Simplex::pivot(std::size_t row, std::size_t col) {
  RatVector& pr = tab_[row];
  Rational inv = 1 / pr[col];
  if (inv != 1)
    for (auto& e : pr) e *= inv;
  rhs_[row] *= inv;
  for (std::size_t i = 0; i < tab_.size(); ++i) {
    if (i == row) continue;
    Rational f = tab_[i][col];
    if (f == 0) continue;
    RatVector& ri = tab_[i];
    for (std::size_t j = 0; j < ri.size(); ++j)
      if (pr[j] != 0) ri[j] -= f * pr[j];
    rhs_[i] -= f * rhs_[row];
  }
  basis_[row] = col;
}

bool Simplex::iterate(const RatVector& cost, std::size_t limit, std::size_t* unb_col) {
  for (;;) {
    // reduced costs z_j = c_j - c_B^T tab[:,j]; Bland: smallest negative index
    RatVector cb(tab_.size());
    for (std::size_t i = 0; i < tab_.size(); ++i) cb[i] = cost[basis_[i]];
    std::size_t enter = limit;
    for (std::size_t j = 0; j < limit; ++j) {
      Rational z = cost[j];
      for (std::size_t i = 0; i < tab_.size(); ++i)
        if (tab_[i][j] != 0 && cb[i] != 0) z -= cb[i] * tab_[i][j];
      if (z < 0) {
        enter = j;
        break;
      }
    }
    if (enter == limit) return true;  // optimal
    // ratio test, ties broken by smallest basic variable index
    std::size_t leave = tab_.size();
    Rational best;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (tab_[i][enter] <= 0) continue;
      Rational ratio = rhs_[i] / tab_[i][enter];
      if (leave == tab_.size() || ratio < best ||
          (ratio == best && basis_[i] < basis_[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == tab_.size()) {
      *unb_col = enter;
      return false;
    }
    pivot(leave, enter);
  }
}

RatVector Simplex::current_eq_point() const {
  RatVector w(ncols_ + nart_, Rational(0));
  for (std::size_t i = 0; i < tab_.size(); ++i) w[basis_[i]] = rhs_[i];
  return w;
}

RatVector Simplex::eq_to_original(const RatVector& w) const {
  RatVector v(lp_.num_vars);
  for (std::size_t j = 0; j < lp_.num_vars; ++j) v[j] = w[2 * j] - w[2 * j + 1];
  return v;
}

LpOutcome Simplex::extract_infeasible(const RatVector& phase1_cost) {
  // y^T = c_B^T B^{-1}; artificial columns of the tableau hold B^{-1}.
  RatVector y(tab_.size(), Rational(0));
  for (std::size_t r = 0; r < tab_.size(); ++r) {
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      const Rational& c = phase1_cost[basis_[i]];
      if (c != 0 && tab_[i][ncols_ + r] != 0) y[r] += c * tab_[i][ncols_ + r];
    }
  }
  FarkasRay ray;
  ray.row_mult.assign(lp_.rows.size(), Rational(0));
  ray.lb_mult.assign(lp_.num_vars, Rational(0));
  ray.ub_mult.assign(lp_.num_vars, Rational(0));
  for (std::size_t r = 0; r < tab_.size(); ++r) {
    Rational lambda = Rational(meta_[r].sign) * y[r];
    switch (meta_[r].origin) {
      case RowOrigin::Constraint: ray.row_mult[meta_[r].index] = lambda; break;
      case RowOrigin::LowerBound: ray.lb_mult[meta_[r].index] = lambda; break;
      case RowOrigin::UpperBound: ray.ub_mult[meta_[r].index] = lambda; break;
    }
  }
  return LpInfeasible{std::move(ray)};
}

LpOutcome Simplex::extract_unbounded(std::size_t enter) {
  RatVector w = current_eq_point();
  RatVector d(ncols_, Rational(0));
  d[enter] = 1;
  for (std::size_t i = 0; i < tab_.size(); ++i)
    if (basis_[i] < ncols_) d[basis_[i]] = -tab_[i][enter];
  return LpUnbounded{eq_to_original(w), eq_to_original(d)};
}

LpOutcome Simplex::extract_optimal() {
  RatVector w = current_eq_point();
  RatVector v = eq_to_original(w);
  Rational value = 0;
  for (std::size_t j = 0; j < lp_.num_vars; ++j)
    if (lp_.objective[j] != 0) value += lp_.objective[j] * v[j];

  // duals: solve (A_B)^T y = c_B over the surviving rows
  const std::size_t r = tab_.size();
  RatMatrix bt(r, r);
  RatVector cb(r, Rational(0));
  auto col_cost = [&](std::size_t col) -> Rational {
    if (col >= 2 * lp_.num_vars) return Rational(0);
    std::size_t j = col / 2;
    return (col % 2 == 0) ? lp_.objective[j] : -lp_.objective[j];
  };
  for (std::size_t i = 0; i < r; ++i) {
    // A basic artificial (redundant row at level zero) contributes its unit
    // column; it pins the dual of its own row to zero.
    for (std::size_t k = 0; k < r; ++k)
      bt.at(i, k) = basis_[i] < ncols_ ? orig_cols_a_[k][basis_[i]]
                                       : Rational(k == basis_[i] - ncols_ ? 1 : 0);
    cb[i] = col_cost(basis_[i]);
  }
  auto sol = solve_unique(bt, cb);
  assert(sol.status == SolveStatus::Unique);
  LpOptimal out;
  out.value = value;
  out.primal = std::move(v);
  out.dual_rows.assign(lp_.rows.size(), Rational(0));
  out.dual_lower.assign(lp_.num_vars, Rational(0));
  out.dual_upper.assign(lp_.num_vars, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    Rational lambda = Rational(meta_[i].sign) * sol.solution[i];
    switch (meta_[i].origin) {
      case RowOrigin::Constraint: out.dual_rows[meta_[i].index] = lambda; break;
      case RowOrigin::LowerBound: out.dual_lower[meta_[i].index] = lambda; break;
      case RowOrigin::UpperBound: out.dual_upper[meta_[i].index] = lambda; break;
    }
  }
  return out;
}

LpOutcome Simplex::run() {
  const std::size_t r = tab_.size();
  nart_ = r;
  // append artificial identity columns
  for (std::size_t i = 0; i < r; ++i) {
    tab_[i].resize(ncols_ + nart_, Rational(0));
    tab_[i][ncols_ + i] = 1;
    basis_.push_back(ncols_ + i);
  }

  RatVector phase1_cost(ncols_ + nart_, Rational(0));
  for (std::size_t i = 0; i < nart_; ++i) phase1_cost[ncols_ + i] = 1;
  std::size_t unb = 0;
  bool ok = iterate(phase1_cost, ncols_ + nart_, &unb);
  assert(ok);
  (void)ok;
  Rational p1 = 0;
  for (std::size_t i = 0; i < tab_.size(); ++i)
    if (basis_[i] >= ncols_) p1 += rhs_[i];
  if (p1 > 0) return extract_infeasible(phase1_cost);

  // Drive artificials out of the basis where a real pivot exists. A row
  // with no real nonzero entry is a redundant equality: it stays identically
  // zero on real columns from here on (pivots never touch it), so its
  // artificial may remain basic at level zero and never interferes again.
  for (std::size_t i = 0; i < tab_.size(); ++i) {
    if (basis_[i] < ncols_) continue;
    for (std::size_t j = 0; j < ncols_; ++j)
      if (tab_[i][j] != 0) {
        pivot(i, j);
        break;
      }
  }

  RatVector cost(ncols_ + nart_, Rational(0));
  for (std::size_t j = 0; j < lp_.num_vars; ++j) {
    cost[2 * j] = lp_.objective[j];
    cost[2 * j + 1] = -lp_.objective[j];
  }
  if (!iterate(cost, ncols_, &unb)) return extract_unbounded(unb);
  return extract_optimal();
}

}  // namespace

LpOutcome solve_lp(const GeneralLP& lp) {
  Simplex s(lp);
  return s.run();
}

FeasibilityOutcome check_feasible(const GeneralLP& lp) {
  GeneralLP zero = lp;
  std::fill(zero.objective.begin(), zero.objective.end(), Rational(0));
  LpOutcome o = solve_lp(zero);
  if (auto* opt = std::get_if<LpOptimal>(&o)) return FeasiblePoint{std::move(opt->primal)};
  if (auto* inf = std::get_if<LpInfeasible>(&o)) return std::move(*inf);
  throw Error("check_feasible: zero objective cannot be unbounded");
}

}  // namespace invlfp
