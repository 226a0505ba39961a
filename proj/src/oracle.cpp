#include "invlfp/oracle.hpp"

#include <algorithm>
#include <utility>

#include "invlfp/errors.hpp"
#include "invlfp/lp.hpp"
#include "systems.hpp"

namespace invlfp {

namespace {

Rational norm_sq(const RatVector& v) { return dot(v, v); }

RatVector diff(const RatVector& a, const RatVector& b) {
  RatVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

bool rows_satisfied(const RatMatrix& S, const RatVector& t, const RatVector& z) {
  for (std::size_t r = 0; r < S.rows(); ++r) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < S.cols(); ++i) lhs += S.at(r, i) * z[i];
    if (lhs > t[r]) return false;
  }
  return true;
}

}  // namespace

Rational polytope_distance_sq(const RatMatrix& S, const RatVector& t, const RatVector& y,
                              std::size_t subset_budget) {
  const std::size_t m = S.rows(), n = S.cols();
  if (y.size() != n) throw DimensionError("query point has wrong length");

  {
    GeneralLP lp;
    std::size_t z0 = lp.add_vars(n);
    for (std::size_t r = 0; r < m; ++r) {
      auto& row = lp.add_row(Rel::Le, t[r]);
      for (std::size_t i = 0; i < n; ++i) row.coeffs[z0 + i] = S.at(r, i);
    }
    if (!is_feasible(check_feasible(lp))) throw EmptySetError("polytope is empty");
  }

  if (rows_satisfied(S, t, y)) return 0;

  std::optional<Rational> best;
  std::size_t tried = 0;
  std::vector<std::size_t> subset;
  // DFS over row subsets of size <= n; each candidate is the projection of y
  // onto the affine hull of the chosen rows.
  auto consider = [&]() {
    if (subset.empty()) return;
    if (++tried > subset_budget) throw SizeGuardError("too many active-set candidates");
    const std::size_t a = subset.size();
    // Solve (S_A S_A^T) w = t_A - S_A y; projection is z = y + S_A^T w.
    RatMatrix gram(a, a);
    RatVector rhs(a);
    for (std::size_t p = 0; p < a; ++p) {
      for (std::size_t q = 0; q < a; ++q) {
        Rational g = 0;
        for (std::size_t i = 0; i < n; ++i) g += S.at(subset[p], i) * S.at(subset[q], i);
        gram.at(p, q) = g;
      }
      Rational sy = 0;
      for (std::size_t i = 0; i < n; ++i) sy += S.at(subset[p], i) * y[i];
      rhs[p] = t[subset[p]] - sy;
    }
    auto res = solve_unique(gram, rhs);
    if (res.status != SolveStatus::Unique) return;
    RatVector z = y;
    for (std::size_t p = 0; p < a; ++p)
      for (std::size_t i = 0; i < n; ++i) z[i] += S.at(subset[p], i) * res.solution[p];
    if (!rows_satisfied(S, t, z)) return;
    Rational d = norm_sq(diff(z, y));
    if (!best || d < *best) best = d;
  };
  auto dfs = [&](auto&& self, std::size_t next) -> void {
    consider();
    if (subset.size() == n) return;
    for (std::size_t r = next; r < m; ++r) {
      subset.push_back(r);
      self(self, r + 1);
      subset.pop_back();
    }
  };
  dfs(dfs, 0);
  if (!best) throw EmptySetError("no feasible projection candidate");
  return *best;
}

Rational box_distance_sq(const BoxSpec& box, const RatVector& y) {
  if (y.size() != box.lo.size()) throw DimensionError("query point has wrong length");
  Rational d = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    Rational excess = 0;
    if (y[i] < box.lo[i]) excess = box.lo[i] - y[i];
    else if (y[i] > box.hi[i]) excess = y[i] - box.hi[i];
    d += excess * excess;
  }
  return d;
}

namespace {

class BoxOracle final : public WeakOuterMembershipOracle {
 public:
  BoxOracle(BoxSpec spec, Rational r) : spec_(std::move(spec)), r_(std::move(r)) {}
  OuterAnswer query(const RatVector& y, const Rational& delta) const override {
    return box_distance_sq(spec_, y) > delta * delta ? OuterAnswer::NotInOuter
                                                     : OuterAnswer::InWiderOuter;
  }
  Rational bounding_radius() const override { return r_; }

 private:
  BoxSpec spec_;
  Rational r_;
};

class BallOracle final : public WeakOuterMembershipOracle {
 public:
  BallOracle(BallSpec spec, Rational r) : spec_(std::move(spec)), r_(std::move(r)) {}
  OuterAnswer query(const RatVector& y, const Rational& delta) const override {
    // dist(y,ball) > delta  iff  ||y-center|| > radius + delta
    Rational reach = spec_.radius + delta;
    return norm_sq(diff(y, spec_.center)) > reach * reach ? OuterAnswer::NotInOuter
                                                          : OuterAnswer::InWiderOuter;
  }
  Rational bounding_radius() const override { return r_; }

 private:
  BallSpec spec_;
  Rational r_;
};

class PolytopeOracle final : public WeakOuterMembershipOracle {
 public:
  PolytopeOracle(PolytopeSpec spec, Rational r) : spec_(std::move(spec)), r_(std::move(r)) {}
  OuterAnswer query(const RatVector& y, const Rational& delta) const override {
    return polytope_distance_sq(spec_.S, spec_.t, y) > delta * delta
               ? OuterAnswer::NotInOuter
               : OuterAnswer::InWiderOuter;
  }
  Rational bounding_radius() const override { return r_; }

 private:
  PolytopeSpec spec_;
  Rational r_;
};

}  // namespace

std::unique_ptr<WeakOuterMembershipOracle> make_oracle(const OracleBackedTarget& target) {
  return std::visit(
      [&](const auto& spec) -> std::unique_ptr<WeakOuterMembershipOracle> {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, BoxSpec>)
          return std::make_unique<BoxOracle>(spec, target.R);
        else if constexpr (std::is_same_v<T, BallSpec>)
          return std::make_unique<BallOracle>(spec, target.R);
        else
          return std::make_unique<PolytopeOracle>(spec, target.R);
      },
      target.backing);
}

OracleVerifyResult verify_oracle_certificate(const Instance& inst,
                                             const OracleCertificate& cert,
                                             const WeakOuterMembershipOracle& oracle) {
  if (inst.form != Form::Natural)
    throw ValidationError(ValidationError::Kind::FormMismatch,
                          "oracle certificates apply to natural-form instances");
  const std::size_t n = inst.n();
  if (cert.y_hat.size() != n) throw DimensionError("candidate point has wrong length");
  if (cert.delta <= 0) return {};
  if (oracle.query(cert.y_hat, cert.delta / 4) != OuterAnswer::InWiderOuter) return {};

  Rational rho = cert.delta / (2 * ceil_sqrt(n));
  RatMatrix box(2 * n, n);
  RatVector bound(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    box.at(i, i) = 1;
    bound[i] = cert.y_hat[i] + rho;
    box.at(n + i, i) = -1;
    bound[n + i] = rho - cert.y_hat[i];
  }
  sys::Vars v;
  GeneralLP lp = sys::polyhedral_opt_system(inst, cert.active, box, bound, v);
  auto out = check_feasible(lp);
  auto* fp = std::get_if<FeasiblePoint>(&out);
  if (fp == nullptr) return {};
  OracleVerifyResult res;
  res.accepted = true;
  res.witness_x = RatVector(fp->point.begin() + static_cast<long>(v.x),
                            fp->point.begin() + static_cast<long>(v.x + inst.k()));
  return res;
}

}  // namespace invlfp
