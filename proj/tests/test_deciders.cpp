#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invlfp/deciders.hpp"
#include "invlfp/errors.hpp"
#include "invlfp/evaluate.hpp"
#include "support/instances.hpp"

using namespace invlfp;
using namespace invlfp::testing;

namespace {

// Every Yes must ship a witness x that the independent vertex oracle
// confirms, inside X; every No stays a No.
void check_singleton(const Instance& inst, const RatVector& ybar,
                     Scenario scenario, bool expected, const Decision& dec) {
  CHECK(dec.yes == expected);
  CHECK(dec.scenario == scenario);
  if (!dec.yes) {
    CHECK(!dec.witness_x.has_value());
    return;
  }
  REQUIRE(dec.witness_x.has_value());
  CHECK(ref_satisfies(
      [&] {
        std::vector<RefRow> rows;
        for (std::size_t j = 0; j < inst.X.D.rows(); ++j)
          rows.push_back({inst.X.D.row(j), inst.X.d[j], false});
        return rows;
      }(),
      *dec.witness_x));
  CHECK(ref_singleton_at(inst, ybar, scenario, *dec.witness_x));
  CHECK(dec.certificate.has_value());
}

}  // namespace

TEST_CASE("standard singleton: vertex target, both scenarios") {
  Instance inst = make_i1();
  RatVector ybar{1, 0};
  auto opt = decide_singleton_standard(inst, ybar, Scenario::Optimistic);
  check_singleton(inst, ybar, Scenario::Optimistic, true, opt);
  auto pess = decide_singleton_standard(inst, ybar, Scenario::Pessimistic);
  check_singleton(inst, ybar, Scenario::Pessimistic, true, pess);
}

TEST_CASE("standard singleton: midpoint target is optimistic-only") {
  Instance inst = make_i1();
  RatVector ybar{Rational(1, 2), Rational(1, 2)};
  auto opt = decide_singleton_standard(inst, ybar, Scenario::Optimistic);
  check_singleton(inst, ybar, Scenario::Optimistic, true, opt);
  // At x=0 the whole segment is optimal; no x can make an interior point
  // the unique optimum.
  auto pess = decide_singleton_standard(inst, ybar, Scenario::Pessimistic);
  check_singleton(inst, ybar, Scenario::Pessimistic, false, pess);
}

TEST_CASE("standard singleton: negative or infeasible targets") {
  Instance inst = make_i1();
  CHECK_FALSE(decide_singleton_standard(inst, {2, -1}, Scenario::Optimistic).yes);
  CHECK_FALSE(decide_singleton_standard(inst, {2, 0}, Scenario::Optimistic).yes);
  CHECK_THROWS_AS(decide_singleton_standard(make_i2(), {0}, Scenario::Optimistic),
                  ValidationError);
}

TEST_CASE("natural singleton with parameter-free constraints") {
  Instance inst = make_i3();
  auto opt = decide_singleton_natural_of(inst, {1}, Scenario::Optimistic);
  check_singleton(inst, {1}, Scenario::Optimistic, true, opt);
  auto pess = decide_singleton_natural_of(inst, {1}, Scenario::Pessimistic);
  check_singleton(inst, {1}, Scenario::Pessimistic, true, pess);
  // Interior point: no constraint active, rank test fails immediately.
  CHECK_FALSE(decide_singleton_natural_of(inst, {Rational(1, 2)},
                                          Scenario::Pessimistic).yes);
  auto opt_mid = decide_singleton_natural_of(inst, {Rational(1, 2)},
                                             Scenario::Optimistic);
  check_singleton(inst, {Rational(1, 2)}, Scenario::Optimistic, true, opt_mid);
  // Outside the feasible region.
  CHECK_FALSE(decide_singleton_natural_of(inst, {2}, Scenario::Optimistic).yes);
  // B != 0 is out of scope for this decider.
  CHECK_THROWS_AS(decide_singleton_natural_of(make_i2(), {0}, Scenario::Optimistic),
                  ValidationError);
}

TEST_CASE("nonessential part of a basis") {
  CHECK(compute_nonessential_part(mat(1, 2, {1, 1}), {0}) ==
        std::vector<std::size_t>{0});
  CHECK(compute_nonessential_part(RatMatrix::identity(2), {0, 1}).empty());
  CHECK(compute_nonessential_part(mat(2, 3, {1, 0, 1, 0, 1, 0}), {0, 1}) ==
        std::vector<std::size_t>{0});
}

TEST_CASE("pessimistic basis target") {
  Instance inst = make_i1();
  auto first = decide_basis_pessimistic(inst, BasisTarget{{0}});
  CHECK(first.yes);
  REQUIRE(first.witness_x.has_value());
  CHECK(ref_singleton_at(inst, {1, 0}, Scenario::Pessimistic, *first.witness_x));
  auto second = decide_basis_pessimistic(inst, BasisTarget{{1}});
  CHECK(second.yes);
  CHECK(ref_singleton_at(inst, {0, 1}, Scenario::Pessimistic, *second.witness_x));
  // Shrinking X to {0} kills both: at x=0 the objective is identically 0.
  Instance frozen = inst;
  frozen.X = interval(0, 0);
  CHECK_FALSE(decide_basis_pessimistic(frozen, BasisTarget{{0}}).yes);
  CHECK_FALSE(decide_basis_pessimistic(frozen, BasisTarget{{1}}).yes);
  CHECK_THROWS_AS(decide_basis_pessimistic(inst, BasisTarget{{0, 1}}),
                  InvalidBasisError);
}

TEST_CASE("partial fix: one free coordinate") {
  Instance inst = make_i1();
  PartialFixTarget target{{1}, 1};
  auto opt = decide_partial_standard(inst, target, Scenario::Optimistic);
  CHECK(opt.yes);
  REQUIRE(opt.witness_x.has_value());
  // y1 = 1 forces y2 = 0; the witness must make (1,0) optimal.
  CHECK(ref_singleton_at(inst, {1, 0}, Scenario::Optimistic, *opt.witness_x));
  CHECK(evaluate_fixed_parameter(inst, target, Scenario::Optimistic, *opt.witness_x));
  auto pess = decide_partial_standard(inst, target, Scenario::Pessimistic);
  CHECK(pess.yes);
  CHECK(evaluate_fixed_parameter(inst, target, Scenario::Pessimistic,
                                 *pess.witness_x));
  CHECK_FALSE(decide_partial_standard(inst, {{2}, 1}, Scenario::Optimistic).yes);
}

TEST_CASE("partial fix with no free coordinates matches the singleton decider") {
  Instance inst = make_i1();
  std::vector<RatVector> targets{{1, 0}, {Rational(1, 2), Rational(1, 2)}, {2, -1}};
  for (const auto& ybar : targets)
    for (Scenario sc : {Scenario::Optimistic, Scenario::Pessimistic}) {
      auto full = decide_partial_standard(inst, {ybar, 0}, sc);
      auto single = decide_singleton_standard(inst, ybar, sc);
      CHECK(full.yes == single.yes);
    }
}

TEST_CASE("partial fix size guard") {
  Instance inst = make_i1();
  SolveOptions opts;
  opts.budget = 0;
  CHECK_THROWS_AS(
      decide_partial_standard(inst, {{}, 2}, Scenario::Pessimistic, opts),
      SizeGuardError);
}
