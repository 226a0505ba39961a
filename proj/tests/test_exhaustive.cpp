#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invlfp/deciders.hpp"
#include "invlfp/errors.hpp"
#include "invlfp/evaluate.hpp"
#include "invlfp/exhaustive.hpp"
#include "support/instances.hpp"

using namespace invlfp;
using namespace invlfp::testing;

namespace {

// Y = {y : y2 = 0} for a 2-dimensional instance.
PolyhedronTarget second_coord_zero() {
  return {mat(2, 2, {0, 1, 0, -1}), {0, 0}};
}

}  // namespace

TEST_CASE("optimistic polyhedral search on the converted segment instance") {
  Instance nat = convert_standard_to_natural(make_i1());
  SearchStats stats;
  auto dec = solve_polyhedral_optimistic(nat, second_coord_zero(), {}, &stats);
  CHECK(dec.yes);
  CHECK(stats.systems_examined > 0);
  REQUIRE(dec.witness_x.has_value());
  // The optimal face at the witness must meet {y2 = 0}; only y = (1,0)
  // qualifies on the segment.
  CHECK(ref_singleton_at(nat, {1, 0}, Scenario::Optimistic, *dec.witness_x));
  REQUIRE(dec.certificate.has_value());
  auto vr = verify_certificate(nat, second_coord_zero(), Scenario::Optimistic,
                               *dec.certificate);
  CHECK(vr.accepted);
}

TEST_CASE("pessimistic polyhedral search on the converted segment instance") {
  Instance nat = convert_standard_to_natural(make_i1());
  auto dec = solve_polyhedral_pessimistic(nat, second_coord_zero());
  CHECK(dec.yes);
  REQUIRE(dec.witness_x.has_value());
  CHECK(ref_singleton_at(nat, {1, 0}, Scenario::Pessimistic, *dec.witness_x));
  REQUIRE(dec.certificate.has_value());
  auto vr = verify_certificate(nat, second_coord_zero(), Scenario::Pessimistic,
                               *dec.certificate);
  CHECK(vr.accepted);
  // Freezing x = 0 leaves the whole segment optimal: pessimistic fails,
  // optimistic still succeeds.
  Instance frozen = nat;
  frozen.X = interval(0, 0);
  CHECK_FALSE(solve_polyhedral_pessimistic(frozen, second_coord_zero()).yes);
  CHECK(solve_polyhedral_optimistic(frozen, second_coord_zero()).yes);
}

TEST_CASE("origin target on the ramp instance") {
  Instance inst = make_i2();
  PolyhedronTarget origin = singleton_as_polyhedron(RatVector{0});
  for (auto solver : {solve_polyhedral_optimistic, solve_polyhedral_pessimistic}) {
    auto dec = solver(inst, origin, {}, nullptr);
    CHECK(dec.yes);
    REQUIRE(dec.witness_x.has_value());
    CHECK(*dec.witness_x == RatVector{0});
  }
}

TEST_CASE("empty parameter set decides No") {
  Instance inst = make_i2();
  inst.X = interval(1, 0);  // 1 <= x <= 0
  CHECK_FALSE(solve_polyhedral_optimistic(inst, singleton_as_polyhedron({0})).yes);
  CHECK_FALSE(solve_polyhedral_pessimistic(inst, singleton_as_polyhedron({0})).yes);
}

TEST_CASE("trivial target asks only for an optimal solution to exist") {
  Instance nat = convert_standard_to_natural(make_i1());
  PolyhedronTarget whole{RatMatrix(0, 2), {}};
  auto dec = solve_polyhedral_optimistic(nat, whole);
  CHECK(dec.yes);
  auto pess = solve_polyhedral_pessimistic(nat, whole);
  CHECK(pess.yes);
}

TEST_CASE("singleton-as-polyhedron agrees with the direct decider") {
  Instance inst = make_i1();
  Instance nat = convert_standard_to_natural(inst);
  std::vector<RatVector> targets{
      {1, 0}, {0, 1}, {Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}};
  for (const auto& ybar : targets)
    for (Scenario sc : {Scenario::Optimistic, Scenario::Pessimistic}) {
      auto direct = decide_singleton_standard(inst, ybar, sc);
      auto target = singleton_as_polyhedron(ybar);
      auto search = sc == Scenario::Optimistic
                        ? solve_polyhedral_optimistic(nat, target)
                        : solve_polyhedral_pessimistic(nat, target);
      CHECK(direct.yes == search.yes);
      if (search.yes) {
        REQUIRE(search.witness_x.has_value());
        CHECK(ref_singleton_at(inst, ybar, sc, *search.witness_x));
      }
    }
}

TEST_CASE("optimistic basis search") {
  Instance inst = make_i1();
  auto dec = solve_basis_optimistic(inst, BasisTarget{{0}});
  CHECK(dec.yes);
  REQUIRE(dec.witness_x.has_value());
  CHECK(evaluate_fixed_parameter(inst, TargetSet{BasisTarget{{0}}},
                                 Scenario::Optimistic, *dec.witness_x));
  REQUIRE(dec.certificate.has_value());
  CHECK(verify_certificate(inst, TargetSet{BasisTarget{{0}}}, Scenario::Optimistic,
                           *dec.certificate).accepted);
  // Even with x frozen at 0 the basis {1} is optimal (everything is).
  Instance frozen = inst;
  frozen.X = interval(0, 0);
  CHECK(solve_basis_optimistic(frozen, BasisTarget{{0}}).yes);
  // A parameter-free objective that strictly prefers y2 rules basis {1} out.
  Instance tilted = inst;
  tilted.C = mat(2, 1, {0, 0});
  tilted.c = {1, -1};
  CHECK_FALSE(solve_basis_optimistic(tilted, BasisTarget{{0}}).yes);
  CHECK(solve_basis_optimistic(tilted, BasisTarget{{1}}).yes);
  CHECK_THROWS_AS(solve_basis_optimistic(make_i2(), BasisTarget{{0}}),
                  ValidationError);
}

TEST_CASE("search honours the budget") {
  Instance nat = convert_standard_to_natural(make_i1());
  SolveOptions opts;
  opts.budget = 0;
  CHECK_THROWS_AS(solve_polyhedral_optimistic(nat, second_coord_zero(), opts),
                  SizeGuardError);
  CHECK_THROWS_AS(solve_polyhedral_pessimistic(nat, second_coord_zero(), opts),
                  SizeGuardError);
}
