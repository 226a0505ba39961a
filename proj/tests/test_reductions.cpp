#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "invlfp/errors.hpp"
#include "invlfp/evaluate.hpp"
#include "invlfp/exhaustive.hpp"
#include "invlfp/reductions.hpp"
#include "support/instances.hpp"

using namespace invlfp;
using namespace invlfp::testing;

namespace {

const CnfFormula kSat{1, {{{1, 1, 1}}}};
const CnfFormula kUnsat{1, {{{1, 1, 1}}, {{-1, -1, -1}}}};

}  // namespace

TEST_CASE("brute-force SAT oracle") {
  CHECK(sat_bruteforce(kSat));
  CHECK_FALSE(sat_bruteforce(kUnsat));
  CHECK(sat_bruteforce({3, {}}));
  CHECK(sat_bruteforce({2, {{{1, -2, -2}}, {{-1, 2, 2}}}}));
  CHECK_THROWS_AS(sat_bruteforce({30, {}}, 20), SizeGuardError);
}

TEST_CASE("right-hand-side reduction: shape and verdicts") {
  auto out = reduce_sat_rhs(kSat);
  const Instance& inst = out.instance;
  // n=1 variable, 1 clause: rows 2n + m + 1 + (n+1) = 6, vars n+1 = 2.
  CHECK(inst.form == Form::Natural);
  CHECK(inst.n() == 2);
  CHECK(inst.m() == 6);
  CHECK_NOTHROW(validate(inst, out.target));
  CHECK(std::get<SingletonTarget>(out.target).ybar == RatVector{0, 1});

  auto target = singleton_as_polyhedron(std::get<SingletonTarget>(out.target).ybar);
  auto opt = solve_polyhedral_optimistic(inst, target);
  CHECK(opt.yes);
  REQUIRE(opt.witness_x.has_value());
  // The proof promises a unique optimum at every x, so pessimistic agrees.
  CHECK(evaluate_fixed_parameter(inst, out.target, Scenario::Pessimistic,
                                 *opt.witness_x));
  CHECK(solve_polyhedral_pessimistic(inst, target).yes);

  auto bad = reduce_sat_rhs(kUnsat);
  auto bad_target =
      singleton_as_polyhedron(std::get<SingletonTarget>(bad.target).ybar);
  CHECK_FALSE(solve_polyhedral_optimistic(bad.instance, bad_target).yes);
  CHECK_FALSE(solve_polyhedral_pessimistic(bad.instance, bad_target).yes);
}

TEST_CASE("basis reduction: shape and verdicts") {
  CnfFormula two_clauses{1, {{{1, 1, 1}}, {{1, -1, 1}}}};
  auto out = reduce_sat_basis(two_clauses);
  // n=1, m=2 clauses: 2n+m+1 = 5 equality rows, 1+1+5 = 7 variables.
  CHECK(out.instance.form == Form::Standard);
  CHECK(out.instance.m() == 5);
  CHECK(out.instance.n() == 7);
  CHECK_NOTHROW(validate(out.instance, out.target));
  // Basis = {z} plus all slacks except the last.
  CHECK(std::get<BasisTarget>(out.target).cols.size() == 5);

  auto sat_out = reduce_sat_basis(kSat);
  auto dec = solve_basis_optimistic(sat_out.instance,
                                    std::get<BasisTarget>(sat_out.target));
  CHECK(dec.yes);
  REQUIRE(dec.witness_x.has_value());
  CHECK(evaluate_fixed_parameter(sat_out.instance, sat_out.target,
                                 Scenario::Optimistic, *dec.witness_x));

  auto unsat_out = reduce_sat_basis(kUnsat);
  CHECK_FALSE(solve_basis_optimistic(unsat_out.instance,
                                     std::get<BasisTarget>(unsat_out.target)).yes);
}

TEST_CASE("one-variable RHS reduction: shape and verdicts") {
  auto out = reduce_sat_onevar_rhs(kSat);
  // Rows: (2n+m+1) + 2 coupling + (n+2) nonnegativity with n=1, m=1.
  CHECK(out.instance.n() == 3);
  CHECK(out.instance.m() == 4 + 2 + 3);
  CHECK_NOTHROW(validate(out.instance, out.target));
  const auto& poly = std::get<PolyhedronTarget>(out.target);
  CHECK(poly.S.rows() == 2);  // t = 0 as two inequalities

  CHECK(solve_polyhedral_optimistic(out.instance, poly).yes);
  CHECK(solve_polyhedral_pessimistic(out.instance, poly).yes);
  auto bad = reduce_sat_onevar_rhs(kUnsat);
  const auto& bad_poly = std::get<PolyhedronTarget>(bad.target);
  CHECK_FALSE(solve_polyhedral_optimistic(bad.instance, bad_poly).yes);
  CHECK_FALSE(solve_polyhedral_pessimistic(bad.instance, bad_poly).yes);
}

TEST_CASE("one-variable objective reduction: shape and verdicts") {
  auto out = reduce_sat_onevar_of(kSat);
  const Instance& inst = out.instance;
  CHECK(inst.form == Form::Natural);
  CHECK(inst.n() == 3);  // mu, nu, z for n=1
  // B = 0: the parameter only enters the objective.
  for (std::size_t j = 0; j < inst.m(); ++j)
    CHECK(inst.B.at(j, 0) == 0);
  // z coefficient is -(n - 1/4) = -3/4 for n=1.
  CHECK(inst.c.back() == Rational(-3, 4));
  // X = [0,1] cut with the clause row 3x1 >= 1.
  CHECK(inst.X.D.rows() == 3);
  CHECK_NOTHROW(validate(inst, out.target));

  const auto& poly = std::get<PolyhedronTarget>(out.target);
  CHECK(solve_polyhedral_optimistic(inst, poly).yes);
  CHECK(solve_polyhedral_pessimistic(inst, poly).yes);

  auto bad = reduce_sat_onevar_of(kUnsat);
  // The two clauses force x1 in [1/3, 2/3].
  const auto& bad_poly = std::get<PolyhedronTarget>(bad.target);
  CHECK_FALSE(solve_polyhedral_optimistic(bad.instance, bad_poly).yes);
  CHECK_FALSE(solve_polyhedral_pessimistic(bad.instance, bad_poly).yes);
}

TEST_CASE("generators are deterministic") {
  CnfFormula phi{2, {{{1, -2, 1}}, {{-1, 2, 2}}}};
  auto a = reduce_sat_rhs(phi);
  auto b = reduce_sat_rhs(phi);
  CHECK(a.instance.A == b.instance.A);
  CHECK(a.instance.B == b.instance.B);
  CHECK(a.instance.b == b.instance.b);
  CHECK(a.instance.c == b.instance.c);
}

TEST_CASE("random formulas round-trip through the RHS reduction") {
  Lcg rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    CnfFormula phi;
    phi.num_vars = static_cast<std::size_t>(rng.pick(1, 3));
    const long nc = rng.pick(1, 4);
    for (long j = 0; j < nc; ++j) {
      std::array<int, 3> clause;
      for (auto& lit : clause) {
        int var = static_cast<int>(rng.pick(1, static_cast<long>(phi.num_vars)));
        lit = rng.pick(0, 1) ? var : -var;
      }
      phi.clauses.push_back(clause);
    }
    auto out = reduce_sat_rhs(phi);
    auto target =
        singleton_as_polyhedron(std::get<SingletonTarget>(out.target).ybar);
    CHECK(solve_polyhedral_optimistic(out.instance, target).yes ==
          sat_bruteforce(phi));
  }
}

TEST_CASE("DIMACS reader") {
  std::istringstream in(
      "c sample formula\n"
      "p cnf 3 2\n"
      "1 -2 3 0\n"
      "-3 0\n");
  CnfFormula phi = read_dimacs(in);
  CHECK(phi.num_vars == 3);
  REQUIRE(phi.clauses.size() == 2);
  CHECK(phi.clauses[0] == std::array<int, 3>{1, -2, 3});
  // Short clause padded by repeating its first literal.
  CHECK(phi.clauses[1] == std::array<int, 3>{-3, -3, -3});

  std::istringstream bad("p cnf 1 1\n1 1 1 1 0\n");
  CHECK_THROWS_AS(read_dimacs(bad), ParseError);
  std::istringstream missing("p cnf 1 2\n1 1 1 0\n");
  CHECK_THROWS_AS(read_dimacs(missing), ParseError);
}
