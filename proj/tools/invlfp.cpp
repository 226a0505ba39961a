// Command-line front door: decide / generate / verify / eval over instance
// and certificate JSON files and DIMACS CNF formulas.
//
// Exit codes: 0 = Yes/Accept, 1 = No/Reject, 2 = error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "invlfp/deciders.hpp"
#include "invlfp/errors.hpp"
#include "invlfp/evaluate.hpp"
#include "invlfp/exhaustive.hpp"
#include "invlfp/json_io.hpp"
#include "invlfp/oracle.hpp"
#include "invlfp/reductions.hpp"

namespace {

using invlfp::Decision;
using invlfp::Instance;
using invlfp::Scenario;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invlfp::ParseError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json vec_json(const invlfp::RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(invlfp::to_string(q));
  return out;
}

bool is_zero(const invlfp::RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

// Encodes any non-oracle target over the natural-form conversion of `inst`
// as a polyhedron, for the --solver exhaustive override.
invlfp::PolyhedronTarget as_polyhedron(const Instance& inst,
                                       const invlfp::TargetSet& target) {
  if (const auto* s = std::get_if<invlfp::SingletonTarget>(&target))
    return invlfp::singleton_as_polyhedron(s->ybar);
  if (const auto* p = std::get_if<invlfp::PolyhedronTarget>(&target)) return *p;
  if (const auto* pf = std::get_if<invlfp::PartialFixTarget>(&target)) {
    const std::size_t n = inst.n(), fixed = n - pf->free_count;
    invlfp::RatMatrix S(2 * fixed, n);
    invlfp::RatVector t(2 * fixed);
    for (std::size_t i = 0; i < fixed; ++i) {
      S.at(2 * i, i) = 1;
      t[2 * i] = pf->ybar[i];
      S.at(2 * i + 1, i) = -1;
      t[2 * i + 1] = -pf->ybar[i];
    }
    return {S, t};
  }
  throw invlfp::ValidationError(invlfp::ValidationError::Kind::Other,
                                "no polyhedral encoding for this target");
}

struct Routed {
  Decision decision;
  std::string solver;
  invlfp::SearchStats stats;
};

Routed route_decide(const Instance& inst, const invlfp::TargetSet& target,
                    Scenario sc, bool force_exhaustive,
                    const invlfp::SolveOptions& opts) {
  Routed r;
  const bool opt = sc == Scenario::Optimistic;
  if (std::holds_alternative<invlfp::OracleBackedTarget>(target))
    throw invlfp::ValidationError(
        invlfp::ValidationError::Kind::Other,
        "oracle-backed targets are verify-only; decide is not supported");

  if (force_exhaustive &&
      !std::holds_alternative<invlfp::BasisTarget>(target)) {
    Instance nat =
        inst.form == invlfp::Form::Natural ? inst : convert_standard_to_natural(inst);
    auto poly = as_polyhedron(inst, target);
    r.solver = "polyhedral-exhaustive";
    r.decision = opt ? solve_polyhedral_optimistic(nat, poly, opts, &r.stats)
                     : solve_polyhedral_pessimistic(nat, poly, opts, &r.stats);
    return r;
  }

  if (const auto* s = std::get_if<invlfp::SingletonTarget>(&target)) {
    if (inst.form == invlfp::Form::Standard) {
      r.solver = "singleton-standard";
      r.decision = decide_singleton_standard(inst, s->ybar, sc, opts);
    } else if (is_zero(inst.B)) {
      r.solver = "singleton-natural-of";
      r.decision = decide_singleton_natural_of(inst, s->ybar, sc, opts);
    } else {
      r.solver = "polyhedral-exhaustive";
      auto poly = invlfp::singleton_as_polyhedron(s->ybar);
      r.decision = opt ? solve_polyhedral_optimistic(inst, poly, opts, &r.stats)
                       : solve_polyhedral_pessimistic(inst, poly, opts, &r.stats);
    }
  } else if (const auto* bt = std::get_if<invlfp::BasisTarget>(&target)) {
    if (opt) {
      r.solver = "basis-exhaustive";
      r.decision = solve_basis_optimistic(inst, *bt, opts, &r.stats);
    } else {
      r.solver = "basis-pessimistic";
      r.decision = decide_basis_pessimistic(inst, *bt, opts);
    }
  } else if (const auto* pf = std::get_if<invlfp::PartialFixTarget>(&target)) {
    r.solver = "partial-fpt";
    r.decision = decide_partial_standard(inst, *pf, sc, opts);
  } else {
    const auto& poly = std::get<invlfp::PolyhedronTarget>(target);
    r.solver = "polyhedral-exhaustive";
    r.decision = opt ? solve_polyhedral_optimistic(inst, poly, opts, &r.stats)
                     : solve_polyhedral_pessimistic(inst, poly, opts, &r.stats);
  }
  return r;
}

int cmd_decide(const std::string& file, const std::string& scenario_override,
               const std::string& solver, const invlfp::SolveOptions& opts) {
  auto doc = invlfp::parse_instance(read_file(file));
  Scenario sc = doc.scenario;
  if (scenario_override == "opt") sc = Scenario::Optimistic;
  if (scenario_override == "pess") sc = Scenario::Pessimistic;

  auto start = std::chrono::steady_clock::now();
  Routed r = route_decide(doc.instance, doc.target, sc, solver == "exhaustive", opts);
  auto elapsed = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  json report;
  report["verdict"] = r.decision.yes ? "yes" : "no";
  report["scenario"] = sc == Scenario::Optimistic ? "optimistic" : "pessimistic";
  report["solver"] = r.solver;
  report["systems_examined"] = r.stats.systems_examined;
  report["wall_time_ms"] = elapsed;
  if (r.decision.witness_x) report["witness_x"] = vec_json(*r.decision.witness_x);
  if (r.decision.certificate)
    report["certificate"] = json::parse(serialize_certificate(*r.decision.certificate));
  std::cout << report.dump(2) << "\n";
  return r.decision.yes ? 0 : 1;
}

int cmd_generate(const std::string& reduction, const std::string& cnf_file,
                 const std::string& out_file) {
  std::ifstream in(cnf_file);
  if (!in) throw invlfp::ParseError("cannot open \"" + cnf_file + "\"");
  invlfp::CnfFormula phi = invlfp::read_dimacs(in);
  invlfp::ReductionOutput out;
  if (reduction == "rhs")
    out = invlfp::reduce_sat_rhs(phi);
  else if (reduction == "basis")
    out = invlfp::reduce_sat_basis(phi);
  else if (reduction == "onevar-rhs")
    out = invlfp::reduce_sat_onevar_rhs(phi);
  else if (reduction == "onevar-of")
    out = invlfp::reduce_sat_onevar_of(phi);
  else
    throw invlfp::ParseError("unknown reduction \"" + reduction + "\"");
  invlfp::ParsedDocument doc{out.instance, out.target, Scenario::Optimistic};
  std::string text = serialize_instance(doc);
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_file);
    os << text;
  }
  return 0;
}

int cmd_verify(const std::string& inst_file, const std::string& cert_file,
               const invlfp::SolveOptions& opts) {
  auto doc = invlfp::parse_instance(read_file(inst_file));
  auto cert = invlfp::parse_certificate(read_file(cert_file));
  auto vr = verify_certificate(doc.instance, doc.target, doc.scenario, cert, opts);
  json report;
  report["verdict"] = vr.accepted ? "accept" : "reject";
  if (vr.witness_x) report["witness_x"] = vec_json(*vr.witness_x);
  if (!vr.reason.empty()) report["reason"] = vr.reason;
  std::cout << report.dump(2) << "\n";
  return vr.accepted ? 0 : 1;
}

int cmd_eval(const std::string& inst_file, const std::vector<std::string>& x_text,
             const std::string& scenario_override, const invlfp::SolveOptions& opts) {
  auto doc = invlfp::parse_instance(read_file(inst_file));
  Scenario sc = doc.scenario;
  if (scenario_override == "opt") sc = Scenario::Optimistic;
  if (scenario_override == "pess") sc = Scenario::Pessimistic;
  invlfp::RatVector x;
  for (const auto& s : x_text) x.push_back(invlfp::parse_rational(s));
  bool yes = evaluate_fixed_parameter(doc.instance, doc.target, sc, x, opts);
  json report;
  report["verdict"] = yes ? "yes" : "no";
  report["x"] = vec_json(x);
  std::cout << report.dump(2) << "\n";
  return yes ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact feasibility solver for generalized inverse linear programs"};
  app.require_subcommand(1);

  std::string scenario, solver = "auto", out_file;
  std::string inst_file, cert_file, cnf_file, reduction;
  std::vector<std::string> x_text;
  long budget = -1;
  long seed = 0;  // reserved for test tooling; the library is deterministic

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario, "override: opt|pess")
        ->check(CLI::IsMember({"opt", "pess"}));
    cmd->add_option("--budget", budget, "max LP solves for searches");
    cmd->add_option("--seed", seed, "accepted for tooling compatibility");
    std::string format = "json";
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json"}));
  };

  CLI::App* decide = app.add_subcommand("decide", "decide an instance file");
  decide->add_option("file", inst_file, "instance JSON")->required();
  decide->add_option("--solver", solver, "auto|exhaustive")
      ->check(CLI::IsMember({"auto", "exhaustive"}));
  add_common(decide);

  CLI::App* generate = app.add_subcommand("generate", "emit a SAT reduction");
  generate->add_option("reduction", reduction, "rhs|basis|onevar-rhs|onevar-of")
      ->required();
  generate->add_option("cnf", cnf_file, "DIMACS CNF file")->required();
  generate->add_option("-o,--output", out_file, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "verify a certificate");
  verify->add_option("instance", inst_file, "instance JSON")->required();
  verify->add_option("certificate", cert_file, "certificate JSON")->required();
  add_common(verify);

  CLI::App* eval = app.add_subcommand("eval", "evaluate at a fixed parameter");
  eval->add_option("instance", inst_file, "instance JSON")->required();
  eval->add_option("-x", x_text, "parameter coordinates as rationals")
      ->required()
      ->expected(-1);
  add_common(eval);

  CLI11_PARSE(app, argc, argv);

  invlfp::SolveOptions opts;
  if (budget >= 0) opts.budget = static_cast<std::size_t>(budget);

  try {
    if (decide->parsed()) return cmd_decide(inst_file, scenario, solver, opts);
    if (generate->parsed()) return cmd_generate(reduction, cnf_file, out_file);
    if (verify->parsed()) return cmd_verify(inst_file, cert_file, opts);
    return cmd_eval(inst_file, x_text, scenario, opts);
  } catch (const invlfp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
