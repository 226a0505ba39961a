#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "invlfp/json_io.hpp"
#include "support/instances.hpp"

using namespace invlfp;
using namespace invlfp::testing;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the CLI binary, capturing stdout; stderr is silenced.
RunResult run(const std::string& args) {
  std::string cmd = std::string(INVLFP_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  return std::string("cli_tmp_") + name;
}

std::string write_doc(const std::string& name, const ParsedDocument& doc) {
  std::string path = temp_path(name);
  std::ofstream(path) << serialize_instance(doc);
  return path;
}

// Drops the volatile wall-time line so reports can be compared byte-wise.
std::string strip_wall_time(const std::string& report) {
  std::istringstream in(report);
  std::string line, out;
  while (std::getline(in, line))
    if (line.find("wall_time_ms") == std::string::npos) out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("decide: segment instance, pessimistic vertex target") {
  ParsedDocument doc{make_i1(), SingletonTarget{{1, 0}}, Scenario::Pessimistic};
  std::string path = write_doc("i1_pess.json", doc);
  auto res = run("decide " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"verdict\": \"yes\"") != std::string::npos);
  CHECK(res.out.find("witness_x") != std::string::npos);
  CHECK(res.out.find("singleton-standard") != std::string::npos);
  // Identical runs give identical reports modulo wall time.
  CHECK(strip_wall_time(res.out) == strip_wall_time(run("decide " + path).out));
  // Scenario override flips nothing here, solver override reroutes.
  auto ex = run("decide " + path + " --solver exhaustive");
  CHECK(ex.exit_code == 0);
  CHECK(ex.out.find("polyhedral-exhaustive") != std::string::npos);
}

TEST_CASE("decide: routing table") {
  ParsedDocument doc{make_i3(), SingletonTarget{{1}}, Scenario::Optimistic};
  auto res = run("decide " + write_doc("i3_of.json", doc));
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("singleton-natural-of") != std::string::npos);

  doc = {make_i1(), BasisTarget{{0}}, Scenario::Pessimistic};
  res = run("decide " + write_doc("i1_basis.json", doc));
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("basis-pessimistic") != std::string::npos);
  res = run("decide " + write_doc("i1_basis.json", doc) + " --scenario opt");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("basis-exhaustive") != std::string::npos);

  doc = {make_i1(), PartialFixTarget{{1}, 1}, Scenario::Optimistic};
  res = run("decide " + write_doc("i1_partial.json", doc));
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("partial-fpt") != std::string::npos);
}

TEST_CASE("decide: infeasible parameter set and malformed input") {
  ParsedDocument doc{make_i2(), SingletonTarget{{0}}, Scenario::Optimistic};
  doc.instance.X = interval(1, 0);
  auto res = run("decide " + write_doc("empty_x.json", doc));
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("\"verdict\": \"no\"") != std::string::npos);

  std::ofstream(temp_path("bad.json")) << "{ not json";
  CHECK(run("decide " + temp_path("bad.json")).exit_code == 2);

  // Oracle targets cannot be decided, only verified.
  doc = {convert_standard_to_natural(make_i1()),
         OracleBackedTarget{BoxSpec{{1, 0}, {1, 0}}, 2}, Scenario::Optimistic};
  CHECK(run("decide " + write_doc("oracle.json", doc)).exit_code == 2);
}

TEST_CASE("generate feeds decide for every reduction") {
  std::ofstream(temp_path("sat.cnf")) << "p cnf 1 1\n1 0\n";
  std::ofstream(temp_path("unsat.cnf")) << "p cnf 1 2\n1 0\n-1 0\n";
  for (std::string red : {"rhs", "basis", "onevar-rhs", "onevar-of"}) {
    auto gen = run("generate " + red + " " + temp_path("sat.cnf") + " -o " +
                   temp_path(red + ".json"));
    REQUIRE(gen.exit_code == 0);
    CHECK(run("decide " + temp_path(red + ".json")).exit_code == 0);
    REQUIRE(run("generate " + red + " " + temp_path("unsat.cnf") + " -o " +
                temp_path(red + "_u.json"))
                .exit_code == 0);
    CHECK(run("decide " + temp_path(red + "_u.json")).exit_code == 1);
  }
  CHECK(run("generate mystery " + temp_path("sat.cnf")).exit_code == 2);
}

TEST_CASE("verify and eval round-trip") {
  ParsedDocument doc{convert_standard_to_natural(make_i1()),
                     SingletonTarget{{1, 0}}, Scenario::Optimistic};
  std::string inst = write_doc("verify_inst.json", doc);
  std::ofstream(temp_path("good_cert.json"))
      << serialize_certificate(ActiveSetCertificate{{0, 1, 3}});
  CHECK(run("verify " + inst + " " + temp_path("good_cert.json")).exit_code == 0);
  std::ofstream(temp_path("bad_cert.json"))
      << serialize_certificate(ActiveSetCertificate{{2}});
  CHECK(run("verify " + inst + " " + temp_path("bad_cert.json")).exit_code == 1);
  std::ofstream(temp_path("alien_cert.json"))
      << serialize_certificate(BasisZeroSetCertificate{{0}});
  CHECK(run("verify " + inst + " " + temp_path("alien_cert.json")).exit_code == 2);

  CHECK(run("eval " + inst + " -x -1").exit_code == 0);
  CHECK(run("eval " + inst + " --scenario pess -x 0").exit_code == 1);
  CHECK(run("eval " + inst + " -x 7").exit_code == 2);  // x outside X
}
