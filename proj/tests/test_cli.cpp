#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qsymp/cli.hpp"

using namespace qsymp;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const CliConfig& cfg) {
  std::ostringstream out, err;
  const int status = run_command(cfg, out, err);
  return {status, out.str(), err.str()};
}

CliConfig apply_cfg(int n, const std::string& op, const std::string& elem) {
  CliConfig cfg;
  cfg.command = CliConfig::Command::Apply;
  cfg.n = n;
  cfg.op_expr = op;
  cfg.elem_expr = elem;
  return cfg;
}

CliConfig mul_cfg(int n, const std::string& lhs, const std::string& rhs) {
  CliConfig cfg;
  cfg.command = CliConfig::Command::Mul;
  cfg.n = n;
  cfg.lhs_expr = lhs;
  cfg.rhs_expr = rhs;
  return cfg;
}

}  // namespace

TEST_CASE("apply command golden outputs") {
  CHECK(run(apply_cfg(2, "e(1)", "x(1)")).out == "x(-1)\n");
  CHECK(run(apply_cfg(2, "k(1)", "x(-1)")).out == "q^2 * x(-1)\n");
  CHECK(run(apply_cfg(2, "E(+,1,2)", "x(1)")).out == "-q^2 * x(-2)\n");
  CHECK(run(apply_cfg(2, "e(1)", "x(1)")).status == 0);
}

TEST_CASE("mul command golden outputs") {
  CHECK(run(mul_cfg(2, "x(2)", "x(1)")).out == "q * x(1)x(2)\n");
  CHECK(run(mul_cfg(2, "x(1)", "x(-1)")).out ==
        "q^2 * x(-1)x(1) + (q^3-q) * x(-2)x(2)\n");
  CHECK(run(mul_cfg(2, "1", "x(1)")).out == "x(1)\n");
}

TEST_CASE("roots command") {
  CliConfig cfg;
  cfg.command = CliConfig::Command::Roots;
  cfg.n = 2;
  CHECK(run(cfg).out == "E(+,1,1)\nE(+,1,2)\nE(+,2,2)\nE(-,1,2)\n");
}

TEST_CASE("usage errors") {
  CliConfig cfg;
  cfg.command = CliConfig::Command::Verify;
  cfg.n = 1;
  const Run r = run(cfg);
  CHECK(r.status == 2);
  CHECK(r.err.find("--n") != std::string::npos);

  CliConfig bad_suite;
  bad_suite.command = CliConfig::Command::Verify;
  bad_suite.suites = {"nonsense"};
  CHECK(run(bad_suite).status == 2);

  CliConfig no_op;
  no_op.command = CliConfig::Command::Apply;
  CHECK(run(no_op).status == 2);
}

TEST_CASE("expression errors exit nonzero with a diagnostic") {
  const Run r = run(apply_cfg(2, "e(1", "x(1)"));
  CHECK(r.status == 1);
  CHECK(r.err.find("parse error") != std::string::npos);
  CHECK(run(apply_cfg(2, "e(3)", "x(1)")).status == 1);
  CHECK(run(mul_cfg(2, "x(3)", "x(1)")).status == 1);
}

TEST_CASE("verify runs selected suites and reports status") {
  CliConfig cfg;
  cfg.command = CliConfig::Command::Verify;
  cfg.n = 2;
  cfg.max_degree = 2;
  cfg.suites = {"serre"};
  const Run text = run(cfg);
  CHECK(text.status == 0);
  CHECK(text.out.find("suite serre") != std::string::npos);
  CHECK(text.out.find("all suites passed") != std::string::npos);

  cfg.output = CliConfig::Output::Structured;
  const Run rec = run(cfg);
  CHECK(rec.status == 0);
  CHECK(rec.out.find("suite=serre\tn=2\tD=2\tid=") != std::string::npos);
  CHECK(rec.out.find("status=pass") != std::string::npos);
  CHECK(rec.out.find("failures=0") != std::string::npos);
  // structured output is deterministic
  CHECK(run(cfg).out == rec.out);
}

TEST_CASE("verify all suites at a tiny bound") {
  CliConfig cfg;
  cfg.command = CliConfig::Command::Verify;
  cfg.n = 2;
  cfg.max_degree = 1;
  cfg.suites = {"all"};
  CHECK(run(cfg).status == 0);
}
