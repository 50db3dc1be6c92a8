// Command-line front end: verification suites, operator application and
// normal-form products for the quantum symplectic space.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "qsymp/cli.hpp"

namespace {

void add_rank_option(CLI::App* cmd, qsymp::CliConfig& cfg) {
  cmd->add_option("--n", cfg.n, "rank n of sp_2n (n >= 2)")
      ->default_val(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the quantum differential-operator "
               "realization on quantum symplectic space"};
  app.require_subcommand(1);

  qsymp::CliConfig cfg;
  std::string output = "text";
  std::vector<std::string> suite_args;
  std::vector<std::string> positional;

  CLI::App* verify =
      app.add_subcommand("verify", "run verification suites");
  add_rank_option(verify, cfg);
  verify->add_option("--max-degree", cfg.max_degree,
                     "degree bound for identity sweeps")
      ->default_val(3);
  verify
      ->add_option("--suites", suite_args,
                   "comma-separated subset of serre,module-algebra,"
                   "highest-weight,root-vectors,lemmas (default: all)")
      ->delimiter(',');
  verify->add_option("--output", output, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->default_val("text");
  verify->add_option("--jobs", cfg.jobs, "parallel workers")
      ->envname("QSYMP_JOBS")
      ->default_val(1);

  CLI::App* apply =
      app.add_subcommand("apply", "apply an operator expression to an element");
  add_rank_option(apply, cfg);
  apply->add_option("--op", cfg.op_expr, "operator expression")->required();
  apply->add_option("--elem", cfg.elem_expr, "element expression")->required();

  CLI::App* mul = app.add_subcommand("mul", "normal form of a product");
  add_rank_option(mul, cfg);
  mul->add_option("--lhs", cfg.lhs_expr, "left factor");
  mul->add_option("--rhs", cfg.rhs_expr, "right factor");
  mul->add_option("elements", positional, "left and right factors");

  CLI::App* roots =
      app.add_subcommand("roots", "list the positive-root labels");
  add_rank_option(roots, cfg);

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) {
    cfg.command = qsymp::CliConfig::Command::Verify;
    cfg.suites = suite_args;
    cfg.output = output == "structured" ? qsymp::CliConfig::Output::Structured
                                        : qsymp::CliConfig::Output::Text;
  } else if (apply->parsed()) {
    cfg.command = qsymp::CliConfig::Command::Apply;
  } else if (mul->parsed()) {
    cfg.command = qsymp::CliConfig::Command::Mul;
    if (cfg.lhs_expr.empty() && positional.size() >= 1)
      cfg.lhs_expr = positional[0];
    if (cfg.rhs_expr.empty() && positional.size() >= 2)
      cfg.rhs_expr = positional[1];
  } else if (roots->parsed()) {
    cfg.command = qsymp::CliConfig::Command::Roots;
  }

  return qsymp::run_command(cfg, std::cout, std::cerr);
}
