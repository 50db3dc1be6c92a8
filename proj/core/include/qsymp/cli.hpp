#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsymp/suites.hpp"

namespace qsymp {

/// Parsed command-line configuration; run_command executes it.
struct CliConfig {
  enum class Command { Verify, Apply, Mul, Roots };
  enum class Output { Text, Structured };

  Command command = Command::Verify;
  int n = 2;
  int max_degree = 3;
  /// Subset of {serre, module-algebra, highest-weight, root-vectors,
  /// lemmas}, or the single entry "all" (the default when empty).
  std::vector<std::string> suites;
  Output output = Output::Text;
  std::string op_expr;
  std::string elem_expr;
  std::string lhs_expr;
  std::string rhs_expr;
  int jobs = 1;
};

/// Runs one command, writing results to out and diagnostics to err.
/// Returns 0 on success (for verify: all identities passed), 1 on failed
/// identities or evaluation errors, 2 on usage errors.
int run_command(const CliConfig& config, std::ostream& out, std::ostream& err);

/// The canonical suite order used by verify.
const std::vector<std::string>& known_suites();

}  // namespace qsymp
