#include "qsymp/cli.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "qsymp/parse.hpp"

namespace qsymp {

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {
      "serre", "module-algebra", "highest-weight", "root-vectors", "lemmas"};
  return names;
}

namespace {

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::set<std::string> selected;
  bool all = cfg.suites.empty();
  for (const auto& s : cfg.suites) {
    if (s == "all") {
      all = true;
    } else if (std::find(known_suites().begin(), known_suites().end(), s) !=
               known_suites().end()) {
      selected.insert(s);
    } else {
      err << "unknown suite '" << s << "'\n";
      return 2;
    }
  }
  if (all)
    selected.insert(known_suites().begin(), known_suites().end());

  const Rank n(cfg.n);
  std::vector<SuiteReport> reports;
  for (const std::string& name : known_suites()) {
    if (!selected.count(name)) continue;
    if (name == "serre") {
      reports.push_back(serre_suite(n, cfg.max_degree, cfg.jobs));
    } else if (name == "module-algebra") {
      reports.push_back(module_algebra_suite(n, cfg.max_degree, cfg.jobs));
    } else if (name == "highest-weight") {
      for (int m = 0; m <= cfg.max_degree; ++m)
        reports.push_back(highest_weight_suite(n, m));
    } else if (name == "root-vectors") {
      reports.push_back(root_vector_suite(n, cfg.max_degree, cfg.jobs));
    } else if (name == "lemmas") {
      reports.push_back(action_formula_suite(n, cfg.max_degree, cfg.jobs));
      reports.push_back(lemma_suite(n, cfg.max_degree, cfg.jobs));
    }
  }

  std::size_t failures = 0;
  for (const SuiteReport& r : reports) {
    failures += r.failure_count();
    out << (cfg.output == CliConfig::Output::Structured ? to_records(r)
                                                        : to_text(r));
  }
  if (cfg.output == CliConfig::Output::Text)
    out << (failures == 0 ? "all suites passed\n"
                          : std::to_string(failures) + " failed identities\n");
  return failures == 0 ? 0 : 1;
}

int cmd_apply(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.op_expr.empty() || cfg.elem_expr.empty()) {
    err << "apply requires --op and --elem\n";
    return 2;
  }
  const Rank n(cfg.n);
  DiffOps ops(n);
  const OpPtr op = parse_operator(cfg.op_expr, ops);
  const Element e = parse_element(cfg.elem_expr, n);
  out << act(op, e).str() << "\n";
  return 0;
}

int cmd_mul(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.lhs_expr.empty() || cfg.rhs_expr.empty()) {
    err << "mul requires two element expressions\n";
    return 2;
  }
  const Rank n(cfg.n);
  const Element a = parse_element(cfg.lhs_expr, n);
  const Element b = parse_element(cfg.rhs_expr, n);
  out << product(a, b).str() << "\n";
  return 0;
}

int cmd_roots(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  for (const RootLabel& label : enumerate_positive_roots(Rank(cfg.n)))
    out << label.str() << "\n";
  return 0;
}

}  // namespace

int run_command(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.n < 2) {
      err << "--n must be at least 2\n";
      return 2;
    }
    if (cfg.max_degree < 0) {
      err << "--max-degree must be nonnegative\n";
      return 2;
    }
    if (cfg.jobs < 1) {
      err << "--jobs must be positive\n";
      return 2;
    }
    switch (cfg.command) {
      case CliConfig::Command::Verify:
        return cmd_verify(cfg, out, err);
      case CliConfig::Command::Apply:
        return cmd_apply(cfg, out, err);
      case CliConfig::Command::Mul:
        return cmd_mul(cfg, out, err);
      case CliConfig::Command::Roots:
        return cmd_roots(cfg, out, err);
    }
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qsymp
