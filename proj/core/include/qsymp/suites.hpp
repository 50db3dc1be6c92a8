#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsymp/ops.hpp"

namespace qsymp {

/// Cartan data of sp_2n in the convention where the first simple root is the
/// long one: a_11 = 2, a_12 = -1, a_21 = -2, tridiagonal -1/2/-1 below, and
/// q_1 = q^2, q_i = q otherwise.
struct CartanData {
  int n;
  std::vector<std::vector<int>> a;
  std::vector<int> sym;  // d_i with q_i = q^{d_i}

  static CartanData for_rank(Rank n);
  int entry(int i, int j) const { return a[i - 1][j - 1]; }
  int d(int i) const { return sym[i - 1]; }
  RatQ q_i(int i) const { return RatQ::q_power(d(i)); }
};

/// Coproduct of a generator as a formal sum of operator tensor pairs;
/// drives the module-algebra law h.(ab) = sum (h1.a)(h2.b).
struct TensorTerm {
  OpPtr first;
  OpPtr second;
};
struct CoproductRule {
  std::vector<TensorTerm> terms;
};
CoproductRule coproduct_rule(DiffOps& ops, char which, int i, int exp = 1);
/// Counit: 0 on e and f, 1 on k^{+-1}.
RatQ counit(char which);

/// Outcome of one verified identity; a failing identity records the first
/// counterexample input together with both evaluated sides.
struct IdentityResult {
  std::string id;
  bool pass = false;
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  int degree = 0;
  std::vector<IdentityResult> results;
  double seconds = 0.0;

  std::size_t failure_count() const;
  bool all_pass() const { return failure_count() == 0; }
};

/// Human-readable report.
std::string to_text(const SuiteReport& report);
/// Line-delimited records with a stable field order, one per identity.
std::string to_records(const SuiteReport& report);

/// Defining relations of U_q(sp_2n) for the operator realization, including
/// the equivalent bracket forms of the rank-2 Serre relations.
SuiteReport serre_suite(Rank n, int max_degree, int jobs = 1);

/// Chevalley operators against their closed per-monomial action formulas.
SuiteReport action_formula_suite(Rank n, int max_degree, int jobs = 1);

/// Module-algebra laws on all monomial pairs up to the degree bound.
SuiteReport module_algebra_suite(Rank n, int max_degree, int jobs = 1);

/// Highest-weight checks for the degree-m slice: annihilation by all e_i,
/// k-eigenvalues, and the dimension of the f-closure of x_{-n}^m.
SuiteReport highest_weight_suite(Rank n, int m);

/// Closed vs recursive construction for every positive-root operator,
/// simple-root identifications, adjoint k-weights, and the explicit action
/// of the (1,2) root operator.
SuiteReport root_vector_suite(Rank n, int max_degree, int jobs = 1);

/// Commutation-lemma battery for the twisted operators, Phi/Psi and the
/// extended right multiplications, plus the bracket-calculus self-tests and
/// both Phi/Psi construction routes.
SuiteReport lemma_suite(Rank n, int max_degree, int jobs = 1);

/// Closed per-monomial action of e_i / f_i / k_i (which = 'e', 'f', 'k').
Element closed_action(char which, int i, const Monomial& a);
/// Closed per-monomial action of the (1,2) root operator.
Element closed_action_e12(const Monomial& a);

}  // namespace qsymp
