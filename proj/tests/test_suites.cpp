#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsymp/parse.hpp"
#include "qsymp/suites.hpp"

using namespace qsymp;

namespace {
const Rank n2(2);
const Rank n3(3);
}  // namespace

TEST_CASE("cartan data") {
  const CartanData cd = CartanData::for_rank(n3);
  CHECK(cd.entry(1, 1) == 2);
  CHECK(cd.entry(1, 2) == -1);
  CHECK(cd.entry(2, 1) == -2);
  CHECK(cd.entry(2, 3) == -1);
  CHECK(cd.entry(3, 2) == -1);
  CHECK(cd.entry(1, 3) == 0);
  CHECK(cd.q_i(1) == RatQ::q_power(2));
  CHECK(cd.q_i(2) == RatQ::q());
}

TEST_CASE("coproduct rules and counit") {
  DiffOps ops(n2);
  CHECK(coproduct_rule(ops, 'e', 1).terms.size() == 2);
  CHECK(coproduct_rule(ops, 'k', 1).terms.size() == 1);
  CHECK(counit('e').is_zero());
  CHECK(counit('k').is_one());
}

TEST_CASE("closed action formulas at small examples") {
  DiffOps ops(n2);
  const Monomial x1 = parse_element("x(1)", n2).terms().begin()->first;
  CHECK(closed_action('e', 1, x1) == parse_element("x(-1)", n2));
  CHECK(closed_action('k', 1, x1) == parse_element("q^-2 * x(1)", n2));
  CHECK(closed_action_e12(x1) == parse_element("-q^2 * x(-2)", n2));
  // e_1 . x_1^2 carries the quadratic correction term
  const Monomial x1sq = parse_element("x(1)^2", n2).terms().begin()->first;
  CHECK(closed_action('e', 1, x1sq) ==
        parse_element("(q^2+q^-2) * x(-1)x(1) + (q^3-q) * x(-2)x(2)", n2));
}

TEST_CASE("commutator of e and f reproduces the weight operator") {
  DiffOps ops(n2);
  const OpPtr br = make_bracket(ops.chevalley('e', 1), ops.chevalley('f', 1));
  CHECK(act(br, parse_element("x(1)", n2)) ==
        parse_element("-1 * x(1)", n2));
  CHECK(act(br, parse_element("x(-1)", n2)) ==
        parse_element("x(-1)", n2));
}

TEST_CASE("module-algebra law spelled out on a pair") {
  DiffOps ops(n2);
  const Element a = parse_element("x(1)", n2);
  const Element lhs =
      act(ops.chevalley('e', 1), product(a, a));
  const Element rhs =
      product(act(ops.chevalley('e', 1), a), act(ops.chevalley('k', 1), a)) +
      product(a, act(ops.chevalley('e', 1), a));
  CHECK(lhs == rhs);
}

TEST_CASE("suites pass at small bounds") {
  CHECK(serre_suite(n2, 2).all_pass());
  CHECK(module_algebra_suite(n2, 2).all_pass());
  CHECK(action_formula_suite(n2, 2).all_pass());
  CHECK(root_vector_suite(n2, 2).all_pass());
  CHECK(lemma_suite(n2, 2).all_pass());
}

TEST_CASE("highest weight checks") {
  const SuiteReport r0 = highest_weight_suite(n2, 0);
  CHECK(r0.all_pass());
  const SuiteReport r2 = highest_weight_suite(n2, 2);
  CHECK(r2.all_pass());
  CHECK(r2.degree == 2);
}

TEST_CASE("parallel execution is deterministic") {
  const SuiteReport a = serre_suite(n2, 2, 1);
  const SuiteReport b = serre_suite(n2, 2, 4);
  CHECK(to_records(a) == to_records(b));
}

TEST_CASE("report serialization") {
  SuiteReport r;
  r.suite = "demo";
  r.n = 2;
  r.degree = 3;
  r.results.push_back({"a=b", true, "", "", ""});
  r.results.push_back({"c=d", false, "x(1)", "x(1)", "0"});
  r.seconds = 0.25;
  CHECK(to_records(r) ==
        "suite=demo\tn=2\tD=3\tid=a=b\tstatus=pass\n"
        "suite=demo\tn=2\tD=3\tid=c=d\tstatus=fail\tinput=x(1)\tlhs=x(1)\t"
        "rhs=0\n"
        "suite=demo\tn=2\tD=3\tidentities=2\tfailures=1\n");
  CHECK(r.failure_count() == 1);
  CHECK(!r.all_pass());
  const std::string text = to_text(r);
  CHECK(text.find("[ ok ] a=b") != std::string::npos);
  CHECK(text.find("[FAIL] c=d") != std::string::npos);
}

TEST_CASE("suites detect broken identities") {
  // A deliberately wrong pairing: e_1 against the closed form of e_2.
  DiffOps ops(n2);
  const auto mm =
      first_mismatch(ops.chevalley('e', 1), ops.chevalley('e', 2), n2, 2);
  REQUIRE(mm.has_value());
  CHECK(mm->input.degree() <= 2);
  CHECK(!(mm->lhs == mm->rhs));
}
