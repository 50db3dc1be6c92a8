#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsymp/parse.hpp"
#include "qsymp/suites.hpp"

using namespace qsymp;

namespace {

const Rank n2(2);
const Rank n3(3);

Element elem(const std::string& s, Rank n = n2) { return parse_element(s, n); }

}  // namespace

TEST_CASE("generator actions") {
  CHECK(generator_action(GeneratorOp::partial(1), elem("x(1)^2")) ==
        elem("(q+q^-1) * x(1)"));
  CHECK(generator_action(GeneratorOp::partial(2), elem("x(1)")).is_zero());
  CHECK(generator_action(GeneratorOp::mu(-1, 1), elem("x(-1)x(1)")) ==
        elem("q * x(-1)x(1)"));
  CHECK(generator_action(GeneratorOp::mu(1, -1), elem("x(1)")) ==
        elem("q^-1 * x(1)"));
  CHECK_THROWS_AS(GeneratorOp::mu(1, 2), std::invalid_argument);
}

TEST_CASE("expression tree evaluation") {
  DiffOps ops(n2);
  const Element one = Element::unit(n2);
  CHECK(act(make_compose({ops.partial(1), ops.mul_left(1)}), one) == one);
  CHECK(act(make_scale(q_lambda(), ops.mu(1)), elem("x(1)")) ==
        elem("x(1)").scaled(q_lambda() * RatQ::q()));
  CHECK(act(zero_op(), elem("x(1)")).is_zero());
  CHECK(act(identity_op(), elem("x(1)")) == elem("x(1)"));

  // [d(-1), xl(-1)]_{q^2} on 1, evaluated from both summands.
  const OpPtr br =
      make_bracket(ops.partial(-1), ops.mul_left(-1), RatQ::q_power(2));
  const Element direct =
      generator_action(GeneratorOp::partial(-1),
                       generator_action(GeneratorOp::left_mul(-1), one)) -
      generator_action(
          GeneratorOp::left_mul(-1),
          generator_action(GeneratorOp::partial(-1), one))
          .scaled(RatQ::q_power(2));
  CHECK(act(br, one) == direct);
  CHECK(act(br, one) == one);
}

TEST_CASE("chevalley operators") {
  DiffOps ops(n2);
  // locks the composition order: the rightmost factor acts first
  CHECK(act(ops.chevalley('e', 1), elem("x(1)")) == elem("x(-1)"));
  CHECK(act(ops.chevalley('k', 1), elem("x(-1)")) == elem("q^2 * x(-1)"));
  CHECK(act(ops.chevalley('e', 2), elem("x(2)")) == elem("-1 * x(1)"));
  CHECK(act(ops.chevalley('f', 1), elem("x(-1)")) == elem("x(1)"));
  CHECK_THROWS_AS(ops.chevalley('e', 0), std::out_of_range);
  CHECK_THROWS_AS(ops.chevalley('x', 1), std::invalid_argument);
  CHECK_THROWS_AS(ops.chevalley('e', 1, -1), std::invalid_argument);
}

TEST_CASE("auxiliary operators") {
  DiffOps ops(n2);
  const Element one = Element::unit(n2);
  CHECK(op_equal_up_to(ops.psi(3), zero_op(), n2, 3));
  CHECK(op_equal_up_to(ops.phi(0), zero_op(), n2, 3));
  CHECK(act(ops.psi(2), one) == elem("q^2 * x(-2)x(2)"));
  // pins the same convention through the q-bracket with the twisted partial
  CHECK(act(make_bracket(ops.twisted_partial(2), ops.psi(2), RatQ::q()),
            one) == act(make_scale(RatQ::q(), ops.twisted_left(-2)), one));
  CHECK_THROWS_AS(ops.psi(0), std::out_of_range);
  CHECK_THROWS_AS(ops.phi(3), std::out_of_range);
  CHECK_THROWS_AS(ops.twisted_left(1), std::out_of_range);
}

TEST_CASE("positive-root labels") {
  const auto l2 = enumerate_positive_roots(n2);
  REQUIRE(l2.size() == 4);
  CHECK(l2[0] == RootLabel(1, 1));
  CHECK(l2[1] == RootLabel(1, 2));
  CHECK(l2[2] == RootLabel(2, 2));
  CHECK(l2[3] == RootLabel(-1, 2));
  const auto l3 = enumerate_positive_roots(n3);
  REQUIRE(l3.size() == 9);
  CHECK(l3[4] == RootLabel(2, 3));
  CHECK(l3[7] == RootLabel(-1, 3));
  CHECK(l3[8] == RootLabel(-2, 3));
  CHECK(enumerate_positive_roots(Rank(4)).size() == 16);
  CHECK(RootLabel(1, 2).str() == "E(+,1,2)");
  CHECK(RootLabel(-1, 2).str() == "E(-,1,2)");
  CHECK_THROWS_AS(RootLabel(-2, 2), std::invalid_argument);
  CHECK_THROWS_AS(RootLabel(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(RootLabel(3, 2), std::invalid_argument);
}

TEST_CASE("root labels expand in the simple-root basis") {
  CHECK(RootLabel(1, 1).simple_coordinates(3) == std::vector<int>{1, 0, 0});
  CHECK(RootLabel(2, 2).simple_coordinates(3) == std::vector<int>{1, 2, 0});
  CHECK(RootLabel(1, 3).simple_coordinates(3) == std::vector<int>{1, 1, 1});
  CHECK(RootLabel(-1, 3).simple_coordinates(3) == std::vector<int>{0, 1, 1});
}

TEST_CASE("root operators") {
  DiffOps ops(n2);
  CHECK(act(ops.root_vector(RootLabel(1, 2), RootBuild::Recursive),
            elem("x(1)")) == elem("-q^2 * x(-2)"));
  CHECK(op_equal_up_to(ops.root_vector(RootLabel(-1, 2), RootBuild::Closed),
                       ops.chevalley('e', 2), n2, 3));
  CHECK(op_equal_up_to(ops.root_vector(RootLabel(2, 2), RootBuild::Closed),
                       ops.root_vector(RootLabel(2, 2), RootBuild::Recursive),
                       n2, 3));
  CHECK_THROWS_AS(ops.root_vector(RootLabel(1, 3), RootBuild::Closed),
                  std::out_of_range);
}

TEST_CASE("named operators are memoized and shared") {
  DiffOps ops(n3);
  CHECK(ops.psi(2).get() == ops.psi(2).get());
  CHECK(ops.chevalley('e', 3).get() == ops.chevalley('e', 3).get());
  CHECK(ops.root_vector(RootLabel(3, 3), RootBuild::Recursive).get() ==
        ops.root_vector(RootLabel(3, 3), RootBuild::Recursive).get());
}

TEST_CASE("degree-bounded operator comparison") {
  DiffOps ops(n2);
  CHECK(op_equal_up_to(ops.partial(1), ops.partial(1), n2, 4));
  CHECK(op_equal_up_to(make_compose({ops.mu(1), ops.mu(2)}),
                       make_compose({ops.mu(2), ops.mu(1)}), n2, 4));
  const OpPtr e12 =
      make_bracket(ops.chevalley('e', 1), ops.chevalley('e', 2),
                   RatQ::q_power(2));
  CHECK(op_equal_up_to(
      make_bracket(ops.chevalley('e', 1), e12, RatQ::q_power(-2)), zero_op(),
      n2, 4));

  const auto mm = first_mismatch(ops.partial(1), zero_op(), n2, 2);
  REQUIRE(mm.has_value());
  CHECK(mm->input.str() == "x(1)");
  CHECK(mm->lhs == Element::unit(n2));
  CHECK(mm->rhs.is_zero());
}

TEST_CASE("operator grammar") {
  DiffOps ops(n2);
  auto run = [&](const std::string& expr, const std::string& on) {
    return act(parse_operator(expr, ops), elem(on));
  };
  CHECK(run("e(1)", "x(1)") == elem("x(-1)"));
  CHECK(run("q^2 * e(1)", "x(1)") == elem("q^2 * x(-1)"));
  CHECK(run("d(1)*xl(1)", "1") == elem("1"));
  CHECK(run("br(e(1),f(1))", "x(1)") == elem("-1 * x(1)"));
  CHECK(run("br(d(-1),xl(-1),q^2)", "1") == elem("1"));
  CHECK(run("E(-,1,2)", "x(2)") ==
        act(ops.chevalley('e', 2), elem("x(2)")));
  CHECK(run("mu(1)*mu_inv(1)", "x(1)") == elem("x(1)"));
  CHECK(run("Psi(2)", "1") == elem("q^2 * x(-2)x(2)"));
  CHECK(run("Phi(1)*Psi(1)", "1") == run("Phi(1)", run("Psi(1)", "1").str()));
  CHECK(run("e(1) + f(1)", "x(1)") == elem("x(-1)"));
  CHECK(run("k(1) - k_inv(1)", "x(1)") == elem("(q^-2-q^2) * x(1)"));
  CHECK(run("(q^3-q) * xr(2)", "1") == elem("(q^3-q) * x(2)"));
  CHECK(run("(e(1) + e(2)) * xl(2)", "x(1)") ==
        act(ops.chevalley('e', 1) , act(ops.mul_left(2), elem("x(1)"))) +
            act(ops.chevalley('e', 2), act(ops.mul_left(2), elem("x(1)"))));
  CHECK_THROWS_AS(parse_operator("e(0)", ops), std::out_of_range);
  CHECK_THROWS_AS(parse_operator("nosuch(1)", ops), ParseError);
  CHECK_THROWS_AS(parse_operator("e(1) e(2)", ops), ParseError);
  CHECK_THROWS_AS(parse_operator("E(1,2)", ops), ParseError);
}
