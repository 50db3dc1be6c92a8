#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsymp/parse.hpp"
#include "qsymp/qnum.hpp"

using namespace qsymp;

namespace {

RatQ qp(std::int64_t k) { return RatQ::q_power(k); }

// Pseudo-random small rational function; den guaranteed nonzero.
RatQ random_ratq(std::mt19937& rng, bool unit_den = false) {
  auto random_laurent = [&rng](bool nonzero) {
    Laurent p;
    do {
      p = Laurent();
      const int terms = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < terms; ++t) {
        const int c = static_cast<int>(rng() % 11) - 5;
        const int k = static_cast<int>(rng() % 9) - 4;
        p += Laurent::monomial(c, k);
      }
    } while (nonzero && p.is_zero());
    return p;
  };
  if (unit_den) return RatQ(random_laurent(false));
  return RatQ(random_laurent(false), random_laurent(true));
}

}  // namespace

TEST_CASE("field operations on simple values") {
  const RatQ lam = q_lambda();
  CHECK(lam * (RatQ::q() + qp(-1)) == qp(2) - qp(-2));
  CHECK(lam.inverse() * lam == RatQ::one());
  // gcd reduction: (q^2-1)/(q-1) = q+1
  const RatQ r(Laurent::monomial(1, 2) - Laurent::constant(1),
               Laurent::monomial(1, 1) - Laurent::constant(1));
  CHECK(r == RatQ::q() + RatQ(1));
  CHECK(r.is_polynomial());
}

TEST_CASE("canonical form invariants") {
  // (q^3-q)/(q^3+q^2) reduces with the unit q^2 absorbed into the numerator
  // and a monic ordinary denominator.
  const RatQ r(Laurent::monomial(1, 3) - Laurent::monomial(1, 1),
               Laurent::monomial(1, 3) + Laurent::monomial(1, 2));
  CHECK(r.den().min_exp() == 0);
  CHECK(r.den().leading() == 1);
  CHECK(r.eval_at(Rat(2)) == (Rat(8) - 2) / (Rat(8) + 4));
  // zero has the canonical (0, 1) representation
  CHECK((r - r).is_zero());
  CHECK((r - r).den().is_one());
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(RatQ::zero().inverse(), std::domain_error);
  CHECK_THROWS_WITH(RatQ::zero().inverse(), "division by zero in Q(q)");
}

TEST_CASE("q-integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1).is_one());
  CHECK(qint(3) == qp(2) + RatQ(1) + qp(-2));
  CHECK(qint(-2) == -(RatQ::q() + qp(-1)));
  for (int m = -10; m <= 10; ++m) CHECK(qint(-m) == -qint(m));
}

TEST_CASE("q-factorials") {
  CHECK(qfact(0) == RatQ::one());
  CHECK(qfact(2) == RatQ::q() + qp(-1));
  // [1][2][3] expanded by hand
  CHECK(qfact(3) == parse_ratq("q^3+2*q+2*q^-1+q^-3"));
  CHECK_THROWS_AS(qfact(-1), std::domain_error);
}

TEST_CASE("q-binomials") {
  CHECK(qbinom(5, 0) == RatQ::one());
  CHECK(qbinom(2, 3).is_zero());
  CHECK(qbinom(2, 1) == qint(2));
  CHECK_THROWS_AS(qbinom(2, -1), std::domain_error);
}

TEST_CASE("q-binomials specialize to classical binomials at q=1") {
  // Pascal triangle as the independent oracle.
  long long pascal[9][9] = {};
  for (int m = 0; m <= 8; ++m) {
    pascal[m][0] = 1;
    for (int k = 1; k <= m; ++k)
      pascal[m][k] = pascal[m - 1][k - 1] + (k <= m - 1 ? pascal[m - 1][k] : 0);
  }
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m; ++k)
      CHECK(qbinom(m, k).eval_at(1) == Rat(pascal[m][k]));
}

TEST_CASE("exact evaluation") {
  CHECK(qint(3).eval_at(1) == 3);
  CHECK(q_lambda().eval_at(2) == Rat(3, 2));
  CHECK(qbinom(4, 2).eval_at(1) == 6);
  CHECK_THROWS_AS(qint(3).eval_at(0), std::domain_error);
  const RatQ pole(Laurent::constant(1),
                  Laurent::monomial(1, 1) - Laurent::constant(1));
  CHECK_THROWS_AS(pole.eval_at(1), std::domain_error);
}

TEST_CASE("q-number recurrences") {
  const RatQ q = RatQ::q();
  for (int m = -10; m <= 10; ++m) {
    CHECK(qint(m + 1) == q * qint(m) + qp(-m));
    CHECK(qint(m + 1) == qp(-1) * qint(m) + qp(m));
    CHECK(qbinom(m + 1, 2) - qbinom(m, 2) == qint_base(m, 2));
    CHECK(qbinom(m + 1, 2) - qp(2) * qbinom(m, 2) == qp(1 - m) * qint(m));
  }
}

TEST_CASE("base substitution") {
  CHECK(qint_base(2, 2) == qp(2) + qp(-2));
  CHECK(qbinom_base(2, 1, 2) == qint_base(2, 2));
  CHECK(qint(5).subst_power(3) == qint_base(5, 3));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(987654u);
  for (int t = 0; t < 100; ++t) {
    const RatQ a = random_ratq(rng), b = random_ratq(rng), c = random_ratq(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == RatQ::zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == RatQ::one());
  }
}

TEST_CASE("rendering and parsing round-trip") {
  std::mt19937 rng(24680u);
  std::vector<RatQ> corpus = {RatQ::zero(),
                              RatQ::one(),
                              RatQ(-1),
                              RatQ(Rat(1, 2)),
                              q_lambda(),
                              qint(5),
                              qbinom(7, 3),
                              qint(4).inverse(),
                              q_lambda() * qp(-3),
                              qint(3) / qint(2)};
  for (int t = 0; t < 20; ++t) corpus.push_back(random_ratq(rng));
  for (const RatQ& r : corpus) {
    const std::string s = r.str();
    CHECK(parse_ratq(s) == r);
    CHECK(parse_ratq(s).str() == s);
  }
  CHECK(q_lambda().str() == "q-q^-1");
  CHECK((qp(2) * q_lambda()).str() == "q^3-q");
  CHECK(qint(3).str() == "q^2+1+q^-2");
  CHECK((qint(3) / qint(2)).str() == "(q^3+q+q^-1)/(q^2+1)");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_ratq("q^"), ParseError);
  CHECK_THROWS_AS(parse_ratq("1 + "), ParseError);
  CHECK_THROWS_AS(parse_ratq("(q"), ParseError);
  CHECK_THROWS_AS(parse_ratq("q 3"), ParseError);
}
