#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsymp/rational.hpp"

namespace qsymp {

/// Sparse Laurent polynomial in q with rational coefficients.
///
/// Terms are kept sorted by ascending exponent and never store a zero
/// coefficient; the zero polynomial is the empty term list. Exponents are
/// 64-bit and checked: overflow throws instead of wrapping.
class Laurent {
 public:
  using Exp = std::int64_t;
  using Term = std::pair<Exp, Rat>;

  Laurent() = default;

  static Laurent constant(Rat c);
  /// c * q^k
  static Laurent monomial(Rat c, Exp k);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Lowest/highest exponent; both require a nonzero polynomial.
  Exp min_exp() const;
  Exp max_exp() const;
  /// Coefficient of the highest-exponent term.
  const Rat& leading() const;
  const std::vector<Term>& terms() const { return terms_; }

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

  /// Multiply by the single term c * q^k.
  Laurent scaled(const Rat& c, Exp k = 0) const;
  /// Multiply by q^k.
  Laurent shifted(Exp k) const { return scaled(Rat(1), k); }
  /// Substitute q -> q^s (s >= 1); exponents are scaled by s.
  Laurent subst_power(int s) const;

  /// Exact evaluation at a nonzero rational point.
  Rat eval(const Rat& q0) const;

  /// Rendering in descending exponent order: "q^3-q", "q^2+1+q^-2",
  /// "1/2*q-3", "0".
  std::string str() const;

  /// Quotient and remainder of ordinary polynomial division (both operands
  /// must have min_exp >= 0; divisor nonzero).
  static std::pair<Laurent, Laurent> divmod(const Laurent& a, const Laurent& b);
  /// Monic gcd of the ordinary-polynomial parts (Laurent units q^k ignored).
  static Laurent gcd(const Laurent& a, const Laurent& b);
  /// Exact division; throws if the division leaves a remainder.
  static Laurent div_exact(const Laurent& a, const Laurent& b);

 private:
  explicit Laurent(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

}  // namespace qsymp
