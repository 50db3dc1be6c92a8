#pragma once

#include <cstdint>
#include <string>

#include "qsymp/laurent.hpp"

namespace qsymp {

/// Element of the field Q(q) of rational functions in q.
///
/// Canonical form: num/den with gcd(num, den) = 1, den an ordinary
/// polynomial (nonzero constant term, any q^k unit absorbed into num) made
/// monic. Equality of canonical forms is plain structural equality, so
/// identity checks reduce to zero tests. Values are immutable and safe to
/// share across threads.
class RatQ {
 public:
  RatQ() = default;  // zero
  RatQ(int v) : RatQ(Rat(v)) {}
  RatQ(const Rat& v);
  explicit RatQ(Laurent num);
  RatQ(Laurent num, Laurent den);

  static const RatQ& zero();
  static const RatQ& one();
  /// The indeterminate q.
  static const RatQ& q();
  /// q^k for any integer k.
  static RatQ q_power(std::int64_t k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  RatQ operator-() const;
  RatQ operator+(const RatQ& o) const;
  RatQ operator-(const RatQ& o) const;
  RatQ operator*(const RatQ& o) const;
  RatQ operator/(const RatQ& o) const;
  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
  bool operator==(const RatQ& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatQ& o) const { return !(*this == o); }

  /// Field inverse; throws std::domain_error on zero.
  RatQ inverse() const;
  /// Integer power, negative exponents allowed for nonzero values.
  RatQ pow(std::int64_t e) const;

  /// Substitute q -> q^s (s >= 1).
  RatQ subst_power(int s) const;

  /// Exact evaluation at q0 != 0; throws std::domain_error on a pole.
  Rat eval_at(const Rat& q0) const;

  /// "q^2", "q-q^-1", "(q^2+1)/(q^2+q+1)", "0", ...
  std::string str() const;

 private:
  void canonicalize();
  Laurent num_;                         // zero: empty
  Laurent den_ = Laurent::constant(1);  // monic, min_exp 0
};

inline RatQ operator*(const Rat& c, const RatQ& r) { return RatQ(c) * r; }

}  // namespace qsymp
