#include "qsymp/ratq.hpp"

#include <stdexcept>
#include <utility>

namespace qsymp {

RatQ::RatQ(const Rat& v) : num_(Laurent::constant(v)) {}

RatQ::RatQ(Laurent num) : num_(std::move(num)) {}

RatQ::RatQ(Laurent num, Laurent den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero in Q(q)");
  canonicalize();
}

void RatQ::canonicalize() {
  if (num_.is_zero()) {
    den_ = Laurent::constant(1);
    return;
  }
  // Absorb the q^k unit of the denominator into the numerator, so den_ is an
  // ordinary polynomial with nonzero constant term.
  const auto shift = den_.min_exp();
  if (shift != 0) {
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
  }
  if (!den_.is_one()) {
    const Laurent g = Laurent::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Laurent::div_exact(num_, g);
      den_ = Laurent::div_exact(den_, g);
    }
    const Rat& lc = den_.leading();
    if (lc != 1) {
      const Rat inv = Rat(1) / lc;
      den_ = den_.scaled(inv);
      num_ = num_.scaled(inv);
    }
  }
}

const RatQ& RatQ::zero() {
  static const RatQ v;
  return v;
}

const RatQ& RatQ::one() {
  static const RatQ v(1);
  return v;
}

const RatQ& RatQ::q() {
  static const RatQ v(Laurent::monomial(1, 1));
  return v;
}

RatQ RatQ::q_power(std::int64_t k) { return RatQ(Laurent::monomial(1, k)); }

RatQ RatQ::operator-() const {
  RatQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatQ RatQ::operator+(const RatQ& o) const {
  RatQ r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    if (r.num_.is_zero())
      r.den_ = Laurent::constant(1);
    else if (!r.den_.is_one())
      r.canonicalize();
    return r;
  }
  r.num_ = num_ * o.den_ + o.num_ * den_;
  r.den_ = den_ * o.den_;
  r.canonicalize();
  return r;
}

RatQ RatQ::operator-(const RatQ& o) const { return *this + (-o); }

RatQ RatQ::operator*(const RatQ& o) const {
  RatQ r;
  r.num_ = num_ * o.num_;
  r.den_ = den_ * o.den_;
  if (!r.den_.is_one()) r.canonicalize();
  return r;
}

RatQ RatQ::operator/(const RatQ& o) const { return *this * o.inverse(); }

RatQ RatQ::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(q)");
  RatQ r;
  r.num_ = den_;
  r.den_ = num_;
  r.canonicalize();
  return r;
}

RatQ RatQ::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  RatQ acc = one(), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

RatQ RatQ::subst_power(int s) const {
  RatQ r;
  r.num_ = num_.subst_power(s);
  r.den_ = den_.subst_power(s);
  if (!r.den_.is_one()) r.canonicalize();
  return r;
}

Rat RatQ::eval_at(const Rat& q0) const {
  if (q0 == 0) throw std::domain_error("evaluation at q = 0");
  const Rat d = den_.eval(q0);
  if (d == 0) throw std::domain_error("pole at q = " + rat_str(q0));
  return num_.eval(q0) / d;
}

std::string RatQ::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qsymp
