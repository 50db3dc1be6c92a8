#include "qsymp/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qsymp {

namespace {

Laurent::Exp checked_add(Laurent::Exp a, Laurent::Exp b) {
  Laurent::Exp r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("q-exponent overflow");
  return r;
}

Laurent::Exp checked_mul(Laurent::Exp a, Laurent::Exp b) {
  Laurent::Exp r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("q-exponent overflow");
  return r;
}

}  // namespace

Laurent Laurent::constant(Rat c) { return monomial(std::move(c), 0); }

Laurent Laurent::monomial(Rat c, Exp k) {
  Laurent p;
  if (c != 0) p.terms_.emplace_back(k, std::move(c));
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Laurent::Exp Laurent::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.front().first;
}

Laurent::Exp Laurent::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.back().first;
}

const Rat& Laurent::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero");
  return terms_.back().second;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rat c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a, ++b;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, o.terms_.end());
  return Laurent(std::move(out));
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return Laurent();
  if (o.is_monomial()) return scaled(o.terms_[0].second, o.terms_[0].first);
  if (is_monomial()) return o.scaled(terms_[0].second, terms_[0].first);
  std::map<Exp, Rat> acc;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) acc[checked_add(ka, kb)] += ca * cb;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) out.emplace_back(k, std::move(c));
  return Laurent(std::move(out));
}

Laurent Laurent::scaled(const Rat& c, Exp k) const {
  if (c == 0) return Laurent();
  Laurent r = *this;
  for (auto& [e, v] : r.terms_) {
    e = checked_add(e, k);
    v *= c;
  }
  return r;
}

Laurent Laurent::subst_power(int s) const {
  if (s < 1) throw std::domain_error("subst_power requires s >= 1");
  Laurent r = *this;
  for (auto& [e, v] : r.terms_) e = checked_mul(e, s);
  return r;
}

Rat Laurent::eval(const Rat& q0) const {
  if (q0 == 0) throw std::domain_error("evaluation of Laurent polynomial at 0");
  Rat acc = 0;
  for (const auto& [k, c] : terms_) {
    Rat p = 1;
    const Int& nu = numerator(q0);
    const Int& de = denominator(q0);
    Exp e = k < 0 ? -k : k;
    Int pn = 1, pd = 1;
    for (Exp t = 0; t < e; ++t) {
      pn *= nu;
      pd *= de;
    }
    p = k < 0 ? Rat(pd, pn) : Rat(pn, pd);
    acc += c * p;
  }
  return acc;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (it == terms_.rbegin()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (k == 0) {
      out += rat_str(a);
    } else {
      if (a != 1) out += rat_str(a) + "*";
      out += k == 1 ? "q" : "q^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<Laurent, Laurent> Laurent::divmod(const Laurent& a,
                                            const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if ((!a.is_zero() && a.min_exp() < 0) || b.min_exp() < 0)
    throw std::domain_error("divmod expects ordinary polynomials");
  Laurent quot, rem = a;
  while (!rem.is_zero() && rem.max_exp() >= b.max_exp()) {
    Laurent t =
        monomial(rem.leading() / b.leading(), rem.max_exp() - b.max_exp());
    quot += t;
    rem -= b * t;
  }
  return {quot, rem};
}

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
  auto ordinary_monic = [](const Laurent& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rat(1) / p.leading(), -p.min_exp());
  };
  Laurent r0 = ordinary_monic(a), r1 = ordinary_monic(b);
  while (!r1.is_zero()) {
    Laurent r = divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = ordinary_monic(r);
  }
  return r0.is_zero() ? constant(1) : r0;
}

Laurent Laurent::div_exact(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return a;
  // Shift both to ordinary polynomials; the net q-shift survives in the
  // quotient since q^k is a unit.
  const Exp sa = a.min_exp(), sb = b.min_exp();
  auto [quot, rem] = divmod(a.shifted(-sa), b.shifted(-sb));
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return quot.shifted(sa - sb);
}

}  // namespace qsymp
