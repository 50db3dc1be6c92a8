#include "qsymp/qnum.hpp"

#include <stdexcept>
#include <vector>

namespace qsymp {

const RatQ& q_lambda() {
  static const RatQ v =
      RatQ(Laurent::monomial(1, 1) - Laurent::monomial(1, -1));
  return v;
}

RatQ qint(std::int64_t m) {
  // [m]_q = q^{m-1} + q^{m-3} + ... + q^{1-m} for m > 0.
  if (m == 0) return RatQ::zero();
  if (m < 0) return -qint(-m);
  static const int kCacheSize = 64;
  static const std::vector<RatQ> cache = [] {
    std::vector<RatQ> c(kCacheSize);
    for (int v = 0; v < kCacheSize; ++v) {
      Laurent p;
      for (std::int64_t k = v - 1; k >= 1 - v; k -= 2)
        p += Laurent::monomial(1, k);
      c[v] = RatQ(p);
    }
    return c;
  }();
  if (m < kCacheSize) return cache[static_cast<int>(m)];
  Laurent p;
  for (std::int64_t k = m - 1; k >= 1 - m; k -= 2)
    p += Laurent::monomial(1, k);
  return RatQ(p);
}

RatQ qfact(std::int64_t m) {
  if (m < 0) throw std::domain_error("q-factorial of a negative integer");
  RatQ acc = RatQ::one();
  for (std::int64_t t = 2; t <= m; ++t) acc *= qint(t);
  return acc;
}

RatQ qbinom(std::int64_t m, std::int64_t k) {
  if (k < 0) throw std::domain_error("q-binomial with negative lower index");
  RatQ num = RatQ::one();
  for (std::int64_t t = 0; t < k; ++t) {
    num *= qint(m - t);
    if (num.is_zero()) return num;
  }
  return num / qfact(k);
}

RatQ qint_base(std::int64_t m, int s) { return qint(m).subst_power(s); }

RatQ qbinom_base(std::int64_t m, std::int64_t k, int s) {
  return qbinom(m, k).subst_power(s);
}

}  // namespace qsymp
