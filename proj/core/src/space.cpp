#include "qsymp/space.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qsymp {

Rank::Rank(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
}

bool index_in_range(int n, int k) { return k != 0 && k >= -n && k <= n; }

int index_position(int n, int k) {
  if (!index_in_range(n, k))
    throw std::out_of_range("generator index " + std::to_string(k) +
                            " out of range for rank " + std::to_string(n));
  return k < 0 ? k + n : k + n - 1;
}

int position_index(int n, int pos) { return pos < n ? pos - n : pos - n + 1; }

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty() || exps_.size() % 2 != 0 || exps_.size() < 4)
    throw std::invalid_argument("exponent vector must have size 2n, n >= 2");
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

Monomial Monomial::raised(int index, int delta) const {
  Monomial m = *this;
  int& e = m.exps_[index_position(rank(), index)];
  e += delta;
  if (e < 0) throw std::invalid_argument("monomial exponent went negative");
  return m;
}

std::string Monomial::str() const {
  if (degree() == 0) return "1";
  std::string out;
  const int n = rank();
  for (std::size_t p = 0; p < exps_.size(); ++p) {
    if (exps_[p] == 0) continue;
    out += "x(" + std::to_string(position_index(n, static_cast<int>(p))) + ")";
    if (exps_[p] > 1) out += "^" + std::to_string(exps_[p]);
  }
  return out;
}

Element Element::unit(Rank n) {
  Element e(n);
  e.terms_.emplace(Monomial(n), RatQ::one());
  return e;
}

Element Element::generator(Rank n, int k) {
  Element e(n);
  e.terms_.emplace(Monomial(n).raised(k, 1), RatQ::one());
  return e;
}

Element Element::from_monomial(const Monomial& m, RatQ c) {
  Element e{Rank(m.rank())};
  if (!c.is_zero()) e.terms_.emplace(m, std::move(c));
  return e;
}

void Element::add_term(const Monomial& m, const RatQ& c) {
  if (c.is_zero()) return;
  if (m.rank() != n_) throw std::invalid_argument("rank mismatch in add_term");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch in addition");
  Element r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Element Element::operator-(const Element& o) const {
  return *this + o.scaled(RatQ(-1));
}

Element Element::scaled(const RatQ& c) const {
  Element r{Rank(n_)};
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

const RatQ& Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatQ::zero() : it->second;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  auto coeff_str = [](const RatQ& c) {
    std::string s = c.str();
    if (c.is_polynomial() && c.num().terms().size() > 1) return "(" + s + ")";
    return s;
  };
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (m.degree() == 0)
      out += coeff_str(c);
    else if (c.is_one())
      out += m.str();
    else
      out += coeff_str(c) + " * " + m.str();
  }
  return out;
}

namespace {

// Sum of exponents a_j over j in I with lo <= j <= hi (inclusive, 0 skipped).
int exp_range_sum(const Monomial& m, int lo, int hi) {
  const int n = m.rank();
  int s = 0;
  for (int j = std::max(lo, -n); j <= std::min(hi, n); ++j)
    if (j != 0) s += m.exp(j);
  return s;
}

// Omega_i * x^b in normal form:
//   q^{2 sum_{l <= -i} b_l} sum_{j=i}^{n} q^{j-i + sum_{|l| < j} b_l}
//     x^{b + eps_{-j} + eps_j}
void accumulate_omega_times(Element& out, int i, const Monomial& b,
                            const RatQ& scale) {
  const int n = b.rank();
  if (i == n + 1) return;  // empty sum
  const int outer = 2 * exp_range_sum(b, -n, -i);
  for (int j = i; j <= n; ++j) {
    const int inner = (j - i) + exp_range_sum(b, 1 - j, j - 1);
    out.add_term(b.raised(-j, 1).raised(j, 1),
                 scale * RatQ::q_power(outer + inner));
  }
}

}  // namespace

Element left_mul_gen(int k, const Element& e) {
  const int n = e.rank();
  if (!index_in_range(n, k))
    throw std::out_of_range("generator index out of range");
  Element out{Rank(n)};
  if (k < 0) {
    const int i = -k;
    for (const auto& [a, c] : e.terms()) {
      // x_{-i} x^a = q^{sum_{j < -i} a_j} x^{a + eps_{-i}}
      out.add_term(a.raised(-i, 1),
                   c * RatQ::q_power(exp_range_sum(a, -n, -i - 1)));
    }
    return out;
  }
  const int i = k;
  for (const auto& [a, c] : e.terms()) {
    // x_i x^a: straight term picks up q^{a_j} per j < i plus an extra
    // q^{a_{-i}}; the correction term carries Omega_{i+1}.
    out.add_term(a.raised(i, 1), c * RatQ::q_power(exp_range_sum(a, -n, i - 1) +
                                                   a.exp(-i)));
    if (a.exp(-i) > 0) {
      const RatQ scale =
          c * q_lambda() * qint(a.exp(-i)) *
          RatQ::q_power(a.exp(-i) + 1 - exp_range_sum(a, -n, -i - 1));
      accumulate_omega_times(out, i + 1, a.raised(-i, -1), scale);
    }
  }
  return out;
}

Element right_mul_gen(int k, const Element& e) {
  const int n = e.rank();
  if (!index_in_range(n, k))
    throw std::out_of_range("generator index out of range");
  Element out{Rank(n)};
  if (k > 0) {
    const int i = k;
    for (const auto& [a, c] : e.terms()) {
      // x^a x_i = q^{sum_{j > i} a_j} x^{a + eps_i}
      out.add_term(a.raised(i, 1),
                   c * RatQ::q_power(exp_range_sum(a, i + 1, n)));
    }
    return out;
  }
  const int i = -k;
  for (const auto& [a, c] : e.terms()) {
    out.add_term(a.raised(-i, 1),
                 c * RatQ::q_power(exp_range_sum(a, 1 - i, n) + a.exp(i)));
    if (a.exp(i) > 0) {
      const RatQ scale = c * q_lambda() * qint(a.exp(i)) *
                         RatQ::q_power(1 + exp_range_sum(a, i, n) -
                                       2 * exp_range_sum(a, -n, -i - 1));
      accumulate_omega_times(out, i + 1, a.raised(i, -1), scale);
    }
  }
  return out;
}

Element product(const Element& a, const Element& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch in product");
  const int n = a.rank();
  Element out{Rank(n)};
  for (const auto& [m, c] : a.terms()) {
    // x^m * b: peel generators of x^m from the right (largest index first)
    // and left-multiply them onto b.
    Element acc = b;
    for (int k = n; k >= -n; --k) {
      if (k == 0) continue;
      for (int t = 0; t < m.exp(k); ++t) acc = left_mul_gen(k, acc);
    }
    for (const auto& [mm, cc] : acc.terms()) out.add_term(mm, c * cc);
  }
  return out;
}

Element omega(Rank n, int i) {
  if (i < 1 || i > n.value() + 1)
    throw std::out_of_range("omega index out of range");
  Element out(n);
  for (int j = i; j <= n.value(); ++j)
    out.add_term(Monomial(n).raised(-j, 1).raised(j, 1),
                 RatQ::q_power(j - i));
  return out;
}

Element naive_normalize(Rank n, std::span<const int> word,
                        std::uint64_t fuel) {
  for (int k : word)
    if (!index_in_range(n, k))
      throw std::out_of_range("word letter out of range");
  Element out(n);
  struct Item {
    RatQ coeff;
    std::vector<int> word;
  };
  std::deque<Item> queue;
  queue.push_back({RatQ::one(), {word.begin(), word.end()}});
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    std::size_t t = 0;
    while (t + 1 < item.word.size() && item.word[t] <= item.word[t + 1]) ++t;
    if (t + 1 >= item.word.size()) {
      Monomial m(n);
      for (int k : item.word) m = m.raised(k, 1);
      out.add_term(m, item.coeff);
      continue;
    }
    if (fuel == 0)
      throw std::runtime_error("naive_normalize: rewrite budget exhausted");
    --fuel;
    const int u = item.word[t], v = item.word[t + 1];
    if (u == -v && u > 0) {
      // x_i x_{-i} = q^2 x_{-i} x_i + q^2 lambda Omega_{i+1}, with Omega
      // expanded into its defining sum.
      const int i = u;
      Item swapped = item;
      std::swap(swapped.word[t], swapped.word[t + 1]);
      swapped.coeff = item.coeff * RatQ::q_power(2);
      queue.push_back(std::move(swapped));
      for (int j = i + 1; j <= n.value(); ++j) {
        Item repl = item;
        repl.word[t] = -j;
        repl.word[t + 1] = j;
        repl.coeff = item.coeff * RatQ::q_power(2) * q_lambda() *
                     RatQ::q_power(j - i - 1);
        queue.push_back(std::move(repl));
      }
    } else {
      // x_j x_i = q x_i x_j for i < j, j != -i
      Item swapped = std::move(item);
      std::swap(swapped.word[t], swapped.word[t + 1]);
      swapped.coeff *= RatQ::q();
      queue.push_back(std::move(swapped));
    }
  }
  return out;
}

namespace {

void enumerate_exps(int positions_left, int degree_left,
                    std::vector<int>& acc, std::vector<Monomial>& out) {
  if (positions_left == 1) {
    acc.push_back(degree_left);
    out.push_back(Monomial(acc));
    acc.pop_back();
    return;
  }
  for (int e = 0; e <= degree_left; ++e) {
    acc.push_back(e);
    enumerate_exps(positions_left - 1, degree_left - e, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Monomial> homogeneous_basis(Rank n, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> out;
  out.reserve(graded_dimension(n.value(), d));
  std::vector<int> acc;
  enumerate_exps(2 * n.value(), d, acc, out);
  return out;
}

std::vector<Monomial> basis_up_to(Rank n, int d) {
  std::vector<Monomial> out;
  for (int t = 0; t <= d; ++t) {
    auto layer = homogeneous_basis(n, t);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::uint64_t graded_dimension(int n, int d) {
  // C(2n + d - 1, d)
  std::uint64_t r = 1;
  for (int t = 1; t <= d; ++t) {
    r = r * static_cast<std::uint64_t>(2 * n - 1 + t);
    r /= static_cast<std::uint64_t>(t);
  }
  return r;
}

}  // namespace qsymp
