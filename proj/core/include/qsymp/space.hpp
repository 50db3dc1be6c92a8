#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsymp/qnum.hpp"

namespace qsymp {

/// Rank n >= 2 of the symplectic space; the generator index set is
/// I = {-n, ..., -1, 1, ..., n}.
class Rank {
 public:
  explicit Rank(int n);
  int value() const { return n_; }
  operator int() const { return n_; }

 private:
  int n_;
};

/// True if k is a valid generator index for rank n.
bool index_in_range(int n, int k);
/// Position of index k in the exponent vector (a_{-n},...,a_{-1},a_1,...,a_n).
int index_position(int n, int k);
/// Inverse of index_position.
int position_index(int n, int pos);

/// Exponent vector of a normal monomial x^a; immutable value type.
class Monomial {
 public:
  explicit Monomial(Rank n) : exps_(2 * n.value(), 0) {}
  explicit Monomial(std::vector<int> exps);

  int rank() const { return static_cast<int>(exps_.size()) / 2; }
  int degree() const;
  int exp(int index) const { return exps_[index_position(rank(), index)]; }
  const std::vector<int>& exps() const { return exps_; }

  /// Copy with the exponent of x_index changed by delta (result must stay
  /// nonnegative).
  Monomial raised(int index, int delta) const;

  auto operator<=>(const Monomial&) const = default;

  /// "1", "x(-2)x(1)^3", ...
  std::string str() const;

 private:
  std::vector<int> exps_;
};

/// Sparse linear combination of normal monomials with RatQ coefficients.
/// Terms are ordered lexicographically by exponent vector and never store a
/// zero coefficient.
class Element {
 public:
  explicit Element(Rank n) : n_(n.value()) {}

  static Element zero(Rank n) { return Element(n); }
  static Element unit(Rank n);
  /// The generator x_k.
  static Element generator(Rank n, int k);
  static Element from_monomial(const Monomial& m, RatQ c = RatQ::one());

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, RatQ>& terms() const { return terms_; }

  /// Accumulates c * x^m, erasing the term if the total cancels.
  void add_term(const Monomial& m, const RatQ& c);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element scaled(const RatQ& c) const;
  bool operator==(const Element& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  /// Coefficient of x^m (zero if absent).
  const RatQ& coeff(const Monomial& m) const;

  /// "q^2 * x(-1)x(1) + (q^3-q) * x(-2)x(2)", "0", ...
  std::string str() const;

 private:
  int n_;
  std::map<Monomial, RatQ> terms_;
};

/// Normal form of x_k * e, via the closed commutation formulas.
Element left_mul_gen(int k, const Element& e);
/// Normal form of e * x_k.
Element right_mul_gen(int k, const Element& e);
/// Normal form of a * b; throws on rank mismatch.
Element product(const Element& a, const Element& b);

/// Omega_i = sum_{i <= j <= n} q^{j-i} x_{-j} x_j; omega(n+1) = 0.
Element omega(Rank n, int i);

/// Normal form of x_{w1} x_{w2} ... computed only by single-step rewriting
/// with the defining quadratic relations; the independent oracle for
/// product(). Throws if the rewrite budget is exhausted.
Element naive_normalize(Rank n, std::span<const int> word,
                        std::uint64_t fuel = 1u << 24);

/// All exponent vectors of total degree d, lexicographically ordered.
std::vector<Monomial> homogeneous_basis(Rank n, int d);
/// All exponent vectors of total degree <= d, by degree then lex order.
std::vector<Monomial> basis_up_to(Rank n, int d);

/// Number of monomials of degree d in 2n variables, C(2n+d-1, d).
std::uint64_t graded_dimension(int n, int d);

}  // namespace qsymp
