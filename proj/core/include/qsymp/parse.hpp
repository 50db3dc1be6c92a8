#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qsymp/ops.hpp"

namespace qsymp {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " +
                           std::to_string(position)),
        position(position) {}
  std::size_t position;
};

/// Grammar: Laurent sums of terms `c`, `c*q^k`, `q^k` joined by +/-, or a
/// fraction `(num)/(den)`. Round-trips the output of RatQ::str().
RatQ parse_ratq(std::string_view text);

/// Grammar: terms `coef * x(i1)^e1...x(ik)^ek` joined by +/-; a bare
/// monomial means coefficient 1, a bare coefficient means the monomial 1.
/// Multi-term coefficients must be parenthesized. Round-trips Element::str().
Element parse_element(std::string_view text, Rank n);

/// Operator expressions over the atoms d(i), xl(i), xr(i), mu(i), mu_inv(i),
/// e(i), f(i), k(i), k_inv(i), E(s,i,j), Phi(i), Psi(i), the bracket
/// br(A,B[,v]) and the combinators `*` (composition), `+`/`-`, and scalar
/// multiplication by a RatQ literal.
OpPtr parse_operator(std::string_view text, DiffOps& ops);

}  // namespace qsymp
