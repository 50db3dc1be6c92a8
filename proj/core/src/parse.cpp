#include "qsymp/parse.hpp"

#include <cctype>
#include <vector>

namespace qsymp {

namespace {

struct Token {
  enum class Kind { Int, Name, Sym, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
          ++j;
        tokens_.push_back({Token::Kind::Int, std::string(s.substr(i, j - i)),
                           i});
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
          ++j;
        tokens_.push_back({Token::Kind::Name, std::string(s.substr(i, j - i)),
                           i});
        i = j;
        continue;
      }
      if (std::string("+-*/^(),").find(c) != std::string::npos) {
        tokens_.push_back({Token::Kind::Sym, std::string(1, c), i});
        ++i;
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    tokens_.push_back({Token::Kind::End, "", s.size()});
  }

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  Token next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }

  bool accept_sym(char c) {
    if (peek().kind == Token::Kind::Sym && peek().text[0] == c) {
      next();
      return true;
    }
    return false;
  }
  void expect_sym(char c) {
    if (!accept_sym(c))
      throw ParseError(std::string("expected '") + c + "'", peek().pos);
  }
  bool peek_sym(char c, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Sym && peek(ahead).text[0] == c;
  }
  bool peek_name(const char* name, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Name && peek(ahead).text == name;
  }

  std::size_t save() const { return pos_; }
  void restore(std::size_t p) { pos_ = p; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Int parse_uint(Lexer& lex) {
  if (lex.peek().kind != Token::Kind::Int)
    throw ParseError("expected an integer", lex.peek().pos);
  return Int(lex.next().text);
}

int parse_signed_small_int(Lexer& lex) {
  const bool neg = lex.accept_sym('-');
  if (lex.peek().kind != Token::Kind::Int)
    throw ParseError("expected an integer", lex.peek().pos);
  const int v = std::stoi(lex.next().text);
  return neg ? -v : v;
}

Rat parse_rat(Lexer& lex) {
  const Int num = parse_uint(lex);
  // '/' introduces a rational only when followed by a digit (a fraction of
  // Laurent polynomials is always parenthesized).
  if (lex.peek_sym('/') && lex.peek(1).kind == Token::Kind::Int) {
    lex.next();
    const Int den = parse_uint(lex);
    if (den == 0) throw ParseError("zero denominator", lex.peek().pos);
    return Rat(num, den);
  }
  return Rat(num);
}

std::int64_t parse_exponent(Lexer& lex) {
  const bool neg = lex.accept_sym('-');
  if (lex.peek().kind != Token::Kind::Int)
    throw ParseError("expected an exponent", lex.peek().pos);
  const std::int64_t v = std::stoll(lex.next().text);
  return neg ? -v : v;
}

// [sign already consumed] one Laurent term: `c`, `c*q^k` or `q^k`.
Laurent parse_laurent_term(Lexer& lex) {
  if (lex.peek_name("q")) {
    lex.next();
    std::int64_t k = 1;
    if (lex.accept_sym('^')) k = parse_exponent(lex);
    return Laurent::monomial(1, k);
  }
  if (lex.peek().kind != Token::Kind::Int)
    throw ParseError("expected a coefficient or q", lex.peek().pos);
  const Rat c = parse_rat(lex);
  // `c*q^k`: only take the '*' when a power of q follows.
  if (lex.peek_sym('*') && lex.peek_name("q", 1)) {
    lex.next();
    lex.next();
    std::int64_t k = 1;
    if (lex.accept_sym('^')) k = parse_exponent(lex);
    return Laurent::monomial(c, k);
  }
  return Laurent::constant(c);
}

bool at_laurent_term(const Lexer& lex, std::size_t ahead) {
  return lex.peek(ahead).kind == Token::Kind::Int ||
         lex.peek_name("q", ahead);
}

Laurent parse_laurent(Lexer& lex, bool multi_term) {
  bool neg = lex.accept_sym('-');
  Laurent acc = parse_laurent_term(lex);
  if (neg) acc = -acc;
  while (multi_term &&
         ((lex.peek_sym('+') || lex.peek_sym('-')) && at_laurent_term(lex, 1))) {
    neg = lex.next().text[0] == '-';
    Laurent t = parse_laurent_term(lex);
    acc += neg ? -t : t;
  }
  return acc;
}

// A RatQ literal: unparenthesized Laurent (single-term unless multi_term),
// parenthesized Laurent, or a fraction `(num)/(den)`.
RatQ parse_ratq_literal(Lexer& lex, bool multi_term) {
  if (lex.peek_sym('(')) {
    lex.next();
    Laurent num = parse_laurent(lex, true);
    lex.expect_sym(')');
    if (lex.peek_sym('/') && lex.peek_sym('(', 1)) {
      lex.next();
      lex.expect_sym('(');
      Laurent den = parse_laurent(lex, true);
      lex.expect_sym(')');
      if (den.is_zero())
        throw ParseError("zero denominator", lex.peek().pos);
      return RatQ(std::move(num), std::move(den));
    }
    return RatQ(std::move(num));
  }
  return RatQ(parse_laurent(lex, multi_term));
}

Monomial parse_monomial(Lexer& lex, Rank n) {
  Monomial m(n);
  bool any = false;
  while (lex.peek_name("x") && lex.peek_sym('(', 1)) {
    lex.next();
    lex.expect_sym('(');
    const int index = parse_signed_small_int(lex);
    lex.expect_sym(')');
    if (!index_in_range(n.value(), index))
      throw ParseError("generator index out of range", lex.peek().pos);
    int e = 1;
    if (lex.accept_sym('^')) {
      const Int v = parse_uint(lex);
      e = static_cast<int>(v);
    }
    m = m.raised(index, e);
    any = true;
  }
  if (!any) throw ParseError("expected a monomial", lex.peek().pos);
  return m;
}

Element parse_element_term(Lexer& lex, Rank n) {
  if (lex.peek_name("x")) {
    return Element::from_monomial(parse_monomial(lex, n));
  }
  const RatQ c = parse_ratq_literal(lex, /*multi_term=*/false);
  if (lex.peek_sym('*') && lex.peek_name("x", 1)) {
    lex.next();
    return Element::from_monomial(parse_monomial(lex, n), c);
  }
  return Element::from_monomial(Monomial(n), c);
}

OpPtr parse_op_expr(Lexer& lex, DiffOps& ops);

OpPtr parse_op_atom(Lexer& lex, DiffOps& ops) {
  const Token name = lex.next();
  lex.expect_sym('(');
  auto close = [&lex](OpPtr op) {
    lex.expect_sym(')');
    return op;
  };
  const std::string& id = name.text;
  if (id == "br") {
    OpPtr a = parse_op_expr(lex, ops);
    lex.expect_sym(',');
    OpPtr b = parse_op_expr(lex, ops);
    RatQ v = RatQ::one();
    if (lex.accept_sym(',')) v = parse_ratq_literal(lex, /*multi_term=*/true);
    return close(make_bracket(std::move(a), std::move(b), std::move(v)));
  }
  if (id == "E") {
    int sign = 0;
    if (lex.accept_sym('+'))
      sign = 1;
    else if (lex.accept_sym('-'))
      sign = -1;
    else
      throw ParseError("expected a sign in E(s,i,j)", lex.peek().pos);
    lex.expect_sym(',');
    const int i = parse_signed_small_int(lex);
    lex.expect_sym(',');
    const int j = parse_signed_small_int(lex);
    return close(ops.root_vector(RootLabel(sign * i, j), RootBuild::Closed));
  }
  const int i = parse_signed_small_int(lex);
  if (id == "d") return close(ops.partial(i));
  if (id == "xl") return close(ops.mul_left(i));
  if (id == "xr") return close(ops.mul_right(i));
  if (id == "mu") return close(ops.mu(i, 1));
  if (id == "mu_inv") return close(ops.mu(i, -1));
  if (id == "e") return close(ops.chevalley('e', i));
  if (id == "f") return close(ops.chevalley('f', i));
  if (id == "k") return close(ops.chevalley('k', i));
  if (id == "k_inv") return close(ops.chevalley('k', i, -1));
  if (id == "Phi") return close(ops.phi(i));
  if (id == "Psi") return close(ops.psi(i));
  throw ParseError("unknown operator atom '" + id + "'", name.pos);
}

OpPtr parse_op_factor(Lexer& lex, DiffOps& ops) {
  if (lex.peek().kind == Token::Kind::Name && lex.peek_sym('(', 1) &&
      !lex.peek_name("q"))
    return parse_op_atom(lex, ops);
  if (lex.peek_sym('(')) {
    // Either a parenthesized scalar or a parenthesized operator expression.
    const std::size_t mark = lex.save();
    try {
      RatQ c = parse_ratq_literal(lex, /*multi_term=*/true);
      return make_scale(std::move(c), identity_op());
    } catch (const ParseError&) {
      lex.restore(mark);
    }
    lex.expect_sym('(');
    OpPtr inner = parse_op_expr(lex, ops);
    lex.expect_sym(')');
    return inner;
  }
  RatQ c = parse_ratq_literal(lex, /*multi_term=*/false);
  return make_scale(std::move(c), identity_op());
}

OpPtr parse_op_term(Lexer& lex, DiffOps& ops) {
  std::vector<OpPtr> factors{parse_op_factor(lex, ops)};
  while (lex.accept_sym('*')) factors.push_back(parse_op_factor(lex, ops));
  return make_compose(std::move(factors));
}

OpPtr parse_op_expr(Lexer& lex, DiffOps& ops) {
  bool neg = lex.accept_sym('-');
  OpPtr first = parse_op_term(lex, ops);
  if (neg) first = make_scale(RatQ(-1), std::move(first));
  std::vector<OpPtr> terms{std::move(first)};
  while (lex.peek_sym('+') || lex.peek_sym('-')) {
    neg = lex.next().text[0] == '-';
    OpPtr t = parse_op_term(lex, ops);
    terms.push_back(neg ? make_scale(RatQ(-1), std::move(t)) : std::move(t));
  }
  if (terms.size() == 1) return terms[0];
  return make_sum(std::move(terms));
}

}  // namespace

RatQ parse_ratq(std::string_view text) {
  Lexer lex(text);
  RatQ v = parse_ratq_literal(lex, /*multi_term=*/true);
  if (!lex.at_end())
    throw ParseError("trailing input after value", lex.peek().pos);
  return v;
}

Element parse_element(std::string_view text, Rank n) {
  Lexer lex(text);
  bool neg = lex.accept_sym('-');
  Element acc = parse_element_term(lex, n);
  if (neg) acc = acc.scaled(RatQ(-1));
  while (lex.peek_sym('+') || lex.peek_sym('-')) {
    neg = lex.next().text[0] == '-';
    Element t = parse_element_term(lex, n);
    acc = neg ? acc - t : acc + t;
  }
  if (!lex.at_end())
    throw ParseError("trailing input after element", lex.peek().pos);
  return acc;
}

OpPtr parse_operator(std::string_view text, DiffOps& ops) {
  Lexer lex(text);
  OpPtr op = parse_op_expr(lex, ops);
  if (!lex.at_end())
    throw ParseError("trailing input after operator", lex.peek().pos);
  return op;
}

}  // namespace qsymp
