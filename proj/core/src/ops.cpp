#include "qsymp/ops.hpp"

#include <stdexcept>
#include <utility>

namespace qsymp {

GeneratorOp GeneratorOp::mu(int i, int exp) {
  if (exp != 1 && exp != -1)
    throw std::invalid_argument("mu generator exponent must be +-1");
  return {Kind::Mu, i, exp};
}

OpPtr make_gen(GeneratorOp g) {
  auto op = std::make_shared<Operator>();
  op->kind = Operator::Kind::Generator;
  op->gen = g;
  return op;
}

OpPtr make_scale(RatQ c, OpPtr a) {
  auto op = std::make_shared<Operator>();
  op->kind = Operator::Kind::Scale;
  op->scalar = std::move(c);
  op->children = {std::move(a)};
  return op;
}

OpPtr make_sum(std::vector<OpPtr> terms) {
  auto op = std::make_shared<Operator>();
  op->kind = Operator::Kind::Sum;
  op->children = std::move(terms);
  return op;
}

OpPtr make_compose(std::vector<OpPtr> factors) {
  if (factors.size() == 1) return factors[0];
  auto op = std::make_shared<Operator>();
  op->kind = Operator::Kind::Compose;
  op->children = std::move(factors);
  return op;
}

OpPtr make_bracket(OpPtr a, OpPtr b, RatQ v) {
  auto op = std::make_shared<Operator>();
  op->kind = Operator::Kind::Bracket;
  op->scalar = std::move(v);
  op->children = {std::move(a), std::move(b)};
  return op;
}

OpPtr zero_op() {
  static const OpPtr op = make_sum({});
  return op;
}

OpPtr identity_op() {
  static const OpPtr op = make_compose({});
  return op;
}

Element generator_action(const GeneratorOp& g, const Element& e) {
  const int n = e.rank();
  if (!index_in_range(n, g.index))
    throw std::out_of_range("generator operator index out of range");
  switch (g.kind) {
    case GeneratorOp::Kind::LeftMul:
      return left_mul_gen(g.index, e);
    case GeneratorOp::Kind::RightMul:
      return right_mul_gen(g.index, e);
    case GeneratorOp::Kind::Partial: {
      Element out{Rank(n)};
      for (const auto& [a, c] : e.terms()) {
        const int ai = a.exp(g.index);
        if (ai > 0) out.add_term(a.raised(g.index, -1), c * qint(ai));
      }
      return out;
    }
    case GeneratorOp::Kind::Mu: {
      Element out{Rank(n)};
      for (const auto& [a, c] : e.terms())
        out.add_term(a, c * RatQ::q_power(g.mu_exp * a.exp(g.index)));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Element act(const OpPtr& op, const Element& e) {
  switch (op->kind) {
    case Operator::Kind::Generator:
      return generator_action(op->gen, e);
    case Operator::Kind::Scale:
      return act(op->children[0], e).scaled(op->scalar);
    case Operator::Kind::Sum: {
      Element out{Rank(e.rank())};
      for (const auto& child : op->children) out = out + act(child, e);
      return out;
    }
    case Operator::Kind::Compose: {
      Element acc = e;
      for (auto it = op->children.rbegin(); it != op->children.rend(); ++it)
        acc = act(*it, acc);
      return acc;
    }
    case Operator::Kind::Bracket: {
      const Element ab = act(op->children[0], act(op->children[1], e));
      const Element ba = act(op->children[1], act(op->children[0], e));
      return ab - ba.scaled(op->scalar);
    }
  }
  throw std::logic_error("unreachable");
}

Element act(const OpPtr& op, const Monomial& m) {
  return act(op, Element::from_monomial(m));
}

RootLabel::RootLabel(int lo, int hi) : lo(lo), hi(hi) {
  const bool ok = hi >= 1 && lo != 0 &&
                  ((lo > 0 && lo <= hi) || (lo < 0 && -lo < hi));
  if (!ok) throw std::invalid_argument("invalid positive-root label");
}

std::string RootLabel::str() const {
  return std::string("E(") + (lo > 0 ? "+" : "-") + "," +
         std::to_string(lo > 0 ? lo : -lo) + "," + std::to_string(hi) + ")";
}

std::vector<int> RootLabel::simple_coordinates(int n) const {
  // eps_t = alpha_1/2 + alpha_2 + ... + alpha_t, so
  //   2 eps_i          = alpha_1 + 2(alpha_2 + ... + alpha_i)
  //   eps_i + eps_j    = alpha_1 + 2(alpha_2..alpha_i) + (alpha_{i+1}..alpha_j)
  //   eps_j - eps_i    = alpha_{i+1} + ... + alpha_j
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  if (hi > n) throw std::out_of_range("root label out of range for rank");
  if (lo > 0) {
    c[0] = 1;
    for (int t = 2; t <= lo; ++t) c[t - 1] = 2;
    for (int t = lo + 1; t <= hi; ++t) c[t - 1] = 1;
  } else {
    for (int t = -lo + 1; t <= hi; ++t) c[t - 1] = 1;
  }
  return c;
}

std::vector<RootLabel> enumerate_positive_roots(Rank n) {
  std::vector<RootLabel> out;
  out.reserve(static_cast<std::size_t>(n.value()) * n.value());
  out.emplace_back(1, 1);
  for (int j = 2; j <= n.value(); ++j) {
    for (int i = j - 1; i >= 1; --i) out.emplace_back(i, j);
    out.emplace_back(j, j);
    for (int i = 1; i <= j - 1; ++i) out.emplace_back(-i, j);
  }
  return out;
}

DiffOps::DiffOps(Rank n) : n_(n.value()) {}

OpPtr DiffOps::partial(int k) const {
  index_position(n_, k);
  return make_gen(GeneratorOp::partial(k));
}

OpPtr DiffOps::mul_left(int k) const {
  index_position(n_, k);
  return make_gen(GeneratorOp::left_mul(k));
}

OpPtr DiffOps::mul_right(int k) const {
  index_position(n_, k);
  return make_gen(GeneratorOp::right_mul(k));
}

OpPtr DiffOps::mu(int k, int exp) const {
  index_position(n_, k);
  if (exp == 0) return identity_op();
  std::vector<OpPtr> fs(static_cast<std::size_t>(exp < 0 ? -exp : exp),
                        make_gen(GeneratorOp::mu(k, exp < 0 ? -1 : 1)));
  return make_compose(std::move(fs));
}

OpPtr DiffOps::mu_product(int lo, int hi, int exp) const {
  std::vector<OpPtr> fs;
  for (int j = std::max(lo, -n_); j <= std::min(hi, n_); ++j)
    if (j != 0) fs.push_back(mu(j, exp));
  if (fs.empty()) return identity_op();
  return make_compose(std::move(fs));
}

OpPtr DiffOps::tau(int k, int exp) const {
  if (k == 0 || k > n_ + 1 || k < -n_ - 1)
    throw std::out_of_range("tau index out of range");
  return k > 0 ? mu_product(k, n_, exp) : mu_product(-n_, k, exp);
}

OpPtr DiffOps::lambda_chain(int k, int exp) const {
  if (k < -n_ || k > n_) throw std::out_of_range("Lambda index out of range");
  if (k == 0) return identity_op();
  return k > 0 ? mu_product(1, k, exp) : mu_product(k, -1, exp);
}

OpPtr DiffOps::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = memo_.find(key);
  return it == memo_.end() ? nullptr : it->second;
}

OpPtr DiffOps::store(const std::string& key, OpPtr op) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = memo_.emplace(key, std::move(op));
  return it->second;
}

OpPtr DiffOps::twisted_partial(int k) {
  index_position(n_, k);
  const std::string key = "D:" + std::to_string(k);
  if (auto op = lookup(key)) return op;
  OpPtr built;
  if (k < 0) {
    const int i = -k;
    // D_{-i} = mu_i tau_{-i-1}^{-1} partial_{-i}
    built = make_compose({mu(i, 1), tau(-(i + 1), -1), partial(-i)});
  } else {
    // D_i = tau_1^{-1} Lambda_{i-1}^{-1} partial_i
    built = make_compose({tau(1, -1), lambda_chain(k - 1, -1), partial(k)});
  }
  return store(key, std::move(built));
}

OpPtr DiffOps::twisted_left(int k) {
  if (k >= 0) throw std::out_of_range("twisted_left expects a negative index");
  index_position(n_, k);
  const std::string key = "XL:" + std::to_string(k);
  if (auto op = lookup(key)) return op;
  const int i = -k;
  // X_{-i_L} = mu_i^{-1} mu_{-i} x_{-i_L}
  OpPtr built = make_compose({mu(i, -1), mu(-i, 1), mul_left(-i)});
  return store(key, std::move(built));
}

OpPtr DiffOps::twisted_right(int k) {
  index_position(n_, k);
  const std::string key = "XR:" + std::to_string(k);
  if (auto op = lookup(key)) return op;
  OpPtr built;
  if (k > 0) {
    // X_{i_R} = Lambda_i^2 x_{i_R}
    built = make_compose({lambda_chain(k, 2), mul_right(k)});
  } else {
    // X_{-i_R} = q^i Lambda_{1-i}^2 (mu_i^2 X_{-i_L}
    //            + lambda mu_{-i}^2 Psi_{i+1} D_i)
    const int i = -k;
    OpPtr straight = make_compose({mu(i, 2), twisted_left(-i)});
    OpPtr correction = make_scale(
        q_lambda(),
        make_compose({mu(-i, 2), psi(i + 1), twisted_partial(i)}));
    built = make_scale(
        RatQ::q_power(i),
        make_compose({lambda_chain(1 - i, 2),
                      make_sum({std::move(straight), std::move(correction)})}));
  }
  return store(key, std::move(built));
}

OpPtr DiffOps::phi(int i) {
  if (i < 0 || i > n_) throw std::out_of_range("Phi index out of range");
  const std::string key = "phi:" + std::to_string(i);
  if (auto op = lookup(key)) return op;
  // Phi_i = sum_{j=1}^{i} q^{j-i} Lambda_{j-1}^2 D_{-j} D_j
  std::vector<OpPtr> terms;
  for (int j = 1; j <= i; ++j)
    terms.push_back(make_scale(
        RatQ::q_power(j - i),
        make_compose({lambda_chain(j - 1, 2), twisted_partial(-j),
                      twisted_partial(j)})));
  return store(key, make_sum(std::move(terms)));
}

OpPtr DiffOps::psi(int i) {
  if (i < 1 || i > n_ + 1) throw std::out_of_range("Psi index out of range");
  const std::string key = "psi:" + std::to_string(i);
  if (auto op = lookup(key)) return op;
  // Psi_i = tau_{-i}^2 sum_{j=i}^{n} q^{j-i} tau_{-j}^{-2} X_{-j_L} X_{j_R}
  if (i == n_ + 1) return store(key, zero_op());
  std::vector<OpPtr> terms;
  for (int j = i; j <= n_; ++j)
    terms.push_back(make_scale(
        RatQ::q_power(j - i),
        make_compose({tau(-j, -2), twisted_left(-j), twisted_right(j)})));
  return store(key, make_compose({tau(-i, 2), make_sum(std::move(terms))}));
}

OpPtr DiffOps::phi_recursive(int i) {
  if (i < 0 || i > n_) throw std::out_of_range("Phi index out of range");
  const std::string key = "phi_rec:" + std::to_string(i);
  if (auto op = lookup(key)) return op;
  if (i == 0) return store(key, zero_op());
  // Phi_i = Lambda_{i-1}^2 D_{-i} D_i + q^{-1} Phi_{i-1}
  OpPtr head = make_compose(
      {lambda_chain(i - 1, 2), twisted_partial(-i), twisted_partial(i)});
  OpPtr built = make_sum(
      {std::move(head), make_scale(RatQ::q_power(-1), phi_recursive(i - 1))});
  return store(key, std::move(built));
}

OpPtr DiffOps::psi_recursive(int i) {
  if (i < 1 || i > n_ + 1) throw std::out_of_range("Psi index out of range");
  const std::string key = "psi_rec:" + std::to_string(i);
  if (auto op = lookup(key)) return op;
  if (i == n_ + 1) return store(key, zero_op());
  // Psi_i = X_{-i_L} X_{i_R} + q mu_{-i}^2 Psi_{i+1}
  OpPtr head = make_compose({twisted_left(-i), twisted_right(i)});
  OpPtr tail = make_scale(
      RatQ::q(), make_compose({mu(-i, 2), psi_recursive(i + 1)}));
  return store(key, make_sum({std::move(head), std::move(tail)}));
}

OpPtr DiffOps::chevalley(char which, int i, int exp) {
  if (i < 1 || i > n_)
    throw std::out_of_range("Chevalley operator index out of range");
  if (which != 'e' && which != 'f' && which != 'k')
    throw std::invalid_argument("Chevalley operator must be e, f or k");
  if (which != 'k' && exp != 1)
    throw std::invalid_argument("only k admits an inverse");
  if (which == 'k' && exp != 1 && exp != -1)
    throw std::invalid_argument("k exponent must be +-1");
  const std::string key =
      std::string("ch:") + which + ":" + std::to_string(i) +
      (which == 'k' ? ":" + std::to_string(exp) : "");
  if (auto op = lookup(key)) return op;

  OpPtr built;
  const RatQ half = qint(2).inverse();  // [2]_q^{-1}
  if (which == 'k') {
    if (i == 1) {
      built = make_compose({mu(-1, 2 * exp), mu(1, -2 * exp)});
    } else {
      built = make_compose(
          {mu(-i, exp), mu(1 - i, -exp), mu(i - 1, exp), mu(i, -exp)});
    }
  } else if (which == 'e') {
    if (i == 1) {
      // e_1 = [2]_q^{-1} q^{-1} mu_1^{-1}
      //       (tau_{-2}^{-1} x_{-1_L} + q^2 tau_2^{-1} x_{-1_R}) partial_1
      OpPtr middle = make_sum(
          {make_compose({tau(-2, -1), mul_left(-1)}),
           make_scale(RatQ::q_power(2),
                      make_compose({tau(2, -1), mul_right(-1)}))});
      built = make_scale(half * RatQ::q_power(-1),
                         make_compose({mu(1, -1), middle, partial(1)}));
    } else {
      // e_i = mu_{i-1} mu_i^{-1} tau_{-i-1}^{-1} x_{-i_L} partial_{1-i}
      //       - tau_i^{-1} x_{i-1_R} partial_i
      OpPtr first = make_compose({mu(i - 1, 1), mu(i, -1), tau(-(i + 1), -1),
                                  mul_left(-i), partial(1 - i)});
      OpPtr second = make_scale(
          RatQ(-1),
          make_compose({tau(i, -1), mul_right(i - 1), partial(i)}));
      built = make_sum({std::move(first), std::move(second)});
    }
  } else {  // 'f'
    if (i == 1) {
      // f_1 = [2]_q^{-1} q^{-1} mu_{-1}^{-1}
      //       (tau_2^{-1} x_{1_R} + q^2 tau_{-2}^{-1} x_{1_L}) partial_{-1}
      OpPtr middle = make_sum(
          {make_compose({tau(2, -1), mul_right(1)}),
           make_scale(RatQ::q_power(2),
                      make_compose({tau(-2, -1), mul_left(1)}))});
      built = make_scale(half * RatQ::q_power(-1),
                         make_compose({mu(-1, -1), middle, partial(-1)}));
    } else {
      // f_i = -mu_{1-i} mu_{-i}^{-1} tau_{i+1}^{-1} x_{i_R} partial_{i-1}
      //       + tau_{-i}^{-1} x_{1-i_L} partial_{-i}
      OpPtr first = make_scale(
          RatQ(-1), make_compose({mu(1 - i, 1), mu(-i, -1), tau(i + 1, -1),
                                  mul_right(i), partial(i - 1)}));
      OpPtr second =
          make_compose({tau(-i, -1), mul_left(1 - i), partial(-i)});
      built = make_sum({std::move(first), std::move(second)});
    }
  }
  return store(key, std::move(built));
}

OpPtr DiffOps::root_vector(const RootLabel& label, RootBuild method) {
  if (label.hi > n_)
    throw std::out_of_range("root label out of range for rank");
  const std::string key =
      std::string("root:") + (method == RootBuild::Closed ? "c" : "r") + ":" +
      std::to_string(label.lo) + ":" + std::to_string(label.hi);
  if (auto op = lookup(key)) return op;
  OpPtr built = method == RootBuild::Closed ? build_root_closed(label)
                                            : build_root_recursive(label);
  return store(key, std::move(built));
}

OpPtr DiffOps::build_root_closed(const RootLabel& label) {
  const RatQ half = qint(2).inverse();
  const OpPtr ratio = make_compose({tau(1, 1), tau(-1, -1)});
  if (label.lo < 0) {
    // e_{-i,j} = (-1)^{i+j} q^{-2} (X_{i_R} D_j - [D_j, Psi_{i+1}]_q D_{-i})
    const int i = -label.lo, j = label.hi;
    OpPtr first = make_compose({twisted_right(i), twisted_partial(j)});
    OpPtr second = make_scale(
        RatQ(-1),
        make_compose({make_bracket(twisted_partial(j), psi(i + 1), RatQ::q()),
                      twisted_partial(-i)}));
    const RatQ sign((i + j) % 2 == 0 ? 1 : -1);
    return make_scale(sign * RatQ::q_power(-2),
                      make_sum({std::move(first), std::move(second)}));
  }
  if (label.is_diagonal()) {
    // e_{i,i} = [2]_q^{-1} tau_1 tau_{-1}^{-1}
    //           (X_{-i_R} D_i + q^{-2} [D_i, Psi_1]_q D_i)
    const int i = label.lo;
    OpPtr first = make_compose({twisted_right(-i), twisted_partial(i)});
    OpPtr second = make_scale(
        RatQ::q_power(-2),
        make_compose({make_bracket(twisted_partial(i), psi(1), RatQ::q()),
                      twisted_partial(i)}));
    return make_scale(
        half, make_compose({ratio, make_sum({std::move(first),
                                             std::move(second)})}));
  }
  // e_{i,j} = (-1)^{j+1} tau_1 tau_{-1}^{-1}
  //           (X_{-i_L} D_j + q^{i-1} X_{-j_R} [Phi_i, X_{-i_L}]_q)
  const int i = label.lo, j = label.hi;
  OpPtr first = make_compose({twisted_left(-i), twisted_partial(j)});
  OpPtr second = make_scale(
      RatQ::q_power(i - 1),
      make_compose({twisted_right(-j),
                    make_bracket(phi(i), twisted_left(-i), RatQ::q())}));
  const RatQ sign((j + 1) % 2 == 0 ? 1 : -1);
  return make_scale(
      sign,
      make_compose({ratio, make_sum({std::move(first), std::move(second)})}));
}

OpPtr DiffOps::build_root_recursive(const RootLabel& label) {
  const int lo = label.lo, j = label.hi;
  // Base identifications with the simple operators.
  if (lo == 1 && j == 1) return chevalley('e', 1);
  if (lo == 1 - j) return chevalley('e', j);
  if (lo == 1 && j == 2)
    return make_bracket(chevalley('e', 1), chevalley('e', 2),
                        RatQ::q_power(2));
  if (lo == j)  // e_{j,j} = [2]_q^{-1} [e_{1,j}, e_{-1,j}]
    return make_scale(
        qint(2).inverse(),
        make_bracket(root_vector(RootLabel(1, j), RootBuild::Recursive),
                     root_vector(RootLabel(-1, j), RootBuild::Recursive)));
  if (lo == j - 1)  // e_{j-1,j} = [e_{j-1}, e_{j-2,j}]_q, j >= 3
    return make_bracket(
        chevalley('e', j - 1),
        root_vector(RootLabel(j - 2, j), RootBuild::Recursive), RatQ::q());
  // remaining: |lo| <= j - 2, signed: e_{+-i,j} = [e_{+-i,j-1}, e_j]_q
  return make_bracket(root_vector(RootLabel(lo, j - 1), RootBuild::Recursive),
                      chevalley('e', j), RatQ::q());
}

std::optional<OpMismatch> first_mismatch(const OpPtr& a, const OpPtr& b,
                                         Rank n, int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    for (const Monomial& m : homogeneous_basis(n, d)) {
      Element lhs = act(a, m);
      Element rhs = act(b, m);
      if (!(lhs == rhs))
        return OpMismatch{m, std::move(lhs), std::move(rhs)};
    }
  }
  return std::nullopt;
}

bool op_equal_up_to(const OpPtr& a, const OpPtr& b, Rank n, int max_degree) {
  return !first_mismatch(a, b, n, max_degree).has_value();
}

}  // namespace qsymp
