#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qsymp/space.hpp"

namespace qsymp {

/// One of the generator operators of the differential algebra on X:
/// partial derivative, left/right multiplication by a generator, or the
/// diagonal scaling mu_i^{+-1}.
struct GeneratorOp {
  enum class Kind { Partial, LeftMul, RightMul, Mu };
  Kind kind;
  int index;
  int mu_exp = 1;  // +1 or -1, only for Mu

  static GeneratorOp partial(int i) { return {Kind::Partial, i}; }
  static GeneratorOp left_mul(int i) { return {Kind::LeftMul, i}; }
  static GeneratorOp right_mul(int i) { return {Kind::RightMul, i}; }
  static GeneratorOp mu(int i, int exp);
};

struct Operator;
using OpPtr = std::shared_ptr<const Operator>;

/// Immutable operator expression tree. Compose applies its rightmost factor
/// first, matching operator juxtaposition; Bracket(A, B, v) is the deformed
/// commutator AB - v BA.
struct Operator {
  enum class Kind { Generator, Scale, Sum, Compose, Bracket };
  Kind kind;
  GeneratorOp gen{GeneratorOp::Kind::Partial, 1};  // Generator
  RatQ scalar;                                     // Scale factor / Bracket v
  std::vector<OpPtr> children;  // Scale: 1, Bracket: 2, Sum/Compose: any
};

OpPtr make_gen(GeneratorOp g);
OpPtr make_scale(RatQ c, OpPtr a);
OpPtr make_sum(std::vector<OpPtr> terms);
OpPtr make_compose(std::vector<OpPtr> factors);
OpPtr make_bracket(OpPtr a, OpPtr b, RatQ v = RatQ::one());
/// Empty sum.
OpPtr zero_op();
/// Empty composition.
OpPtr identity_op();

/// Action of a single generator operator on an element.
Element generator_action(const GeneratorOp& g, const Element& e);
/// Recursive evaluation of an operator expression; linear in e.
Element act(const OpPtr& op, const Element& e);
Element act(const OpPtr& op, const Monomial& m);

/// Positive-root label: (i, i) for the long roots 2 eps_i, (i, j) with
/// i < j for eps_i + eps_j, and (-i, j) with i < j for eps_j - eps_i.
struct RootLabel {
  int lo;
  int hi;

  RootLabel(int lo, int hi);
  bool is_diagonal() const { return lo == hi; }
  /// "E(+,1,2)" / "E(-,1,2)"; the sign is the sign of lo.
  std::string str() const;
  /// Coordinates of the root in the simple-root basis.
  std::vector<int> simple_coordinates(int n) const;
  bool operator==(const RootLabel& o) const = default;
};

/// The n^2 positive-root labels in block order: (1,1); then for each j >= 2
/// the block (j-1,j), ..., (1,j), (j,j), (-1,j), ..., (1-j,j).
std::vector<RootLabel> enumerate_positive_roots(Rank n);

enum class RootBuild { Closed, Recursive };

/// Factory for the named operators on X at a fixed rank: the Chevalley
/// operators e_i, f_i, k_i, the auxiliary twisted operators, the quadratic
/// sums Phi_i / Psi_i, and the positive-root operators. Built trees are
/// memoized per name and shared; lookups are internally synchronized and the
/// trees themselves are immutable.
class DiffOps {
 public:
  explicit DiffOps(Rank n);
  int rank() const { return n_; }

  OpPtr partial(int k) const;
  OpPtr mul_left(int k) const;
  OpPtr mul_right(int k) const;
  /// mu_k^exp for any integer exp (identity when exp = 0).
  OpPtr mu(int k, int exp = 1) const;

  /// Product of mu_j^exp over j in I with lo <= j <= hi (identity if empty).
  OpPtr mu_product(int lo, int hi, int exp) const;
  /// tau_i = prod_{j=i}^{n} mu_j for argument i in 1..n+1 and
  /// tau_{-i} = prod_{j=-n}^{-i} mu_j for argument -i; both empty products
  /// at |argument| = n+1.
  OpPtr tau(int k, int exp = 1) const;
  /// Lambda_k = mu_1...mu_k for k > 0, mu_k...mu_{-1} for k < 0, identity
  /// for k = 0.
  OpPtr lambda_chain(int k, int exp = 1) const;

  /// Twisted partials D_k, defined for every k in I.
  OpPtr twisted_partial(int k);
  /// Twisted left multiplication X_{k_L}, defined for k < 0.
  OpPtr twisted_left(int k);
  /// Twisted right multiplication X_{k_R}; k > 0 is the dressed generator,
  /// k < 0 the composite extension through Psi.
  OpPtr twisted_right(int k);

  /// Quadratic lowering sum Phi_i (0 <= i <= n; Phi_0 = 0) and raising sum
  /// Psi_i (1 <= i <= n+1; Psi_{n+1} = 0), built from their defining sums.
  OpPtr phi(int i);
  OpPtr psi(int i);
  /// The same operators built through their one-step recursions; equivalent
  /// constructions kept for cross-validation.
  OpPtr phi_recursive(int i);
  OpPtr psi_recursive(int i);

  /// Chevalley operators; which is 'e', 'f' or 'k' (exp +-1 for 'k').
  OpPtr chevalley(char which, int i, int exp = 1);

  /// Positive-root operator, either from the closed-form definition or from
  /// the bracket recursion on simple operators.
  OpPtr root_vector(const RootLabel& label, RootBuild method);

 private:
  OpPtr lookup(const std::string& key) const;
  OpPtr store(const std::string& key, OpPtr op);
  OpPtr build_root_closed(const RootLabel& label);
  OpPtr build_root_recursive(const RootLabel& label);

  int n_;
  mutable std::mutex mutex_;
  std::map<std::string, OpPtr> memo_;
};

/// First monomial of degree <= max_degree (in degree-then-lex order) on
/// which two operators act differently, if any.
struct OpMismatch {
  Monomial input;
  Element lhs;
  Element rhs;
};
std::optional<OpMismatch> first_mismatch(const OpPtr& a, const OpPtr& b,
                                         Rank n, int max_degree);
bool op_equal_up_to(const OpPtr& a, const OpPtr& b, Rank n, int max_degree);

}  // namespace qsymp
