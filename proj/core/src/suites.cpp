#include "qsymp/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

namespace qsymp {

CartanData CartanData::for_rank(Rank n) {
  CartanData cd;
  cd.n = n.value();
  cd.a.assign(cd.n, std::vector<int>(cd.n, 0));
  for (int i = 1; i <= cd.n; ++i) {
    cd.a[i - 1][i - 1] = 2;
    if (i + 1 <= cd.n) cd.a[i - 1][i] = -1;
    if (i - 1 >= 1) cd.a[i - 1][i - 2] = i == 2 ? -2 : -1;
  }
  cd.sym.assign(cd.n, 1);
  cd.sym[0] = 2;
  return cd;
}

CoproductRule coproduct_rule(DiffOps& ops, char which, int i, int exp) {
  switch (which) {
    case 'e':
      return {{{ops.chevalley('e', i), ops.chevalley('k', i)},
               {identity_op(), ops.chevalley('e', i)}}};
    case 'f':
      return {{{ops.chevalley('f', i), identity_op()},
               {ops.chevalley('k', i, -1), ops.chevalley('f', i)}}};
    case 'k':
      return {{{ops.chevalley('k', i, exp), ops.chevalley('k', i, exp)}}};
    default:
      throw std::invalid_argument("coproduct is defined for e, f, k");
  }
}

RatQ counit(char which) {
  switch (which) {
    case 'e':
    case 'f':
      return RatQ::zero();
    case 'k':
      return RatQ::one();
    default:
      throw std::invalid_argument("counit is defined for e, f, k");
  }
}

std::size_t SuiteReport::failure_count() const {
  std::size_t c = 0;
  for (const auto& r : results)
    if (!r.pass) ++c;
  return c;
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << "  n=" << report.n
     << "  D=" << report.degree << "\n";
  for (const auto& r : report.results) {
    os << (r.pass ? "  [ ok ] " : "  [FAIL] ") << r.id << "\n";
    if (!r.pass) {
      os << "         input: " << r.input << "\n";
      os << "         lhs:   " << r.lhs << "\n";
      os << "         rhs:   " << r.rhs << "\n";
    }
  }
  os << "  " << report.results.size() << " identities, "
     << report.failure_count() << " failures  (" << std::fixed
     << std::setprecision(2) << report.seconds << " s)\n";
  return os.str();
}

std::string to_records(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << "suite=" << report.suite << "\tn=" << report.n
       << "\tD=" << report.degree << "\tid=" << r.id
       << "\tstatus=" << (r.pass ? "pass" : "fail");
    if (!r.pass)
      os << "\tinput=" << r.input << "\tlhs=" << r.lhs << "\trhs=" << r.rhs;
    os << "\n";
  }
  os << "suite=" << report.suite << "\tn=" << report.n
     << "\tD=" << report.degree << "\tidentities=" << report.results.size()
     << "\tfailures=" << report.failure_count() << "\n";
  return os.str();
}

namespace {

struct Check {
  std::string id;
  std::function<IdentityResult(const std::string&)> run;
};

SuiteReport run_checks(std::string suite, int n, int degree,
                       std::vector<Check> checks, int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::move(suite);
  report.n = n;
  report.degree = degree;
  report.results.resize(checks.size());
  auto run_one = [&](std::size_t i) {
    report.results[i] = checks[i].run(checks[i].id);
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < checks.size(); i = next++) run_one(i);
    };
    std::vector<std::thread> pool;
    const std::size_t count =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), checks.size());
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

/// Degree-bounded operator identity lhs == rhs.
Check op_check(std::string id, OpPtr lhs, OpPtr rhs, Rank n, int max_degree) {
  return {std::move(id),
          [lhs = std::move(lhs), rhs = std::move(rhs), n,
           max_degree](const std::string& id_) {
            IdentityResult r;
            r.id = id_;
            auto mm = first_mismatch(lhs, rhs, n, max_degree);
            if (!mm) {
              r.pass = true;
            } else {
              r.input = mm->input.str();
              r.lhs = mm->lhs.str();
              r.rhs = mm->rhs.str();
            }
            return r;
          }};
}

/// Fixed element identity lhs == rhs.
Check elt_check(std::string id, Element lhs, Element rhs, std::string input) {
  return {std::move(id),
          [lhs = std::move(lhs), rhs = std::move(rhs),
           input = std::move(input)](const std::string& id_) {
            IdentityResult r;
            r.id = id_;
            if (lhs == rhs) {
              r.pass = true;
            } else {
              r.input = input;
              r.lhs = lhs.str();
              r.rhs = rhs.str();
            }
            return r;
          }};
}

OpPtr power_of(const OpPtr& op, int t) {
  std::vector<OpPtr> fs(static_cast<std::size_t>(t), op);
  return make_compose(std::move(fs));
}

std::string qsub(const RatQ& v) {
  if (v.is_one()) return "";
  return "_" + v.str();
}

std::string bracket_id(const std::string& a, const std::string& b,
                       const RatQ& v, const std::string& rhs) {
  return "[" + a + "," + b + "]" + qsub(v) + "=" + rhs;
}

}  // namespace

SuiteReport serre_suite(Rank n, int max_degree, int jobs) {
  DiffOps ops(n);
  const CartanData cd = CartanData::for_rank(n);
  const int N = n.value();
  auto E = [&](int i) { return ops.chevalley('e', i); };
  auto F = [&](int i) { return ops.chevalley('f', i); };
  auto K = [&](int i, int e = 1) { return ops.chevalley('k', i, e); };
  auto s = [](int i) { return std::to_string(i); };

  std::vector<Check> checks;

  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      checks.push_back(op_check("k(" + s(i) + ")k(" + s(j) + ")=k(" + s(j) +
                                    ")k(" + s(i) + ")",
                                make_compose({K(i), K(j)}),
                                make_compose({K(j), K(i)}), n, max_degree));
  for (int i = 1; i <= N; ++i) {
    checks.push_back(op_check("k(" + s(i) + ")k_inv(" + s(i) + ")=1",
                              make_compose({K(i), K(i, -1)}), identity_op(), n,
                              max_degree));
    checks.push_back(op_check("k_inv(" + s(i) + ")k(" + s(i) + ")=1",
                              make_compose({K(i, -1), K(i)}), identity_op(), n,
                              max_degree));
  }

  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      const int w = cd.d(i) * cd.entry(i, j);
      checks.push_back(op_check(
          "k(" + s(i) + ")e(" + s(j) + ")k_inv(" + s(i) + ")=q^" + s(w) +
              "*e(" + s(j) + ")",
          make_compose({K(i), E(j), K(i, -1)}),
          make_scale(RatQ::q_power(w), E(j)), n, max_degree));
      checks.push_back(op_check(
          "k(" + s(i) + ")f(" + s(j) + ")k_inv(" + s(i) + ")=q^" + s(-w) +
              "*f(" + s(j) + ")",
          make_compose({K(i), F(j), K(i, -1)}),
          make_scale(RatQ::q_power(-w), F(j)), n, max_degree));
    }

  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i != j) {
        checks.push_back(op_check("[e(" + s(i) + "),f(" + s(j) + ")]=0",
                                  make_bracket(E(i), F(j)), zero_op(), n,
                                  max_degree));
        continue;
      }
      const RatQ qi = cd.q_i(i);
      const RatQ denom = qi - qi.inverse();
      OpPtr rhs = make_scale(
          denom.inverse(),
          make_sum({K(i), make_scale(RatQ(-1), K(i, -1))}));
      checks.push_back(op_check(
          "[e(" + s(i) + "),f(" + s(i) + ")]=(k-k_inv)/(q_i-q_i^-1)",
          make_bracket(E(i), F(i)), std::move(rhs), n, max_degree));
    }

  // Quantum Serre relations in summation form, coefficients in base q_i.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      const int m = 1 - cd.entry(i, j);
      std::vector<OpPtr> eterms, fterms;
      for (int t = 0; t <= m; ++t) {
        RatQ c = qbinom_base(m, t, cd.d(i));
        if (t % 2 == 1) c = -c;
        eterms.push_back(make_scale(
            c, make_compose({power_of(E(i), t), E(j), power_of(E(i), m - t)})));
        fterms.push_back(make_scale(
            c, make_compose({power_of(F(i), t), F(j), power_of(F(i), m - t)})));
      }
      checks.push_back(op_check("serre-e:" + s(i) + "," + s(j),
                                make_sum(std::move(eterms)), zero_op(), n,
                                max_degree));
      checks.push_back(op_check("serre-f:" + s(i) + "," + s(j),
                                make_sum(std::move(fterms)), zero_op(), n,
                                max_degree));
    }

  // Equivalent bracket forms of the rank-two Serre relations.
  OpPtr e12 = make_bracket(E(1), E(2), RatQ::q_power(2));
  checks.push_back(op_check("[e(1),[e(1),e(2)]_q^2]_q^-2=0",
                            make_bracket(E(1), e12, RatQ::q_power(-2)),
                            zero_op(), n, max_degree));
  checks.push_back(op_check("[e(2),[[e(1),e(2)]_q^2,e(2)]]_q^2=0",
                            make_bracket(E(2), make_bracket(e12, E(2)),
                                         RatQ::q_power(2)),
                            zero_op(), n, max_degree));
  for (int i = 2; i <= N; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 2 || j > N) continue;
      checks.push_back(op_check(
          "[e(" + s(i) + "),[e(" + s(i) + "),e(" + s(j) + ")]_q]_q^-1=0",
          make_bracket(E(i), make_bracket(E(i), E(j), RatQ::q()),
                       RatQ::q_power(-1)),
          zero_op(), n, max_degree));
    }

  return run_checks("serre", N, max_degree, std::move(checks), jobs);
}

Element closed_action(char which, int i, const Monomial& a) {
  const int n = a.rank();
  const Rank rn(n);
  Element out(rn);
  if (which == 'k') {
    const int w = i == 1 ? 2 * (a.exp(-1) - a.exp(1))
                         : a.exp(-i) - a.exp(1 - i) + a.exp(i - 1) - a.exp(i);
    out.add_term(a, RatQ::q_power(w));
    return out;
  }
  auto neg_tail = [&](void) {
    int t = 0;
    for (int j = -n; j <= -2; ++j) t += a.exp(j);
    return t;
  };
  if (which == 'e') {
    if (i == 1) {
      if (a.exp(1) >= 1)
        out.add_term(a.raised(-1, 1).raised(1, -1), qint_base(a.exp(1), 2));
      if (a.exp(1) >= 2) {
        const RatQ c = q_lambda() * qbinom(a.exp(1), 2) *
                       RatQ::q_power(2 - 2 * neg_tail());
        out = out + product(omega(rn, 2),
                            Element::from_monomial(a.raised(1, -2)))
                        .scaled(c);
      }
      return out;
    }
    if (a.exp(1 - i) >= 1)
      out.add_term(a.raised(-i, 1).raised(1 - i, -1),
                   RatQ::q_power(a.exp(i - 1) - a.exp(i)) * qint(a.exp(1 - i)));
    if (a.exp(i) >= 1)
      out.add_term(a.raised(i - 1, 1).raised(i, -1), -qint(a.exp(i)));
    return out;
  }
  if (which == 'f') {
    if (i == 1) {
      if (a.exp(-1) >= 1)
        out.add_term(a.raised(-1, -1).raised(1, 1), qint_base(a.exp(-1), 2));
      if (a.exp(-1) >= 2) {
        const RatQ c = q_lambda() * qbinom(a.exp(-1), 2) *
                       RatQ::q_power(2 - 2 * neg_tail());
        out = out + product(omega(rn, 2),
                            Element::from_monomial(a.raised(-1, -2)))
                        .scaled(c);
      }
      return out;
    }
    if (a.exp(-i) >= 1)
      out.add_term(a.raised(-i, -1).raised(1 - i, 1), qint(a.exp(-i)));
    if (a.exp(i - 1) >= 1)
      out.add_term(
          a.raised(i - 1, -1).raised(i, 1),
          -RatQ::q_power(a.exp(1 - i) - a.exp(-i)) * qint(a.exp(i - 1)));
    return out;
  }
  throw std::invalid_argument("closed_action is defined for e, f, k");
}

Element closed_action_e12(const Monomial& a) {
  const int n = a.rank();
  const Rank rn(n);
  Element out(rn);
  if (a.exp(1) >= 1)
    out.add_term(a.raised(-2, 1).raised(1, -1),
                 -qint(a.exp(1)) * RatQ::q_power(2 + a.exp(-1) - a.exp(2)));
  if (a.exp(2) >= 1)
    out.add_term(a.raised(-1, 1).raised(2, -1),
                 -qint(a.exp(2)) * RatQ::q_power(-2 * a.exp(1)));
  if (a.exp(1) >= 1 && a.exp(2) >= 1) {
    int tail = 0;
    for (int j = -n; j <= -2; ++j) tail += a.exp(j);
    const RatQ c = -q_lambda() * qint(a.exp(1)) * qint(a.exp(2)) *
                   RatQ::q_power(3 - 2 * tail - a.exp(1));
    out = out +
          product(omega(rn, 2),
                  Element::from_monomial(a.raised(1, -1).raised(2, -1)))
              .scaled(c);
  }
  return out;
}

SuiteReport action_formula_suite(Rank n, int max_degree, int jobs) {
  DiffOps ops(n);
  std::vector<Check> checks;
  auto formula_check = [&](char which, int i) {
    OpPtr op = ops.chevalley(which, i);
    std::string id =
        std::string("action:") + which + "(" + std::to_string(i) + ")";
    checks.push_back(
        {std::move(id), [op, which, i, n, max_degree](const std::string& id_) {
           IdentityResult r;
           r.id = id_;
           for (int d = 0; d <= max_degree; ++d)
             for (const Monomial& m : homogeneous_basis(n, d)) {
               Element lhs = act(op, m);
               Element rhs = closed_action(which, i, m);
               if (!(lhs == rhs)) {
                 r.input = m.str();
                 r.lhs = lhs.str();
                 r.rhs = rhs.str();
                 return r;
               }
             }
           r.pass = true;
           return r;
         }});
  };
  for (int i = 1; i <= n.value(); ++i)
    for (char w : {'e', 'f', 'k'}) formula_check(w, i);
  return run_checks("action", n.value(), max_degree, std::move(checks), jobs);
}

SuiteReport module_algebra_suite(Rank n, int max_degree, int jobs) {
  DiffOps ops(n);
  std::vector<Check> checks;
  const Element unit = Element::unit(n);
  auto s = [](int i) { return std::to_string(i); };

  for (int i = 1; i <= n.value(); ++i) {
    checks.push_back(elt_check("unit:e(" + s(i) + ")",
                               act(ops.chevalley('e', i), unit),
                               unit.scaled(counit('e')), "1"));
    checks.push_back(elt_check("unit:f(" + s(i) + ")",
                               act(ops.chevalley('f', i), unit),
                               unit.scaled(counit('f')), "1"));
    checks.push_back(elt_check("unit:k(" + s(i) + ")",
                               act(ops.chevalley('k', i), unit),
                               unit.scaled(counit('k')), "1"));
    checks.push_back(elt_check("unit:k_inv(" + s(i) + ")",
                               act(ops.chevalley('k', i, -1), unit),
                               unit.scaled(counit('k')), "1"));
  }

  const std::vector<Monomial> basis = basis_up_to(n, max_degree);
  auto law_check = [&](std::string id, OpPtr h, CoproductRule rule) {
    checks.push_back(
        {std::move(id), [h = std::move(h), rule = std::move(rule), basis,
                         n](const std::string& id_) {
           IdentityResult r;
           r.id = id_;
           for (const Monomial& ma : basis)
             for (const Monomial& mb : basis) {
               const Element ea = Element::from_monomial(ma);
               const Element eb = Element::from_monomial(mb);
               const Element lhs = act(h, product(ea, eb));
               Element rhs(n);
               for (const TensorTerm& t : rule.terms)
                 rhs = rhs + product(act(t.first, ea), act(t.second, eb));
               if (!(lhs == rhs)) {
                 r.input = "a=" + ma.str() + ";b=" + mb.str();
                 r.lhs = lhs.str();
                 r.rhs = rhs.str();
                 return r;
               }
             }
           r.pass = true;
           return r;
         }});
  };
  for (int i = 1; i <= n.value(); ++i) {
    law_check("coproduct:k(" + s(i) + ")", ops.chevalley('k', i),
              coproduct_rule(ops, 'k', i));
    law_check("coproduct:k_inv(" + s(i) + ")", ops.chevalley('k', i, -1),
              coproduct_rule(ops, 'k', i, -1));
    law_check("coproduct:e(" + s(i) + ")", ops.chevalley('e', i),
              coproduct_rule(ops, 'e', i));
    law_check("coproduct:f(" + s(i) + ")", ops.chevalley('f', i),
              coproduct_rule(ops, 'f', i));
  }
  return run_checks("module-algebra", n.value(), max_degree, std::move(checks),
                    jobs);
}

SuiteReport highest_weight_suite(Rank n, int m) {
  DiffOps ops(n);
  std::vector<Check> checks;
  const int N = n.value();
  auto s = [](int i) { return std::to_string(i); };
  const Monomial top = Monomial(n).raised(-N, m);
  const Element v = Element::from_monomial(top);

  for (int i = 1; i <= N; ++i)
    checks.push_back(elt_check("annihilate:e(" + s(i) + ")",
                               act(ops.chevalley('e', i), v),
                               Element::zero(n), top.str()));
  for (int i = 1; i <= N; ++i) {
    const int w = i == N ? m : 0;
    checks.push_back(elt_check("weight:k(" + s(i) + ")=q^" + s(w),
                               act(ops.chevalley('k', i), v),
                               v.scaled(RatQ::q_power(w)), top.str()));
  }

  std::vector<OpPtr> lowering;
  for (int i = 1; i <= N; ++i) lowering.push_back(ops.chevalley('f', i));
  checks.push_back({"span-dimension", [lowering, n, m,
                                       v](const std::string& id_) {
                      IdentityResult r;
                      r.id = id_;
                      // Exact row reduction over Q(q): echelon basis keyed by
                      // leading monomial.
                      std::map<Monomial, Element> pivots;
                      auto insert = [&pivots](Element w) {
                        while (!w.is_zero()) {
                          const Monomial lead = w.terms().rbegin()->first;
                          auto it = pivots.find(lead);
                          if (it == pivots.end()) {
                            const RatQ lc = w.terms().rbegin()->second;
                            w = w.scaled(lc.inverse());
                            pivots.emplace(lead, w);
                            return std::optional<Element>(std::move(w));
                          }
                          w = w - it->second.scaled(w.coeff(lead));
                        }
                        return std::optional<Element>();
                      };
                      std::vector<Element> frontier;
                      insert(v);
                      frontier.push_back(v);
                      while (!frontier.empty()) {
                        std::vector<Element> next;
                        for (const Element& u : frontier)
                          for (const OpPtr& f : lowering) {
                            auto fresh = insert(act(f, u));
                            if (fresh) next.push_back(std::move(*fresh));
                          }
                        frontier = std::move(next);
                      }
                      const auto want = graded_dimension(n.value(), m);
                      if (pivots.size() == want) {
                        r.pass = true;
                      } else {
                        r.input = "f-closure of x(-n)^m";
                        r.lhs = "dim=" + std::to_string(pivots.size());
                        r.rhs = "dim=" + std::to_string(want);
                      }
                      return r;
                    }});
  return run_checks("highest-weight", N, m, std::move(checks), 1);
}

SuiteReport root_vector_suite(Rank n, int max_degree, int jobs) {
  DiffOps ops(n);
  const CartanData cd = CartanData::for_rank(n);
  std::vector<Check> checks;
  auto s = [](int i) { return std::to_string(i); };

  const auto labels = enumerate_positive_roots(n);
  for (const RootLabel& label : labels)
    checks.push_back(op_check("construction:" + label.str(),
                              ops.root_vector(label, RootBuild::Closed),
                              ops.root_vector(label, RootBuild::Recursive), n,
                              max_degree));

  checks.push_back(op_check(
      "simple:E(+,1,1)=e(1)",
      ops.root_vector(RootLabel(1, 1), RootBuild::Closed),
      ops.chevalley('e', 1), n, max_degree));
  for (int i = 2; i <= n.value(); ++i)
    checks.push_back(op_check(
        "simple:E(-," + s(i - 1) + "," + s(i) + ")=e(" + s(i) + ")",
        ops.root_vector(RootLabel(1 - i, i), RootBuild::Closed),
        ops.chevalley('e', i), n, max_degree));

  // The explicit action of the (1,2) root operator.
  {
    OpPtr op = ops.root_vector(RootLabel(1, 2), RootBuild::Closed);
    checks.push_back(
        {"action:E(+,1,2)", [op, n](const std::string& id_) {
           IdentityResult r;
           r.id = id_;
           for (int d = 0; d <= 3; ++d)
             for (const Monomial& m : homogeneous_basis(n, d)) {
               Element lhs = act(op, m);
               Element rhs = closed_action_e12(m);
               if (!(lhs == rhs)) {
                 r.input = m.str();
                 r.lhs = lhs.str();
                 r.rhs = rhs.str();
                 return r;
               }
             }
           r.pass = true;
           return r;
         }});
  }

  // Adjoint k-weights: k_i R k_i^{-1} = q_i^{<root, alpha_i>} R, with the
  // pairing read off the simple-root coordinates of the label.
  for (const RootLabel& label : labels) {
    const std::vector<int> c = label.simple_coordinates(n.value());
    for (int i = 1; i <= n.value(); ++i) {
      int pair = 0;
      for (int j = 1; j <= n.value(); ++j) pair += c[j - 1] * cd.entry(i, j);
      const int w = cd.d(i) * pair;
      OpPtr R = ops.root_vector(label, RootBuild::Closed);
      checks.push_back(op_check(
          "weight:" + label.str() + ":k(" + s(i) + ")=q^" + s(w),
          make_compose({ops.chevalley('k', i), R}),
          make_scale(RatQ::q_power(w),
                     make_compose({R, ops.chevalley('k', i)})),
          n, max_degree));
    }
  }

  return run_checks("root-vectors", n.value(), max_degree, std::move(checks),
                    jobs);
}

SuiteReport lemma_suite(Rank n, int max_degree, int jobs) {
  DiffOps ops(n);
  const int N = n.value();
  std::vector<Check> checks;
  auto s = [](int i) { return std::to_string(i); };
  const RatQ q = RatQ::q();
  const RatQ q2 = RatQ::q_power(2);
  const RatQ qm1 = RatQ::q_power(-1);
  const RatQ qm2 = RatQ::q_power(-2);
  const RatQ lam = q_lambda();

  auto D = [&](int k) { return ops.twisted_partial(k); };
  auto XL = [&](int k) { return ops.twisted_left(k); };
  auto XR = [&](int k) { return ops.twisted_right(k); };
  auto MU = [&](int k, int e = 1) { return ops.mu(k, e); };
  auto add_op = [&](std::string id, OpPtr lhs, OpPtr rhs) {
    checks.push_back(op_check(std::move(id), std::move(lhs), std::move(rhs), n,
                              max_degree));
  };
  auto Dn = [&](int k) { return "D(" + s(k) + ")"; };
  auto XLn = [&](int k) { return "XL(" + s(k) + ")"; };
  auto XRn = [&](int k) { return "XR(" + s(k) + ")"; };
  auto MUn = [&](int k) { return "mu(" + s(k) + ")"; };

  std::vector<int> all_indices;
  for (int k = -N; k <= N; ++k)
    if (k != 0) all_indices.push_back(k);

  // Bracket-calculus self-tests on pseudo-random generator triples: the
  // v-bracket identities that hold in any associative algebra.
  {
    std::vector<OpPtr> gens;
    std::vector<std::string> names;
    for (int k : all_indices) {
      gens.push_back(ops.partial(k));
      names.push_back("d(" + s(k) + ")");
      gens.push_back(ops.mul_left(k));
      names.push_back("xl(" + s(k) + ")");
      gens.push_back(ops.mul_right(k));
      names.push_back("xr(" + s(k) + ")");
      gens.push_back(ops.mu(k, 1));
      names.push_back("mu(" + s(k) + ")");
      gens.push_back(ops.mu(k, -1));
      names.push_back("mu_inv(" + s(k) + ")");
    }
    std::mt19937 rng(20171027u);
    for (int t = 0; t < 5; ++t) {
      const std::size_t ia = rng() % gens.size();
      const std::size_t ib = rng() % gens.size();
      const std::size_t ic = rng() % gens.size();
      const OpPtr A = gens[ia], B = gens[ib], C = gens[ic];
      const std::string tag =
          names[ia] + "," + names[ib] + "," + names[ic];
      add_op("br-swap:" + tag, make_bracket(A, B, q),
             make_scale(-q, make_bracket(B, A, qm1)));
      add_op("br-product:" + tag, make_bracket(make_compose({A, B}), C, q2),
             make_sum({make_compose({A, make_bracket(B, C, q)}),
                       make_scale(q, make_compose({make_bracket(A, C, q), B}))}));
      add_op("br-nested:" + tag,
             make_bracket(make_bracket(A, B, q), C, q),
             make_sum({make_bracket(A, make_bracket(B, C), q2),
                       make_bracket(make_bracket(A, C, q), B, q)}));
    }
  }

  // e_i and f_i on the quadratic sums Omega_j.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      Element etarget(n), ftarget(n);
      if (i == j && i == 1) {
        etarget.add_term(Monomial(n).raised(-1, 2), RatQ::one());
        ftarget.add_term(Monomial(n).raised(1, 2), RatQ::one());
      } else if (i == j) {
        etarget.add_term(Monomial(n).raised(-j, 1).raised(j - 1, 1), RatQ(-1));
        ftarget.add_term(Monomial(n).raised(1 - j, 1).raised(j, 1),
                         RatQ::one());
      }
      checks.push_back(elt_check("omega-action:e(" + s(i) + "),Omega(" + s(j) +
                                     ")",
                                 act(ops.chevalley('e', i), omega(n, j)),
                                 etarget, "Omega(" + s(j) + ")"));
      checks.push_back(elt_check("omega-action:f(" + s(i) + "),Omega(" + s(j) +
                                     ")",
                                 act(ops.chevalley('f', i), omega(n, j)),
                                 ftarget, "Omega(" + s(j) + ")"));
    }

  // Twisted generators against the diagonal scalings.
  for (int k : all_indices)
    for (int l : all_indices)
      add_op("mu-comm:" + Dn(k) + "," + MUn(l),
             make_compose({D(k), MU(l)}),
             make_scale(RatQ::q_power(k == l ? 1 : 0),
                        make_compose({MU(l), D(k)})));
  for (int i = 1; i <= N; ++i)
    for (int k : all_indices) {
      add_op("mu-comm:" + XRn(i) + "," + MUn(k),
             make_compose({XR(i), MU(k)}),
             make_scale(RatQ::q_power(k == i ? -1 : 0),
                        make_compose({MU(k), XR(i)})));
      add_op("mu-comm:" + XLn(-i) + "," + MUn(k),
             make_compose({XL(-i), MU(k)}),
             make_scale(RatQ::q_power(k == -i ? -1 : 0),
                        make_compose({MU(k), XL(-i)})));
    }

  // Pairwise q-commutation of the twisted generators.
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      add_op(bracket_id(Dn(j), Dn(i), q, "0"), make_bracket(D(j), D(i), q),
             zero_op());
      add_op(bracket_id(Dn(-i), Dn(-j), q, "0"), make_bracket(D(-i), D(-j), q),
             zero_op());
      add_op(bracket_id(XRn(j), XRn(i), q, "0"),
             make_bracket(XR(j), XR(i), q), zero_op());
      add_op(bracket_id(XLn(-i), XLn(-j), q, "0"),
             make_bracket(XL(-i), XL(-j), q), zero_op());
      add_op(bracket_id(XRn(i), Dn(j), q, "0"), make_bracket(XR(i), D(j), q),
             zero_op());
      add_op(bracket_id(XLn(-j), Dn(-i), q, "0"),
             make_bracket(XL(-j), D(-i), q), zero_op());
      add_op(bracket_id(Dn(i), XRn(j), q, "0"), make_bracket(D(i), XR(j), q),
             zero_op());
      add_op(bracket_id(Dn(-j), XLn(-i), q, "0"),
             make_bracket(D(-j), XL(-i), q), zero_op());
    }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      add_op(bracket_id(Dn(i), Dn(-j), RatQ::one(), "0"),
             make_bracket(D(i), D(-j)), zero_op());
      add_op(bracket_id(XLn(-i), XRn(j), RatQ::one(), "0"),
             make_bracket(XL(-i), XR(j)), zero_op());
      add_op(bracket_id(Dn(i), XLn(-j), RatQ::one(), "0"),
             make_bracket(D(i), XL(-j)), zero_op());
      add_op(bracket_id(Dn(-i), XRn(j), RatQ::one(), "0"),
             make_bracket(D(-i), XR(j)), zero_op());
    }
  for (int i = 1; i <= N; ++i) {
    add_op(bracket_id(Dn(i), Dn(-i), q, "0"), make_bracket(D(i), D(-i), q),
           zero_op());
    add_op(bracket_id(XRn(i), XLn(-i), q, "0"),
           make_bracket(XR(i), XL(-i), q), zero_op());
    add_op(bracket_id(XLn(-i), Dn(i), q, "0"), make_bracket(XL(-i), D(i), q),
           zero_op());
    add_op(bracket_id(Dn(-i), XRn(i), q, "0"), make_bracket(D(-i), XR(i), q),
           zero_op());
  }

  // Products and brackets of matched twisted pairs.
  for (int i = 1; i <= N; ++i) {
    auto diag = [&](const RatQ& c, OpPtr m, const RatQ& cid) {
      // c * m + cid * id
      return make_sum({make_scale(c, std::move(m)),
                       make_scale(cid, identity_op())});
    };
    add_op("prod:" + Dn(i) + XRn(i),
           make_compose({D(i), XR(i)}),
           diag(q * lam.inverse() * q2, MU(i, 2), -(q * lam.inverse())));
    add_op("prod:" + XRn(i) + Dn(i),
           make_compose({XR(i), D(i)}),
           diag(q * lam.inverse(), MU(i, 2), -(q * lam.inverse())));
    add_op("prod:" + Dn(-i) + XLn(-i),
           make_compose({D(-i), XL(-i)}),
           diag(lam.inverse() * q2, MU(-i, 2), -lam.inverse()));
    add_op("prod:" + XLn(-i) + Dn(-i),
           make_compose({XL(-i), D(-i)}),
           diag(lam.inverse(), MU(-i, 2), -lam.inverse()));
    add_op(bracket_id(Dn(i), XRn(i), RatQ::one(), "q^2*mu^2"),
           make_bracket(D(i), XR(i)), make_scale(q2, MU(i, 2)));
    add_op(bracket_id(Dn(i), XRn(i), q2, "q^2"),
           make_bracket(D(i), XR(i), q2), make_scale(q2, identity_op()));
    add_op(bracket_id(XRn(i), Dn(i), qm2, "-1"),
           make_bracket(XR(i), D(i), qm2),
           make_scale(RatQ(-1), identity_op()));
    add_op(bracket_id(Dn(-i), XLn(-i), RatQ::one(), "q*mu^2"),
           make_bracket(D(-i), XL(-i)), make_scale(q, MU(-i, 2)));
    add_op(bracket_id(Dn(-i), XLn(-i), q2, "q"),
           make_bracket(D(-i), XL(-i), q2), make_scale(q, identity_op()));
    add_op(bracket_id(XLn(-i), Dn(-i), qm2, "-q^-1"),
           make_bracket(XL(-i), D(-i), qm2),
           make_scale(-qm1, identity_op()));
  }

  // Phi / Psi against the diagonal scalings. Each summand of Psi_i raises
  // the exponent pair (a_{-j}, a_j) for its own j, so only the index
  // difference a_l - a_{-l} is uniformly preserved: a single mu_k admits a
  // twisted commutation only when the sum has one term. The balanced
  // products mu_l mu_{-l}^{-1} commute outright.
  for (int i = 1; i <= N; ++i) {
    const std::string Pn = "Psi(" + s(i) + ")", Fn = "Phi(" + s(i) + ")";
    for (int t : all_indices) {
      const int at = t < 0 ? -t : t;
      if (at < i)
        add_op(bracket_id(Pn, MUn(t), RatQ::one(), "0"),
               make_bracket(ops.psi(i), MU(t)), zero_op());
      if (at > i)
        add_op(bracket_id(Fn, MUn(t), RatQ::one(), "0"),
               make_bracket(ops.phi(i), MU(t)), zero_op());
      add_op("[" + Pn + "," + MUn(t) + "*mu_inv(" + s(-t) + ")]=0",
             make_bracket(ops.psi(i), make_compose({MU(t), MU(-t, -1)})),
             zero_op());
      add_op("[" + Fn + "," + MUn(t) + "*mu_inv(" + s(-t) + ")]=0",
             make_bracket(ops.phi(i), make_compose({MU(t), MU(-t, -1)})),
             zero_op());
    }
  }
  // Single-mu twisted commutations hold exactly for the one-summand cases.
  for (int t : {-N, N})
    add_op(bracket_id("Psi(" + s(N) + ")", MUn(t), qm1, "0"),
           make_bracket(ops.psi(N), MU(t), qm1), zero_op());
  for (int t : {-1, 1})
    add_op(bracket_id("Phi(1)", MUn(t), q, "0"),
           make_bracket(ops.phi(1), MU(t), q), zero_op());

  // Phi / Psi against twisted generators at strictly larger index.
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      add_op(bracket_id(Dn(i), "Psi(" + s(j) + ")", q, "0"),
             make_bracket(D(i), ops.psi(j), q), zero_op());
      add_op(bracket_id(Dn(-i), "Psi(" + s(j) + ")", qm1, "0"),
             make_bracket(D(-i), ops.psi(j), qm1), zero_op());
      add_op(bracket_id("Psi(" + s(j) + ")", XLn(-i), qm1, "0"),
             make_bracket(ops.psi(j), XL(-i), qm1), zero_op());
      add_op(bracket_id("Psi(" + s(j) + ")", XRn(i), q, "0"),
             make_bracket(ops.psi(j), XR(i), q), zero_op());
      add_op(bracket_id("Phi(" + s(i) + ")", XLn(-j), qm1, "0"),
             make_bracket(ops.phi(i), XL(-j), qm1), zero_op());
      add_op(bracket_id("Phi(" + s(i) + ")", XRn(j), q, "0"),
             make_bracket(ops.phi(i), XR(j), q), zero_op());
    }

  // Phi against twisted partials; Psi against the mixed quadratic pairs.
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) {
      add_op(bracket_id("Phi(" + s(i) + ")", Dn(j), qm1, "0"),
             make_bracket(ops.phi(i), D(j), qm1), zero_op());
      add_op(bracket_id("Phi(" + s(i) + ")", Dn(-j), q, "0"),
             make_bracket(ops.phi(i), D(-j), q), zero_op());
      if (j <= N - 1) {
        OpPtr rhs_core = make_compose({ops.tau(-i, 2), ops.tau(-(j + 1), -2),
                                       XL(-(j + 1)), XR(j)});
        const std::string rhs_name = "-q^" + s(j + 2 - i) + "*tau(-" + s(i) +
                                     ")^2*tau(-" + s(j + 1) + ")^-2*" +
                                     XLn(-(j + 1)) + XRn(j);
        OpPtr lhs1 = make_bracket(ops.psi(i),
                                  make_compose({XR(j), D(j + 1)}));
        OpPtr lhs2 = make_bracket(ops.psi(i),
                                  make_compose({XL(-(j + 1)), D(-j)}));
        add_op("[Psi(" + s(i) + ")," + XRn(j) + Dn(j + 1) + "]=" + rhs_name,
               lhs1,
               make_scale(-RatQ::q_power(j + 2 - i), rhs_core));
        add_op("[Psi(" + s(i) + ")," + XLn(-(j + 1)) + Dn(-j) + "]=" +
                   "-q^" + s(j + 1 - i) + "*...",
               lhs2,
               make_scale(-RatQ::q_power(j + 1 - i), rhs_core));
        add_op("[Psi(" + s(i) + ")," + XRn(j) + Dn(j + 1) + "]=q*[Psi," +
                   XLn(-(j + 1)) + Dn(-j) + "]",
               lhs1, make_scale(q, lhs2));
      }
    }

  // Matched-index Phi / Psi identities.
  for (int i = 1; i <= N; ++i) {
    add_op(bracket_id(Dn(i), "Psi(" + s(i) + ")", q, "q*" + XLn(-i)),
           make_bracket(D(i), ops.psi(i), q), make_scale(q, XL(-i)));
    add_op(bracket_id("Psi(" + s(i) + ")", XLn(-i), q, "0"),
           make_bracket(ops.psi(i), XL(-i), q), zero_op());
    add_op(bracket_id("Phi(" + s(i) + ")", XRn(i), q,
                      "q^2*L(" + s(i) + ")^2*" + Dn(-i)),
           make_bracket(ops.phi(i), XR(i), q),
           make_scale(q2, make_compose({ops.lambda_chain(i, 2), D(-i)})));
    add_op(bracket_id("Phi(" + s(i) + ")", XLn(-i), qm1,
                      "L(" + s(i - 1) + ")^2*mu(-" + s(i) + ")^2*" + Dn(i)),
           make_bracket(ops.phi(i), XL(-i), qm1),
           make_compose({ops.lambda_chain(i - 1, 2), MU(-i, 2), D(i)}));
    add_op(bracket_id("Phi(" + s(i) + ")", XLn(-i), q,
                      "L^2*D-lam/q*XL*Phi(" + s(i - 1) + ")"),
           make_bracket(ops.phi(i), XL(-i), q),
           make_sum({make_compose({ops.lambda_chain(i - 1, 2), D(i)}),
                     make_scale(-(lam * qm1),
                                make_compose({XL(-i), ops.phi(i - 1)}))}));
  }
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k)
      add_op("[" + Dn(k) + ",[" + Dn(k) + ",Psi(" + s(i) + ")]_q]_q^-1=0",
             make_bracket(D(k), make_bracket(D(k), ops.psi(i), q), qm1),
             zero_op());

  // Extended right multiplications.
  for (int i = 1; i <= N; ++i) {
    for (int k : all_indices) {
      const int ak = k < 0 ? -k : k;
      if (ak < i)
        add_op(bracket_id(XRn(-i), MUn(k), RatQ::one(), "0"),
               make_bracket(XR(-i), MU(k)), zero_op());
      if (ak != i)
        add_op("[" + XRn(-i) + "," + MUn(k) + "*mu_inv(" + s(-k) + ")]=0",
               make_bracket(XR(-i), make_compose({MU(k), MU(-k, -1)})),
               zero_op());
    }
    add_op("[" + XRn(-i) + ",mu(" + s(i) + ")*mu_inv(" + s(-i) + ")]_q=0",
           make_bracket(XR(-i), make_compose({MU(i), MU(-i, -1)}), q),
           zero_op());
    add_op(bracket_id(Dn(i), XRn(-i), q, "0"), make_bracket(D(i), XR(-i), q),
           zero_op());
    add_op(bracket_id(XRn(-i), XLn(-i), RatQ::one(), "0"),
           make_bracket(XR(-i), XL(-i)), zero_op());
    if (i <= N - 1) {
      OpPtr tail = make_compose(
          {ops.lambda_chain(-i, 2), MU(i, 2), XL(-(i + 1))});
      add_op("[" + XRn(-i) + "," + XRn(i) + Dn(i + 1) + "]_q=q^2*" +
                 XRn(-(i + 1)) + "-q^" + s(i + 3) + "*L(-" + s(i) +
                 ")^2*mu^2*" + XLn(-(i + 1)),
             make_bracket(XR(-i), make_compose({XR(i), D(i + 1)}), q),
             make_sum({make_scale(q2, XR(-(i + 1))),
                       make_scale(-RatQ::q_power(i + 3), tail)}));
      add_op("[" + XRn(-i) + "," + XLn(-(i + 1)) + Dn(-i) + "]_q=-q^" +
                 s(i + 2) + "*L(-" + s(i) + ")^2*mu^2*" + XLn(-(i + 1)),
             make_bracket(XR(-i), make_compose({XL(-(i + 1)), D(-i)}), q),
             make_scale(-RatQ::q_power(i + 2), tail));
    }
  }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      add_op(bracket_id(XRn(i), XRn(-j), RatQ::one(), "0"),
             make_bracket(XR(i), XR(-j)), zero_op());
      add_op(bracket_id(XRn(-j), XLn(-i), q, "0"),
             make_bracket(XR(-j), XL(-i), q), zero_op());
      add_op(bracket_id(Dn(i), XRn(-j), RatQ::one(), "0"),
             make_bracket(D(i), XR(-j)), zero_op());
      add_op(bracket_id(Dn(-i), XRn(-j), q, "0"),
             make_bracket(D(-i), XR(-j), q), zero_op());
    }
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j)
      add_op("[" + XRn(-j) + ",[" + Dn(j) + ",Psi(" + s(i) + ")]_q]=0",
             make_bracket(XR(-j), make_bracket(D(j), ops.psi(i), q)),
             zero_op());

  // Both construction routes for Phi and Psi agree.
  for (int i = 0; i <= N; ++i)
    add_op("phi-routes:" + s(i), ops.phi(i), ops.phi_recursive(i));
  for (int i = 1; i <= N + 1; ++i)
    add_op("psi-routes:" + s(i), ops.psi(i), ops.psi_recursive(i));

  return run_checks("lemmas", N, max_degree, std::move(checks), jobs);
}

}  // namespace qsymp
