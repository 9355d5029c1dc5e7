#include "wilson/daha/relations.hpp"

#include <functional>

namespace wilson {

namespace {

// Test vectors for operator identities that are indexed by a polynomial.
constexpr int kTestVectorDegree = 3;

using MonomialTest = std::function<bool(int k)>;

RelationCheck run(std::string name, int max_degree, const MonomialTest& holds) {
  RelationCheck check{std::move(name), max_degree, true, std::nullopt};
  for (int k = 0; k <= max_degree; ++k) {
    if (!holds(k)) {
      check.passed = false;
      check.witness = Poly::monomial(k);
      break;
    }
  }
  return check;
}

// V p(W) - (s p)(W) V == Q(W) on the test vectors, where
// Q(y) = num(y) / den(y) * ((s p)(y) - p(y)) is a polynomial.
bool cross_relation_holds(const Operator& v, const Operator& w, const Poly& p, const Poly& sp,
                          const Poly& num, const Poly& den) {
  Poly q = (num * (sp - p)).divide_exact(den);
  for (int j = 0; j <= kTestVectorDegree; ++j) {
    Poly f = Poly::monomial(j);
    Poly lhs = v(apply_polynomial_in(p, w, f)) - apply_polynomial_in(sp, w, v(f));
    if (lhs != apply_polynomial_in(q, w, f)) return false;
  }
  return true;
}

struct Generators {
  Operator t0, t1, u0, u1, z;
};

void quadratic_and_sum(VerificationReport& report, const std::string& prefix, const Generators& g,
                       const ParamSet& t, int max_degree) {
  auto square = [&](const Operator& op, const Rational& value) {
    return [op, value](int k) {
      Poly m = Poly::monomial(k);
      return op(op(m)) == m * (value * value);
    };
  };
  report.checks.push_back(run(prefix + "T_0^2 = t_0^2", max_degree, square(g.t0, t.t0())));
  report.checks.push_back(run(prefix + "T_1^2 = t_1^2", max_degree, square(g.t1, t.t1())));
  report.checks.push_back(run(prefix + "U_0^2 = u_0^2", max_degree, square(g.u0, t.u0())));
  report.checks.push_back(run(prefix + "U_1^2 = u_1^2", max_degree, square(g.u1, t.u1())));
  report.checks.push_back(run(prefix + "T_0 + T_1 + U_0 + U_1 = -1/2", max_degree, [&](int k) {
    Poly m = Poly::monomial(k);
    return g.t0(m) + g.t1(m) + g.u0(m) + g.u1(m) == m * Rational(-1, 2);
  }));
}

void cross_relations(VerificationReport& report, const std::string& prefix, const Generators& g,
                     const ParamSet& t, int max_degree) {
  // T_0: a_0(y) = 1 - 2y, a_0^v(y) = 1/2 - y.
  Poly num0 = Poly{t.t0() * t.t0() - t.u0() * t.u0()} + Poly{Rational(1, 2), Rational(-1)} *
                                                            Poly{Rational(1, 2), Rational(-1)};
  Poly den0{Rational(1), Rational(-2)};
  // T_1: a_1(y) = 2y, a_1^v(y) = y.
  Poly num1 = Poly{t.t1() * t.t1() - t.u1() * t.u1(), Rational(0), Rational(1)};
  Poly den1{Rational(0), Rational(2)};
  report.checks.push_back(
      run(prefix + "T_0 p(z) - (s_0 p)(z) T_0 = cross term", max_degree, [&](int k) {
        Poly p = Poly::monomial(k);
        return cross_relation_holds(g.t0, g.z, p, p.reflect_s0(), num0, den0);
      }));
  report.checks.push_back(
      run(prefix + "T_1 p(z) - (s_1 p)(z) T_1 = cross term", max_degree, [&](int k) {
        Poly p = Poly::monomial(k);
        return cross_relation_holds(g.t1, g.z, p, p.reflect_s1(), num1, den1);
      }));
}

}  // namespace

bool VerificationReport::overall() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

VerificationReport verify_relations(const Representation& rep, int max_degree) {
  const ParamSet& t = rep.params();
  t.require_exact();
  VerificationReport report;

  Generators g{[&](const Poly& p) { return rep.T(0, p); }, [&](const Poly& p) { return rep.T(1, p); },
               [&](const Poly& p) { return rep.U(0, p); }, [&](const Poly& p) { return rep.U(1, p); },
               [&](const Poly& p) { return rep.z(p); }};
  quadratic_and_sum(report, "", g, t, max_degree);
  cross_relations(report, "", g, t, max_degree);

  // T_i q(Y) - (s_1 q)(Y) T_i = (t_i^2 - t_(1-i)^2 + Y^2) / (2Y) (q(Y) - (s_1 q)(Y))
  Operator y = [&](const Poly& p) { return rep.Y(p); };
  Poly den_y{Rational(0), Rational(2)};
  for (int i : {1, 0}) {
    const Rational& ti = i == 1 ? t.t1() : t.t0();
    const Rational& tj = i == 1 ? t.t0() : t.t1();
    Poly num_y{ti * ti - tj * tj, Rational(0), Rational(1)};
    Operator ti_op = i == 1 ? g.t1 : g.t0;
    std::string name = "T_" + std::to_string(i) + " q(Y) - (s_1 q)(Y) T_" + std::to_string(i) +
                       " = central term";
    report.checks.push_back(run(name, max_degree, [&](int k) {
      Poly q = Poly::monomial(k);
      Poly sq = q.reflect_s1();
      return cross_relation_holds(ti_op, y, q, sq, -num_y, den_y);
    }));
  }

  // Images under the duality map, acting on the polynomial module over t^sigma:
  //   T_0 -> -(T_1 + z), T_1 -> T_1, U_0 -> U_0, U_1 -> T_0, z -> -Y.
  Representation dual(dual_sigma(t));
  Generators h{[&](const Poly& p) { return -(dual.T(1, p) + dual.z(p)); },
               [&](const Poly& p) { return dual.T(1, p); },
               [&](const Poly& p) { return dual.U(0, p); },
               [&](const Poly& p) { return dual.T(0, p); },
               [&](const Poly& p) { return -dual.Y(p); }};
  quadratic_and_sum(report, "sigma: ", h, t, max_degree);
  cross_relations(report, "sigma: ", h, t, max_degree);
  return report;
}

VerificationReport verify_relations(const ParamSet& t, int max_degree) {
  return verify_relations(Representation(t), max_degree);
}

}  // namespace wilson
