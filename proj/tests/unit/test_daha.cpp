#include "doctest.h"
#include "oracles.hpp"
#include "wilson/daha/relations.hpp"
#include "wilson/errors.hpp"
#include "wilson/polys/wilson_basis.hpp"

using wilson::ParamSet;
using wilson::Poly;
using wilson::Rational;

namespace {

oracle::Fn as_fn(const Poly& p) {
  return [p](const Rational& x) { return p(x); };
}

const std::vector<Rational> kPoints = {Rational(2, 7), Rational(-3, 11), Rational(5, 3),
                                       Rational(9, 4)};

}  // namespace

TEST_CASE("derived Wilson parameters of the canonical set") {
  const ParamSet t = oracle::canonical();
  CHECK(t.a() == Rational(26, 35));
  CHECK(t.b() == Rational(16, 35));
  CHECK(t.c() == Rational(41, 30));
  CHECK(t.d() == Rational(29, 30));
  CHECK(t.exact_ok());
  CHECK(t.quadrature_ok());
  const ParamSet s = wilson::dual_sigma(t);
  CHECK(s.t0() == t.u1());
  CHECK(s.u1() == t.t0());
  CHECK(s.a() == t.a_tilde());
  const ParamSet tau = wilson::dual_tau(t);
  CHECK(tau.t0() == t.u0());
  CHECK(tau.u0() == t.t0());
}

TEST_CASE("admissibility diagnostics name the condition") {
  const ParamSet bad(Rational(1, 2), Rational(0), Rational(1, 2), Rational(0));
  CHECK_FALSE(bad.exact_ok());
  CHECK(bad.exact_violation().find("a + b") != std::string::npos);
  CHECK_THROWS_AS(bad.require_exact(), wilson::AdmissibilityError);
  // Exact-only: a < 0 puts poles of the weight on the wrong side.
  const ParamSet exact_only(Rational(2, 3), Rational(1, 5), Rational(-3, 5), Rational(1, 7));
  CHECK(exact_only.exact_ok());
  CHECK_FALSE(exact_only.quadrature_ok());
}

TEST_CASE("T_i on polynomials agrees with the pointwise definition") {
  for (const ParamSet& t : {oracle::canonical(), oracle::second_set()}) {
    const wilson::Representation rep(t);
    for (int k = 0; k <= 7; ++k) {
      const Poly p = Poly::monomial(k) + Poly{Rational(1, 3), Rational(-2)};
      for (int i = 0; i <= 1; ++i) {
        const Poly image = rep.T(i, p);
        for (const auto& x : kPoints) CHECK(image(x) == oracle::T(i, t, as_fn(p), x));
      }
      const Poly y = rep.Y(p);
      for (const auto& x : kPoints) CHECK(y(x) == oracle::Y(t, as_fn(p), x));
    }
  }
}

TEST_CASE("U_i and the sum relation") {
  const ParamSet t = oracle::canonical();
  const wilson::Representation rep(t);
  const Poly p{Rational(1), Rational(2, 5), Rational(0), Rational(-7)};
  const Poly sum = rep.T(0, p) + rep.T(1, p) + rep.U(0, p) + rep.U(1, p);
  CHECK(sum == p * Rational(-1, 2));
  CHECK(rep.U(0, rep.U(0, p)) == p * (t.u0() * t.u0()));
  CHECK(rep.U(1, rep.U(1, p)) == p * (t.u1() * t.u1()));
}

TEST_CASE("defining relations hold on the canonical and random sets") {
  auto sets = oracle::random_admissible(7, 3);
  sets.push_back(oracle::canonical());
  for (const auto& t : sets) {
    const auto report = wilson::verify_relations(t, 12);
    CHECK(report.overall());
    for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name);
  }
}

TEST_CASE("a perturbed T_1 breaks the relations and reports a witness") {
  const wilson::Representation rep =
      wilson::Representation(oracle::canonical()).with_c1_shift(Rational(1, 10));
  const auto report = wilson::verify_relations(rep, 6);
  CHECK_FALSE(report.overall());
  bool witnessed = false;
  for (const auto& c : report.checks) {
    if (!c.passed) witnessed = witnessed || c.witness.has_value();
  }
  CHECK(witnessed);
}

TEST_CASE("Y is triangular with the gamma_m on the diagonal") {
  const ParamSet t = oracle::canonical();
  const wilson::Representation rep(t);
  const Rational base = t.t0() + t.t1();
  // Leading coefficient of Y x^k: the diagonal entry.
  for (int k = 0; k <= 10; ++k) {
    const Poly y = rep.Y(Poly::monomial(k));
    CHECK(y.degree() <= k);
    CHECK(y.coefficient(k) == oracle::gamma(t, k));
    CHECK(wilson::gamma_value(base, k) == oracle::gamma(t, k));
  }
}
