#include "doctest.h"
#include "oracles.hpp"
#include "wilson/errors.hpp"
#include "wilson/polys/checks.hpp"

using wilson::ParamSet;
using wilson::Poly;
using wilson::Rational;
using wilson::WilsonBasis;

namespace {

oracle::Fn as_fn(const Poly& p) {
  return [p](const Rational& x) { return p(x); };
}

}  // namespace

TEST_CASE("p_m matches the independent eigen-solve") {
  for (const ParamSet& t : {oracle::canonical(), oracle::second_set()}) {
    const auto basis = WilsonBasis::of(t);
    for (int m = 0; m <= 9; ++m) {
      const auto expect = oracle::eigenpolynomial(t, m, oracle::gamma(t, m));
      CHECK(basis->p(m).coefficients() == expect);
    }
  }
}

TEST_CASE("pinned canonical values") {
  const ParamSet t = oracle::canonical();
  const auto basis = WilsonBasis::of(t);
  // Both pins come from the oracle's own solve, not from the library.
  const auto p1 = oracle::eigenpolynomial(t, 1, oracle::gamma(t, 1));
  const auto p2 = oracle::eigenpolynomial(t, 2, oracle::gamma(t, 2));
  const Rational x0 = t.t1() + t.u1();
  REQUIRE(p1 == std::vector<Rational>{Rational(-8657, 31164), Rational(1)});
  REQUIRE(oracle::eval(p2, -x0) == Rational(1749407, 999600));
  CHECK(basis->p(1).coefficients() == p1);
  CHECK(basis->p(2)(-x0) == Rational(1749407, 999600));
  CHECK(wilson::evaluation_at_minus_x0(t, 2) == Rational(1749407, 999600));
  CHECK(basis->x_dual(0) == x0);
}

TEST_CASE("Rodriguez route, evaluation formula, renormalization") {
  const ParamSet t = oracle::canonical();
  const auto basis = WilsonBasis::of(t);
  const Rational minus_x0 = -basis->x_dual(0);
  for (int m = 0; m <= 10; ++m) {
    CHECK(wilson::nonsymmetric_wilson_rodriguez(t, m) == basis->p(m));
    CHECK(wilson::evaluation_at_minus_x0(t, m) == basis->p(m)(minus_x0));
    CHECK(basis->E(m)(minus_x0) == Rational(1));
  }
  CHECK(basis->E(wilson::kMinusGamma0Label) == Poly(1));
}

TEST_CASE("duality of E on the canonical and a random set") {
  for (const ParamSet& t : {oracle::canonical(), oracle::random_admissible(11, 1).front()}) {
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= 6; ++n) {
        const auto r = wilson::check_duality(t, m, n);
        CHECK(r.lhs == r.rhs);
        CHECK(r.holds);
      }
    }
  }
}

TEST_CASE("T1 action and the dual variable action") {
  const ParamSet t = oracle::canonical();
  for (int m = 0; m <= 6; ++m) {
    CHECK(wilson::check_t1_action(t, m));
    CHECK(wilson::check_dual_variable_action(t, m).holds());
  }
}

TEST_CASE("E^+ equals Wilson's 4F3 and solves the explicit difference equation") {
  for (const ParamSet& t : {oracle::canonical(), oracle::second_set()}) {
    const Rational total = t.a() + t.b() + t.c() + t.d() - Rational(1);
    for (int n = 0; n <= 6; ++n) {
      const Poly e = wilson::renormalized_E_plus(t, n);
      CHECK(e.is_even());
      for (const Rational& x : {Rational(2, 9), Rational(-5, 4), Rational(7, 3)}) {
        CHECK(e(x) == oracle::wilson_4f3(t, n, x));
        CHECK(wilson::symmetric_E_4f3(t, n, x) == oracle::wilson_4f3(t, n, x));
        CHECK(oracle::wilson_difference(t, as_fn(e), x) ==
              Rational(n) * (Rational(n) + total) * e(x));
      }
      CHECK(wilson::l_eigenvalue(t, n) == Rational(n) * (Rational(n) + total));
      CHECK(wilson::apply_L_difference(t, e) == e * wilson::l_eigenvalue(t, n));
      CHECK(wilson::check_recurrence(t, n));
    }
  }
}

TEST_CASE("anti-symmetric family carries the Weyl denominator") {
  const ParamSet t = oracle::canonical();
  const auto basis = WilsonBasis::of(t);
  const Poly delta = Poly{t.a() * t.b(), t.a() + t.b(), Rational(1)};
  CHECK(basis->P_minus(1) == delta);
  for (int n = 1; n <= 4; ++n) {
    CHECK(basis->P_minus(n).divmod(delta).remainder.is_zero());
    CHECK(wilson::check_weyl_character(t, n).holds());
  }
  CHECK(basis->P_plus(0) == Poly(1));
}

TEST_CASE("a corrupted eigenvalue table is detected") {
  const ParamSet t = oracle::canonical();
  const auto bad = WilsonBasis::of(t)->with_gamma_override(3, oracle::gamma(t, 3) + Rational(1, 3));
  const Poly p = bad->p(3);
  const Poly y = bad->representation().Y(p);
  CHECK(y != p * oracle::gamma(t, 3));
}
