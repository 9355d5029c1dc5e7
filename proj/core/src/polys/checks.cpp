#include "wilson/polys/checks.hpp"

#include <string>

#include "wilson/errors.hpp"

namespace wilson {

namespace {

Poly x_plus(const Rational& c) { return Poly({c, Rational(1)}); }

}  // namespace

DualityResult check_duality(const ParamSet& t, int m, int n) {
  auto basis = WilsonBasis::of(t);
  auto dual = WilsonBasis::of(dual_sigma(t));
  DualityResult out;
  out.lhs = basis->E(m)(-basis->x_dual(n));
  out.rhs = dual->E(n)(-basis->gamma(m));
  out.holds = out.lhs == out.rhs;
  return out;
}

Rational c1_sigma(const ParamSet& t, const Rational& y) {
  ParamSet s = dual_sigma(t);
  if (y.is_zero()) throw DivisionByZeroError("c_1 has a pole at 0");
  return (s.a() + y) * (s.b() + y) / (Rational(2) * y);
}

Rational c0_sigma(const ParamSet& t, const Rational& y) {
  ParamSet s = dual_sigma(t);
  Rational den = Rational(1) - Rational(2) * y;
  if (den.is_zero()) throw DivisionByZeroError("c_0 has a pole at 1/2");
  return (s.c() - y) * (s.d() - y) / den;
}

DualActionResult check_dual_variable_action(const ParamSet& t, int m) {
  auto basis = WilsonBasis::of(t);
  const Representation& rep = basis->representation();
  const Rational g = basis->gamma(m);
  const Poly e = basis->E(m);
  DualActionResult out;

  Poly t1_rhs = e * t.t1() + (basis->E(s1_label(m)) - e) * c1_sigma(t, -g);
  out.t1_holds = rep.T(1, e) == t1_rhs;

  Poly u1_rhs = e * t.u1() + (basis->E(s0_label(m)) - e) * c0_sigma(t, -g);
  out.u1_holds = rep.U(1, e) == u1_rhs;
  return out;
}

bool check_t1_action(const ParamSet& t, int m) {
  auto basis = WilsonBasis::of(t);
  const Rational bm = basis->b(m);
  Poly lhs = basis->representation().T(1, basis->p(m));
  if (m % 2 == 1) return lhs == basis->p(m) * bm - basis->p(m + 1);
  if (m == 0) return lhs == basis->p(0) * bm;
  return lhs == basis->p(m) * bm + basis->p(m - 1) * (bm * bm - t.t1() * t.t1());
}

Poly apply_L_difference(const ParamSet& t, const Poly& f) {
  if (!f.is_even()) throw NotSymmetricError("L acts on even polynomials only, got " + f.str());
  const Representation& rep = WilsonBasis::of(t)->representation();
  const Rational shift = t.t0() + t.t1();
  return rep.Y(rep.Y(f)) - f * (shift * shift);
}

Rational l_eigenvalue(const ParamSet& t, int n) {
  return Rational(n) * (Rational(n - 1) + t.a() + t.b() + t.c() + t.d());
}

bool check_l_eigen(const ParamSet& t, int n) {
  Poly e = renormalized_E_plus(t, n);
  return apply_L_difference(t, e) == e * l_eigenvalue(t, n);
}

Rational recurrence_B(const ParamSet& t, int n) {
  const Rational a = t.a(), b = t.b(), c = t.c(), d = t.d();
  const Rational s = a + b + c + d, k(n);
  Rational den = (Rational(2 * n) + s - Rational(1)) * (Rational(2 * n) + s);
  if (den.is_zero()) throw DegenerateDenominatorError("B_n denominator vanishes");
  return (k + s - Rational(1)) * (k + a + b) * (k + a + c) * (k + a + d) / den;
}

Rational recurrence_C(const ParamSet& t, int n) {
  const Rational a = t.a(), b = t.b(), c = t.c(), d = t.d();
  const Rational s = a + b + c + d, k(n);
  if (n == 0) return Rational(0);
  Rational den = (Rational(2 * n) + s - Rational(2)) * (Rational(2 * n) + s - Rational(1));
  if (den.is_zero()) throw DegenerateDenominatorError("C_n denominator vanishes");
  return k * (k + b + c - Rational(1)) * (k + b + d - Rational(1)) * (k + c + d - Rational(1)) /
         den;
}

bool check_recurrence(const ParamSet& t, int n) {
  if (n < 0) throw IndexError("recurrence index must be nonnegative");
  t.require_exact();
  const Poly e = renormalized_E_plus(t, n);
  const Poly up = renormalized_E_plus(t, n + 1);
  const Poly down = n == 0 ? Poly() : renormalized_E_plus(t, n - 1);
  const Rational a = t.a();
  Poly lhs = Poly({-a * a, Rational(0), Rational(1)}) * e;
  Poly rhs = (up - e) * recurrence_B(t, n) + (down - e) * recurrence_C(t, n);
  return lhs == rhs;
}

Rational weyl_alpha(const ParamSet& t) {
  const Rational a = t.a(), b = t.b(), c = t.c(), d = t.d();
  return Rational(1) / ((a + b) * (a + b + Rational(1)) * (a + c) * (a + d));
}

Rational weyl_renormalized_constant(const ParamSet& t, int m) {
  if (m < 1) throw IndexError("anti-symmetric part of E(., gamma_0) vanishes");
  const ParamSet dual = dual_sigma(t);
  const Rational g = gamma_val(t, m);
  return -weyl_alpha(t) * (dual.a() - g) * (dual.b() - g);
}

WeylCharacterResult check_weyl_character(const ParamSet& t, int n) {
  if (n < 1) throw IndexError("Weyl character check needs n >= 1, got " + std::to_string(n));
  t.require_exact();
  const ParamSet shifted = t.shifted_t1();
  shifted.require_exact();
  auto basis = WilsonBasis::of(t);
  const Representation& rep = basis->representation();
  const Poly delta = x_plus(t.a()) * x_plus(t.b());

  WeylCharacterResult out;
  out.monic = basis->P_minus(n) == delta * WilsonBasis::of(shifted)->P_plus(n - 1);

  const Poly e_plus_shifted = renormalized_E_plus(shifted, n - 1);
  for (int m : {2 * n, 2 * n - 1}) {
    const Rational k = weyl_renormalized_constant(t, m);
    bool ok = rep.C(Sign::minus, basis->E(m)) == delta * e_plus_shifted * k;
    (m % 2 == 0 ? out.renormalized_even : out.renormalized_odd) = ok;
  }
  return out;
}

}  // namespace wilson
