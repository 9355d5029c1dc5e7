#pragma once

#include "wilson/polys/wilson_basis.hpp"

namespace wilson {

struct DualityResult {
  Rational lhs;  // E(-x_n, gamma_m; t)
  Rational rhs;  // E(-gamma_m, x_n; t^sigma)
  bool holds = false;
};

DualityResult check_duality(const ParamSet& t, int m, int n);

// c_1 and c_0 evaluated over the dual parameters.
Rational c1_sigma(const ParamSet& t, const Rational& y);
Rational c0_sigma(const ParamSet& t, const Rational& y);

struct DualActionResult {
  bool t1_holds = false;
  bool u1_holds = false;
  bool holds() const { return t1_holds && u1_holds; }
};

// T_1 and U_1 acting on E(., gamma_m) as difference-reflection operators in gamma.
DualActionResult check_dual_variable_action(const ParamSet& t, int m);

// T_1 p_m = -p_(m+1) + b_m p_m for odd m, b_m p_m + (b_m^2 - t1^2) p_(m-1) for even m.
bool check_t1_action(const ParamSet& t, int m);

// L = Y^2 - (t0+t1)^2 on even polynomials.
Poly apply_L_difference(const ParamSet& t, const Poly& f);
// n (n + a+b+c+d - 1)
Rational l_eigenvalue(const ParamSet& t, int n);
bool check_l_eigen(const ParamSet& t, int n);

Rational recurrence_B(const ParamSet& t, int n);
Rational recurrence_C(const ParamSet& t, int n);
// Three-term recurrence for E^+(x, gamma_2n) with E^+(x, gamma_-2) = 0.
bool check_recurrence(const ParamSet& t, int n);

// 1 / ((a+b)(a+b+1)(a+c)(a+d))
Rational weyl_alpha(const ParamSet& t);
// k_m with C_- E(x, gamma_m) = k_m delta(x) E^+(x, gamma_(m-2); t0, u0, t1+1, u1).
// k_m = -alpha (a~ - gamma_m)(b~ - gamma_m) for both parities of m; note that
// b_2n - t1 = -c_1(-gamma_2n) over the dual parameters.
Rational weyl_renormalized_constant(const ParamSet& t, int m);

struct WeylCharacterResult {
  bool monic = false;        // P^-_2n = delta P^+_(2n-2)(t1+1)
  bool renormalized_even = false;  // C_- E(., gamma_2n)
  bool renormalized_odd = false;   // C_- E(., gamma_(2n-1))
  bool holds() const { return monic && renormalized_even && renormalized_odd; }
};

WeylCharacterResult check_weyl_character(const ParamSet& t, int n);

}  // namespace wilson
