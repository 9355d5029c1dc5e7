#include "wilson/function/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wilson/daha/operators.hpp"
#include "wilson/errors.hpp"
#include "wilson/numeric/special.hpp"
#include "wilson/polys/wilson_basis.hpp"

namespace wilson {

using numeric::Real;

ParamSet params_sigma_tau(const ParamSet& t) { return dual_tau(dual_sigma(t)); }
ParamSet params_tau_sigma(const ParamSet& t) { return dual_sigma(dual_tau(t)); }
ParamSet params_tau_sigma_tau(const ParamSet& t) { return dual_tau(params_tau_sigma(t)); }

double distance_to_lattice(const HPComplex& x, const Rational& offset) {
  const double re = x.real().to_double();
  const double im = x.imag().to_double();
  const double o = offset.to_double();
  double best = std::numeric_limits<double>::infinity();
  for (double sign : {1.0, -1.0}) {
    // nearest n >= 0 to sign*re - o
    const double n = std::max(0.0, std::round(sign * re - o));
    best = std::min(best, std::hypot(re - sign * (o + n), im));
  }
  return best;
}

MeromorphicValue gaussian_G(const ParamSet& t, const HPComplex& x) {
  const Rational d = t.d();
  MeromorphicValue out;
  out.pole_distance = distance_to_lattice(x, d);
  out.near_pole = out.pole_distance < kNearPoleDistance;
  out.value = numeric::gamma(x + d) * numeric::gamma(d - x);
  return out;
}

MeromorphicValue gaussian_G_tau(const ParamSet& t, const HPComplex& x) {
  return gaussian_G(dual_tau(t), x);
}
MeromorphicValue gaussian_G_sigma_tau(const ParamSet& t, const HPComplex& x) {
  return gaussian_G(params_sigma_tau(t), x);
}
MeromorphicValue gaussian_G_tau_sigma(const ParamSet& t, const HPComplex& x) {
  return gaussian_G(params_tau_sigma(t), x);
}
MeromorphicValue gaussian_G_tau_sigma_tau(const ParamSet& t, const HPComplex& x) {
  return gaussian_G(params_tau_sigma_tau(t), x);
}

Rational gaussian_ratio_tau_sigma(const ParamSet& t, int m) {
  if (m < 0) throw IndexError("Gaussian ratio needs m >= 0");
  const int n = (m + 1) / 2;
  Rational r = numeric::pochhammer(t.a() + Rational(1) - t.d(), n) /
               numeric::pochhammer(t.b() + t.c(), n);
  return n % 2 == 0 ? r : -r;
}

Rational gaussian_ratio_tau_sigma_tau(const ParamSet& t, int m) {
  return Rational(1) / gaussian_ratio_tau_sigma(t, m);
}

namespace {

HPComplex ratio_numeric(const ParamSet& gauss, const ParamSet& t, int m, int bits) {
  if (m < 0) throw IndexError("Gaussian ratio needs m >= 0");
  const Rational base = dual_tau(t).t0() + t.t1();
  const HPComplex gm(gamma_value(base, m), bits);
  const HPComplex g0(gamma_value(base, 0), bits);
  const Rational d = gauss.d();
  return numeric::gamma_quotient({gm + d, d - gm}, {g0 + d, d - g0}, bits);
}

}  // namespace

HPComplex apply_T_pointwise(const ParamSet& t, int i, const HPComplex& x,
                            const ReflectionValues& f) {
  if (i == 0) {
    const HPComplex c0 = (t.c() - x) * (t.d() - x) / (Rational(1) - x * Rational(2));
    return f.at_x * t.t0() + c0 * (f.at_one_minus_x - f.at_x);
  }
  const HPComplex c1 = (t.a() + x) * (t.b() + x) / (x * Rational(2));
  return f.at_x * t.t1() + c1 * (f.at_minus_x - f.at_x);
}

HPComplex gaussian_ratio_tau_sigma_numeric(const ParamSet& t, int m, int bits) {
  return ratio_numeric(params_tau_sigma(t), t, m, bits);
}

HPComplex gaussian_ratio_tau_sigma_tau_numeric(const ParamSet& t, int m, int bits) {
  return ratio_numeric(params_tau_sigma_tau(t), t, m, bits);
}

GaussianConjugationReport check_gaussian_conjugation(const ParamSet& t, int max_degree,
                                                     const std::vector<HPComplex>& points) {
  const ParamSet tt = dual_tau(t);
  GaussianConjugationReport out;

  // Clear the denominator 1 - 2x on both sides.
  const Poly x = Poly::x();
  const Poly one_minus_2x = Poly{Rational(1), Rational(-2)};
  const Poly lhs = one_minus_2x * t.t0() - (Poly(t.c()) - x) * (Poly(t.d()) - x);
  const Poly rhs = (x - Poly(Rational(1, 2) + t.u0())) * one_minus_2x +
                   (Poly(tt.c()) - x) * (Poly(tt.d()) - x);
  out.exact_identity_holds = lhs == rhs;

  for (const auto& p : points) {
    for (const auto& q : {p, Rational(1) - p, -p}) {
      if (gaussian_G(t, q).near_pole) throw PoleError("sample point near a pole of G");
    }
    const HPComplex minus_p = -p;
    const HPComplex reflected = Rational(1) - p;
    const HPComplex g_x = gaussian_G(t, p).value;
    const HPComplex g_reflected = gaussian_G(t, reflected).value;
    for (int k = 0; k <= max_degree; ++k) {
      const ReflectionValues f{numeric::pow(p, k), numeric::pow(minus_p, k),
                          numeric::pow(reflected, k)};
      const ReflectionValues gf{g_x * f.at_x, g_x * f.at_minus_x, g_reflected * f.at_one_minus_x};

      const HPComplex t0_lhs = g_x * apply_T_pointwise(t, 0, p, f);
      const HPComplex t0_rhs = p * gf.at_x - gf.at_x * Rational(1, 2) - apply_T_pointwise(tt, 0, p, gf);
      out.T0_error = std::max(out.T0_error, numeric::relative_difference(t0_lhs, t0_rhs));

      const HPComplex t1_lhs = g_x * apply_T_pointwise(t, 1, p, f);
      const HPComplex t1_rhs = apply_T_pointwise(tt, 1, p, gf);
      out.T1_error = std::max(out.T1_error, numeric::relative_difference(t1_lhs, t1_rhs));

      const HPComplex z_lhs = g_x * (p * f.at_x);
      const HPComplex z_rhs = p * gf.at_x;
      out.z_error = std::max(out.z_error, numeric::relative_difference(z_lhs, z_rhs));
    }
  }
  return out;
}

}  // namespace wilson
