#include "wilson/function/phi.hpp"

#include <algorithm>
#include <cmath>

#include "wilson/errors.hpp"
#include "wilson/numeric/hypergeometric.hpp"
#include "wilson/numeric/special.hpp"

namespace wilson {

namespace {

using numeric::Real;

// Gamma quotient prefactor; flags a numerator Gamma close to its poles.
struct Prefactor {
  HPComplex value;
  double distance;
};

Prefactor prefactor(const Rational& numerator, const std::vector<HPComplex>& den, int bits) {
  const HPComplex num(numerator, bits);
  const double re = numerator.to_double();
  const double distance = re > 0.0 ? re : std::abs(re - std::round(re));
  if (distance == 0.0) throw PoleError("phi prefactor Gamma(" + numerator.str() + ") is singular");
  return {numeric::gamma_quotient({num}, den, bits), distance};
}

}  // namespace

MeromorphicValue phi_lambda(const ParamSet& t, const HPComplex& x_in, const HPComplex& lambda_in,
                            const PhiOptions& options) {
  t.require_exact();
  const double size = numeric::abs(x_in).to_double() + numeric::abs(lambda_in).to_double();
  const int bits = options.bits + 16 + static_cast<int>(std::ceil(4.0 * size));
  const HPComplex x = x_in.with_precision(bits);
  const HPComplex lambda = lambda_in.with_precision(bits);
  const Rational one(1);
  const Rational a = t.a(), b = t.b(), c = t.c(), d = t.d();
  const Rational at = t.a_tilde(), dt = t.d_tilde();

  numeric::SeriesOptions series;
  series.tol = options.tol;

  const Prefactor first = prefactor(
      one - a - d,
      {HPComplex(a + b, bits), HPComplex(a + c, bits), x + (one - d), (one - d) - x,
       lambda + (one - dt), (one - dt) - lambda},
      bits);
  const HPComplex sum_first =
      numeric::hyp_pfq_unit({x + a, a - x, lambda + at, at - lambda},
                            {HPComplex(a + b, bits), HPComplex(a + c, bits), HPComplex(a + d, bits)},
                            series)
          .value;

  const Prefactor second = prefactor(
      a + d - one,
      {HPComplex(one + b - d, bits), HPComplex(one + c - d, bits), x + a, a - x, lambda + at,
       at - lambda},
      bits);
  const HPComplex sum_second =
      numeric::hyp_pfq_unit({x + (one - d), (one - d) - x, lambda + (one - dt), (one - dt) - lambda},
                            {HPComplex(one + b - d, bits), HPComplex(one + c - d, bits),
                             HPComplex(Rational(2) - a - d, bits)},
                            series)
          .value;

  MeromorphicValue out;
  out.value = (first.value * sum_first + second.value * sum_second).with_precision(options.bits);
  out.pole_distance = std::min(first.distance, second.distance);
  out.near_pole = out.pole_distance < kNearPoleDistance;
  return out;
}

HPComplex difference_coefficient_A(const ParamSet& t, const HPComplex& x) {
  const HPComplex num = (x + t.a()) * (x + t.b()) * (x + t.c()) * (x + t.d());
  const HPComplex den = x * Rational(2) * (x * Rational(2) + Rational(1));
  if (den.is_zero()) throw DivisionByZeroError("A(x) at x = 0 or x = -1/2");
  return num / den;
}

HPComplex apply_L_to_phi(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                         const PhiOptions& options) {
  const Rational one(1);
  const Rational d = t.d();
  const HPComplex f0 = phi_lambda(t, x, lambda, options).value;
  const HPComplex f_up = phi_lambda(t, x + one, lambda, options).value;
  const HPComplex f_down = phi_lambda(t, x - one, lambda, options).value;
  // G_tau(x+1)/G_tau(x) and G_tau(x-1)/G_tau(x)
  const HPComplex up = (x + (one - d)) / (-x - d);
  const HPComplex down = ((one - d) - x) / (x - d);
  const HPComplex minus_x = -x;
  const HPComplex shifted = difference_coefficient_A(t, x) * (up * f_up - f0) +
                            difference_coefficient_A(t, minus_x) * (down * f_down - f0);
  return -shifted;
}

PhiChecks check_phi(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                    const PhiOptions& options) {
  const int bits = options.bits;
  PhiChecks out;
  const HPComplex value = phi_lambda(t, x, lambda, options).value;
  const HPComplex dual = phi_lambda(dual_sigma(t), lambda, x, options).value;
  out.duality_error = numeric::relative_difference(value, dual);

  const HPComplex g0(t.a_tilde(), bits);
  const HPComplex at_g0 = phi_lambda(t, x, g0, options).value;
  const HPComplex constant = numeric::gamma_quotient(
      {HPComplex(Rational(1) - t.a() - t.d(), bits)},
      {HPComplex(t.a() + t.b(), bits), HPComplex(t.a() + t.c(), bits)}, bits);
  const HPComplex expected = constant / (gaussian_G_tau(t, x).value * gaussian_G_sigma_tau(t, g0).value);
  out.reduction_error = numeric::relative_difference(at_g0, expected);

  const HPComplex l_phi = apply_L_to_phi(t, x, lambda, options);
  const HPComplex eigen = (lambda * lambda - t.a_tilde() * t.a_tilde()) * Rational(-1);
  out.eigen_error = numeric::relative_difference(l_phi, eigen * value);
  return out;
}

}  // namespace wilson
