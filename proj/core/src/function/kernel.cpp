#include "wilson/function/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "wilson/errors.hpp"
#include "wilson/numeric/special.hpp"
#include "wilson/polys/wilson_basis.hpp"

namespace wilson {

namespace {

using numeric::Real;

double smallest_parameter(const ParamSet& t) {
  return std::min({t.a().to_double(), t.b().to_double(), t.c().to_double(), t.d().to_double()});
}

MeromorphicValue check_poles(MeromorphicValue v, double x_distance, double lambda_distance) {
  v.pole_distance = std::min({v.pole_distance, x_distance, lambda_distance});
  v.near_pole = v.pole_distance < kNearPoleDistance;
  return v;
}

}  // namespace

MeromorphicValue kernel_E_frak(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                               const PhiOptions& options) {
  MeromorphicValue out = phi_lambda(t, x, lambda, options);
  const MeromorphicValue shifted = phi_lambda(t.shifted_t1(), x, lambda, options);
  const HPComplex delta = (x + t.a()) * (x + t.b());
  const HPComplex delta_sigma = (lambda + t.a_tilde()) * (lambda + t.b_tilde());
  out.value += delta * delta_sigma * shifted.value;
  out.pole_distance = std::min(out.pole_distance, shifted.pole_distance);
  out.near_pole = out.near_pole || shifted.near_pole;
  return out;
}

MeromorphicValue wilson_function_E(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                                   const PhiOptions& options) {
  const MeromorphicValue gx = gaussian_G_tau(t, x);
  const MeromorphicValue gl = gaussian_G_sigma_tau(t, lambda);
  MeromorphicValue out = kernel_E_frak(t, x, lambda, options);
  out.value = (out.value * gx.value * gl.value).with_precision(options.bits);
  return check_poles(out, gx.pole_distance, gl.pole_distance);
}

MeromorphicValue wilson_function_E_plus(const ParamSet& t, const HPComplex& x,
                                        const HPComplex& lambda, const PhiOptions& options) {
  const MeromorphicValue gx = gaussian_G_tau(t, x);
  const MeromorphicValue gl = gaussian_G_sigma_tau(t, lambda);
  MeromorphicValue out = phi_lambda(t, x, lambda, options);
  out.value = (out.value * gx.value * gl.value).with_precision(options.bits);
  return check_poles(out, gx.pole_distance, gl.pole_distance);
}

HPComplex theta_weight(const ParamSet& t, const HPComplex& x, WeightVariant variant, int bits) {
  const Real pi = numeric::pi(bits);
  const HPComplex xb = x.with_precision(bits);
  const HPComplex d(t.d(), bits);
  const HPComplex sines = numeric::sin((d + xb) * pi) * numeric::sin((d - xb) * pi);
  return sines / (pi * pi) * weight_Delta(t, xb, variant, bits);
}

numeric::QuadratureResult theta_form(const ParamSet& t, const PointFunction& f,
                                     const PointFunction& g, WeightVariant variant, double decay,
                                     const ThetaOptions& options) {
  t.require_quadrature();
  dual_tau(t).require_quadrature();
  numeric::QuadratureOptions q;
  q.decay_rate = decay;
  q.tol = options.tol;
  q.abs_floor = options.abs_floor;
  q.bits = options.bits;
  // Nearest singularities: Gamma(a,b,c +- x) in Theta and Gamma(1-d +- x) in G_tau.
  q.scale = smallest_parameter(dual_tau(t));
  auto result = numeric::integrate_imaginary_axis(
      [&](const HPComplex& x) { return f(x) * g(x) * theta_weight(t, x, variant, options.bits); },
      q);
  if (variant == WeightVariant::plus) result.value /= Real(2L, options.bits);
  return result;
}

numeric::QuadratureResult kernel_pairing(const ParamSet& t, const Poly& p, const HPComplex& lambda,
                                         WeightVariant variant, const ThetaOptions& options) {
  const ParamSet tt = dual_tau(t);
  tt.require_quadrature();
  if (variant == WeightVariant::plus && !p.is_even()) {
    throw NotSymmetricError("<., phi_lambda>^+ needs an even polynomial");
  }
  PhiOptions phi;
  phi.bits = options.bits;
  numeric::QuadratureOptions q;
  // Delta_tau decays like e^(-2 pi |y|), the kernel grows like e^(pi |y|).
  q.decay_rate = M_PI;
  q.tol = options.tol;
  q.abs_floor = options.abs_floor;
  q.bits = options.bits;
  q.scale = smallest_parameter(tt);
  return numeric::integrate_imaginary_axis(
      [&](const HPComplex& x) {
        const HPComplex k = variant == WeightVariant::full ? kernel_E_frak(t, x, lambda, phi).value
                                                           : phi_lambda(t, x, lambda, phi).value;
        return p(x) * k * weight_Delta(tt, x, variant, options.bits);
      },
      q);
}

IdentityCheck check_kernel_identity(const ParamSet& t, int m, const HPComplex& lambda,
                                    const ThetaOptions& options) {
  const ParamSet tt = dual_tau(t);
  const Poly e = WilsonBasis::of(tt)->E(m);
  const Poly e_dual = WilsonBasis::of(params_sigma_tau(t))->E(m);
  IdentityCheck out;
  out.lhs = kernel_pairing(t, e, lambda, WeightVariant::full, options).value;
  out.rhs = e_dual(lambda) * (Rational(2) * t.t1() * gaussian_ratio_tau_sigma_tau(t, m));
  out.error = numeric::relative_difference(out.lhs, out.rhs);
  return out;
}

IdentityCheck check_phi_pairing(const ParamSet& t, int n, const HPComplex& lambda,
                                const ThetaOptions& options) {
  const Poly e = renormalized_E_plus(dual_tau(t), n);
  const Poly e_dual = renormalized_E_plus(params_sigma_tau(t), n);
  IdentityCheck out;
  out.lhs = kernel_pairing(t, e, lambda, WeightVariant::plus, options).value;
  out.rhs = e_dual(lambda) * (Rational(2) * gaussian_ratio_tau_sigma_tau(t, 2 * n));
  out.error = numeric::relative_difference(out.lhs, out.rhs);
  return out;
}

double check_wilson_duality(const ParamSet& t, const std::vector<HPComplex>& xs,
                            const std::vector<HPComplex>& lambdas, const PhiOptions& options) {
  const ParamSet ts = dual_sigma(t);
  double worst = 0.0;
  for (const auto& x : xs) {
    for (const auto& l : lambdas) {
      const HPComplex lhs = wilson_function_E(t, x, l, options).value;
      const HPComplex rhs = wilson_function_E(ts, l, x, options).value;
      const double err =
          numeric::abs(lhs - rhs).to_double() / (1.0 + numeric::abs(lhs).to_double());
      worst = std::max(worst, err);
    }
  }
  return worst;
}

HPComplex reduction_constant(const ParamSet& t, int bits) {
  return numeric::gamma_quotient({HPComplex(Rational(1) - t.a() - t.d(), bits)},
                                 {HPComplex(t.a() + t.b(), bits), HPComplex(t.a() + t.c(), bits)},
                                 bits);
}

double check_polynomial_reduction(const ParamSet& t, int m, const std::vector<HPComplex>& xs,
                                  const PhiOptions& options) {
  const auto basis = WilsonBasis::of(t);
  const Poly e = basis->E(m);
  const HPComplex lambda(-basis->gamma(m), options.bits);
  const HPComplex constant = reduction_constant(t, options.bits);
  double worst = 0.0;
  for (const auto& x : xs) {
    const HPComplex value = wilson_function_E(t, x, lambda, options).value;
    worst = std::max(worst, numeric::relative_difference(value, constant * e(x)));
  }
  return worst;
}

EigenCheck check_wilson_eigen(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                              const PhiOptions& options) {
  const Rational one(1);
  const HPComplex value = wilson_function_E(t, x, lambda, options).value;
  auto in_x = [&](const HPComplex& y) { return wilson_function_E(t, y, lambda, options).value; };
  auto in_lambda = [&](const HPComplex& l) { return wilson_function_E(t, x, l, options).value; };

  const HPComplex minus_x = -x;
  const ReflectionValues fx{value, in_x(minus_x), in_x(one - x)};
  const HPComplex y_value = apply_T_pointwise(t, 0, x, fx) + apply_T_pointwise(t, 1, x, fx);

  const ParamSet ts = dual_sigma(t);
  const HPComplex minus_l = -lambda;
  const ReflectionValues fl{value, in_lambda(minus_l), in_lambda(one - lambda)};
  const HPComplex ys_value =
      apply_T_pointwise(ts, 0, lambda, fl) + apply_T_pointwise(ts, 1, lambda, fl);

  EigenCheck out;
  out.y_error = numeric::relative_difference(y_value, -(lambda * value));
  out.y_sigma_error = numeric::relative_difference(ys_value, -(x * value));
  return out;
}

double check_theta_symmetry(const ParamSet& t, const ThetaOptions& options) {
  const Rational one(1);
  auto g_tau = [&](const HPComplex& x) { return gaussian_G_tau(t, x).value; };
  const std::vector<PointFunction> basis = {
      g_tau, [&](const HPComplex& x) { return g_tau(x) * x; }};
  auto apply = [&](int i, const PointFunction& f) -> PointFunction {
    return [&t, i, f, one](const HPComplex& x_in) {
      // c_1 has a removable singularity at the node x = 0.
      const int bits = x_in.precision_bits();
      const HPComplex x =
          x_in.is_zero() ? numeric::imaginary(numeric::ldexp(Real(1L, bits), -bits / 2)) : x_in;
      const HPComplex minus_x = -x;
      return apply_T_pointwise(t, i, x, {f(x), f(minus_x), f(one - x)});
    };
  };
  const double decay = 2.0 * M_PI;
  double worst = 0.0;
  for (int i = 0; i <= 1; ++i) {
    for (const auto& f : basis) {
      for (const auto& g : basis) {
        const HPComplex lhs = theta_form(t, apply(i, f), g, WeightVariant::full, decay, options).value;
        const HPComplex rhs = theta_form(t, f, apply(i, g), WeightVariant::full, decay, options).value;
        worst = std::max(worst, numeric::relative_difference(lhs, rhs));
      }
    }
  }
  return worst;
}

}  // namespace wilson
