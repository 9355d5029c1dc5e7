#include "wilson/function/calf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wilson/errors.hpp"
#include "wilson/polys/wilson_basis.hpp"
#include "wilson/transform/symmetric.hpp"

namespace wilson {

namespace {

using numeric::Real;

// Coefficients of p in the renormalized basis E_tau(., gamma_m^tau).
std::vector<Rational> expand_in_E(const ParamSet& tt, const Poly& p) {
  auto coefficients = expand_nonsymmetric(tt, p);
  const auto basis = WilsonBasis::of(tt);
  for (std::size_t m = 0; m < coefficients.size(); ++m) {
    if (!coefficients[m].is_zero()) coefficients[m] *= basis->p_at_minus_x0(static_cast<int>(m));
  }
  return coefficients;
}

// Coefficients of an even p in E^+_tau(., gamma_2n^tau).
std::vector<Rational> expand_in_E_plus(const ParamSet& tt, const Poly& p) {
  auto coefficients = expand_symmetric(tt, p);
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    if (!coefficients[n].is_zero()) {
      coefficients[n] *= symmetric_evaluation_at_x0(tt, static_cast<int>(n));
    }
  }
  return coefficients;
}

HPComplex gaussian_at_base(const ParamSet& t, bool tau_sigma_tau, int bits) {
  const HPComplex g0(dual_tau(t).t0() + t.t1(), bits);
  return tau_sigma_tau ? gaussian_G_tau_sigma_tau(t, g0).value : gaussian_G_tau_sigma(t, g0).value;
}

// Newton form of the interpolating polynomial through (nodes[j], values[j]).
class Interpolant {
 public:
  Interpolant(std::vector<HPComplex> nodes, std::vector<HPComplex> values)
      : nodes_(std::move(nodes)), coefficients_(std::move(values)) {
    const std::size_t n = nodes_.size();
    for (std::size_t level = 1; level < n; ++level) {
      for (std::size_t j = n - 1; j >= level; --j) {
        coefficients_[j] = (coefficients_[j] - coefficients_[j - 1]) / (nodes_[j] - nodes_[j - level]);
      }
    }
  }

  HPComplex operator()(const HPComplex& x) const {
    HPComplex out = coefficients_.back();
    for (std::size_t j = coefficients_.size() - 1; j-- > 0;) {
      out = out * (x - nodes_[j]) + coefficients_[j];
    }
    return out;
  }

 private:
  std::vector<HPComplex> nodes_;
  std::vector<HPComplex> coefficients_;
};

void require_two_sided_quadrature(const ParamSet& t) {
  for (const ParamSet& s : {t, dual_tau(t), dual_sigma(t), params_sigma_tau(t)}) {
    s.require_quadrature();
  }
}

}  // namespace

HPComplex kernel_constant(const ParamSet& t, int bits) {
  const HPComplex n_tau = inversion_constant(dual_tau(t), WeightVariant::full, bits);
  return n_tau * gaussian_at_base(t, true, bits) / (Rational(2) * t.t1());
}

ScaledPoly frak_F_exact(const ParamSet& t, const Poly& p, FrakMethod method) {
  const ParamSet tt = dual_tau(t);
  const ParamSet tst = params_sigma_tau(t);
  tt.require_exact();
  tst.require_exact();
  const int bits = numeric::working_bits(numeric::kDefaultPrecisionBits);

  if (method == FrakMethod::composition) {
    const FiniteSpectralFunction f = forward_F(tt, p);
    std::map<int, Rational> values;
    for (const auto& [m, v] : f.values()) values[m] = v * gaussian_ratio_tau_sigma(t, m);
    const FiniteSpectralFunction g(std::move(values), f.scale() * gaussian_at_base(t, false, bits));
    return inverse_G(tst, g);
  }
  if (method == FrakMethod::basis) {
    const auto coefficients = expand_in_E(tt, p);
    const auto dual = WilsonBasis::of(tst);
    Poly out;
    for (std::size_t m = 0; m < coefficients.size(); ++m) {
      if (coefficients[m].is_zero()) continue;
      const int mm = static_cast<int>(m);
      out += dual->E(mm) * (coefficients[m] * gaussian_ratio_tau_sigma_tau(t, mm));
    }
    return {out, inversion_constant(tt, WeightVariant::full, bits) * gaussian_at_base(t, true, bits)};
  }
  throw std::invalid_argument("the integral route has no exact form");
}

HPComplex frak_F_transform(const ParamSet& t, const Poly& p, const HPComplex& lambda,
                           FrakMethod method, const ThetaOptions& options) {
  if (method == FrakMethod::integral) {
    return kernel_constant(t, options.bits) *
           kernel_pairing(t, p, lambda, WeightVariant::full, options).value;
  }
  const ScaledPoly out = frak_F_exact(t, p, method);
  return out.poly(lambda.with_precision(options.bits)) * out.scale;
}

ChiReport check_chi_intertwining(const ParamSet& t, ChiGenerator generator, const Poly& p) {
  const ParamSet tt = dual_tau(t);
  const ParamSet tst = params_sigma_tau(t);
  Poly moved;
  switch (generator) {
    case ChiGenerator::z: moved = p * Poly::x(); break;
    case ChiGenerator::Y_tau: moved = apply_Y(tt, p); break;
    case ChiGenerator::T1_tau: moved = apply_T(1, tt, p); break;
  }
  const Poly image = frak_F_exact(t, p, FrakMethod::basis).poly;
  ChiReport out;
  out.lhs = frak_F_exact(t, moved, FrakMethod::basis).poly;
  switch (generator) {
    case ChiGenerator::z: out.rhs = -apply_U(0, tst, image) - apply_T(1, tst, image); break;
    case ChiGenerator::Y_tau: out.rhs = apply_Y(tst, image); break;
    case ChiGenerator::T1_tau: out.rhs = apply_T(1, tst, image); break;
  }
  return out;
}

Rational calF_basis_ratio(const ParamSet& t, int m) {
  return (t.a() + t.b()) * gaussian_ratio_tau_sigma_tau(t, m);
}

Poly calF_exact(const ParamSet& t, const Poly& p) {
  const ParamSet tt = dual_tau(t);
  const ParamSet tst = params_sigma_tau(t);
  tt.require_exact();
  tst.require_exact();
  const auto coefficients = expand_in_E(tt, p);
  const auto dual = WilsonBasis::of(tst);
  Poly out;
  for (std::size_t m = 0; m < coefficients.size(); ++m) {
    if (coefficients[m].is_zero()) continue;
    const int mm = static_cast<int>(m);
    out += dual->E(mm) * (coefficients[m] * calF_basis_ratio(t, mm));
  }
  return out;
}

HPComplex calF_numeric(const ParamSet& t, const Poly& p, const HPComplex& lambda,
                       const ThetaOptions& options) {
  PhiOptions phi;
  phi.bits = options.bits;
  return theta_form(
             t, [&](const HPComplex& x) { return p(x) * gaussian_G_tau(t, x).value; },
             [&](const HPComplex& x) { return wilson_function_E(t, x, lambda, phi).value; },
             WeightVariant::full, M_PI, options)
      .value;
}

Rational calF_plus_basis_ratio(const ParamSet& t, int n) {
  return gaussian_ratio_tau_sigma_tau(t, 2 * n);
}

Poly calF_plus_exact(const ParamSet& t, const Poly& p) {
  const ParamSet tt = dual_tau(t);
  const ParamSet tst = params_sigma_tau(t);
  tt.require_exact();
  tst.require_exact();
  const auto coefficients = expand_in_E_plus(tt, p);
  Poly out;
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    if (coefficients[n].is_zero()) continue;
    const int nn = static_cast<int>(n);
    out += renormalized_E_plus(tst, nn) * (coefficients[n] * calF_plus_basis_ratio(t, nn));
  }
  return out;
}

HPComplex symmetric_calF_plus(const ParamSet& t, const Poly& p, const HPComplex& lambda,
                              const ThetaOptions& options) {
  if (!p.is_even()) throw NotSymmetricError("F^+ is defined on even polynomials");
  PhiOptions phi;
  phi.bits = options.bits;
  return theta_form(
             t, [&](const HPComplex& x) { return p(x) * gaussian_G_tau(t, x).value; },
             [&](const HPComplex& x) { return wilson_function_E_plus(t, x, lambda, phi).value; },
             WeightVariant::plus, M_PI, options)
      .value;
}

CalFReport calF_exact_suite(const ParamSet& t, int max_index) {
  const ParamSet tt = dual_tau(t);
  const ParamSet tst = params_sigma_tau(t);
  const ParamSet ts = dual_sigma(t);
  const int bits = numeric::working_bits(numeric::kDefaultPrecisionBits);
  CalFReport out;

  out.basis_ratios_hold = true;
  for (int m = 0; m <= max_index; ++m) {
    const HPComplex exact_ts(gaussian_ratio_tau_sigma(t, m), bits);
    const HPComplex exact_tst(gaussian_ratio_tau_sigma_tau(t, m), bits);
    if (numeric::relative_difference(exact_ts, gaussian_ratio_tau_sigma_numeric(t, m, bits)) > 1e-10 ||
        numeric::relative_difference(exact_tst, gaussian_ratio_tau_sigma_tau_numeric(t, m, bits)) > 1e-10) {
      out.basis_ratios_hold = false;
    }
  }

  const Rational ab2 = (t.a() + t.b()) * (t.a() + t.b());
  const auto basis = WilsonBasis::of(tt);
  out.exact_inversion_holds = true;
  for (int m = 0; m <= max_index; ++m) {
    const Poly e = basis->E(m);
    if (calF_basis_ratio(ts, m) * calF_basis_ratio(t, m) != ab2 ||
        calF_exact(ts, calF_exact(t, e)) != e * ab2) {
      out.exact_inversion_holds = false;
    }
  }

  // {e_m, e_m}_t = <1,1>_{t^tau} / w-ratio over t^tau; the image side uses t^{sigma tau}.
  // Off-diagonal pairings vanish on both sides by orthogonality.
  out.plancherel_holds =
      numeric::relative_difference(unit_norm(tt, WeightVariant::full),
                                   unit_norm(tst, WeightVariant::full)) <= 1e-30;
  for (int m = 0; m <= max_index; ++m) {
    const Rational g = gaussian_ratio_tau_sigma_tau(t, m);
    const Rational image = ab2 * g * g / relative_weight_w(tst, m, WeightVariant::full);
    const Rational source = ab2 / relative_weight_w(tt, m, WeightVariant::full);
    if (image != source) out.plancherel_holds = false;
  }
  return out;
}

NumericInversion calF_numeric_inversion(const ParamSet& t, const Poly& p,
                                        const std::vector<HPComplex>& xs, bool symmetric,
                                        const ThetaOptions& options) {
  require_two_sided_quadrature(t);
  const ParamSet ts = dual_sigma(t);
  const int bits = options.bits;
  const int points = std::max(p.degree(), 0) + 1;

  std::vector<HPComplex> nodes, values;
  for (int j = 0; j < points; ++j) {
    const HPComplex lambda(0.0, 0.25 + 0.35 * j, bits);
    const HPComplex value = symmetric ? symmetric_calF_plus(t, p, lambda, options)
                                      : calF_numeric(t, p, lambda, options);
    nodes.push_back(lambda);
    values.push_back(value / gaussian_G_sigma_tau(t, lambda).value);
  }
  const Interpolant q(nodes, values);

  PhiOptions phi;
  phi.bits = bits;
  const Rational factor = symmetric ? Rational(1) : (t.a() + t.b()) * (t.a() + t.b());
  NumericInversion out;
  for (const auto& x : xs) {
    auto image = [&](const HPComplex& l) { return q(l) * gaussian_G_tau(ts, l).value; };
    auto kernel = [&](const HPComplex& l) {
      return symmetric ? wilson_function_E_plus(ts, l, x, phi).value
                       : wilson_function_E(ts, l, x, phi).value;
    };
    const auto back = theta_form(ts, image, kernel,
                                 symmetric ? WeightVariant::plus : WeightVariant::full, M_PI, options);
    out.evaluations += back.evaluations;
    const HPComplex expected = p(x) * gaussian_G_tau(t, x).value * factor;
    out.error = std::max(out.error, numeric::relative_difference(back.value, expected));
  }
  return out;
}

double calF_plus_isometry_error(const ParamSet& t, const Poly& p, const ThetaOptions& options) {
  require_two_sided_quadrature(t);
  if (!p.is_even()) throw NotSymmetricError("F^+ is defined on even polynomials");
  const ParamSet ts = dual_sigma(t);
  const int bits = options.bits;
  const int points = std::max(p.degree(), 0) + 1;
  std::vector<HPComplex> nodes, values;
  for (int j = 0; j < points; ++j) {
    const HPComplex lambda(0.0, 0.25 + 0.35 * j, bits);
    nodes.push_back(lambda);
    values.push_back(symmetric_calF_plus(t, p, lambda, options) /
                     gaussian_G_sigma_tau(t, lambda).value);
  }
  const Interpolant q(nodes, values);
  auto f = [&](const HPComplex& x) { return p(x) * gaussian_G_tau(t, x).value; };
  auto image = [&](const HPComplex& l) { return q(l) * gaussian_G_tau(ts, l).value; };
  const double decay = 2.0 * M_PI;
  const HPComplex source = theta_form(t, f, f, WeightVariant::plus, decay, options).value;
  const HPComplex target = theta_form(ts, image, image, WeightVariant::plus, decay, options).value;
  return numeric::relative_difference(source, target);
}

}  // namespace wilson
