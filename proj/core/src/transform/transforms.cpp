#include "wilson/transform/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "wilson/errors.hpp"
#include "wilson/polys/wilson_basis.hpp"

namespace wilson {

namespace {

using numeric::relative_difference;

double min_parameter(const ParamSet& t) {
  return std::min({t.a().to_double(), t.b().to_double(), t.c().to_double(), t.d().to_double()});
}

}  // namespace

std::vector<Rational> expand_nonsymmetric(const ParamSet& t, const Poly& f) {
  auto basis = WilsonBasis::of(t);
  std::vector<Rational> out(static_cast<std::size_t>(std::max(f.degree(), -1) + 1), Rational(0));
  Poly rest = f;
  for (int k = f.degree(); k >= 0; --k) {
    const Rational c = rest.coefficient(k);
    if (c.is_zero()) continue;
    out[static_cast<std::size_t>(k)] = c;
    rest = rest - basis->p(k) * c;
  }
  return out;
}

std::vector<Rational> expand_symmetric(const ParamSet& t, const Poly& f) {
  if (!f.is_even()) throw NotSymmetricError("expected an even polynomial, got " + f.str());
  auto basis = WilsonBasis::of(t);
  const int top = std::max(f.degree(), -1) / 2;
  std::vector<Rational> out(static_cast<std::size_t>(top + 1), Rational(0));
  Poly rest = f;
  for (int n = top; n >= 0; --n) {
    const Rational c = rest.coefficient(2 * n);
    if (c.is_zero()) continue;
    out[static_cast<std::size_t>(n)] = c;
    rest = rest - basis->P_plus(n) * c;
  }
  return out;
}

Rational bilinear_ratio(const ParamSet& t, const Poly& f, const Poly& g, WeightVariant variant) {
  t.require_exact();
  auto basis = WilsonBasis::of(t);
  auto weights = WeightTable::of(t, variant);
  Rational sum(0);
  if (variant == WeightVariant::full) {
    auto cf = expand_nonsymmetric(t, f);
    auto cg = expand_nonsymmetric(t, g);
    for (std::size_t m = 0; m < std::min(cf.size(), cg.size()); ++m) {
      if (cf[m].is_zero() || cg[m].is_zero()) continue;
      const Rational ev = basis->p_at_minus_x0(static_cast<int>(m));
      sum += cf[m] * cg[m] * ev * ev / weights->relative(static_cast<int>(m));
    }
    return sum;
  }
  auto cf = expand_symmetric(t, f);
  auto cg = expand_symmetric(t, g);
  for (std::size_t n = 0; n < std::min(cf.size(), cg.size()); ++n) {
    if (cf[n].is_zero() || cg[n].is_zero()) continue;
    const Rational ev = symmetric_evaluation_at_x0(t, static_cast<int>(n));
    sum += cf[n] * cg[n] * ev * ev / weights->relative(static_cast<int>(n));
  }
  return sum;
}

numeric::QuadratureResult bilinear_quadrature(const ParamSet& t, const Poly& f, const Poly& g,
                                              const BilinearOptions& options) {
  t.require_quadrature();
  if (options.variant == WeightVariant::plus && !(f.is_even() && g.is_even())) {
    throw NotSymmetricError("<.,.>^+ is defined on even polynomials");
  }
  const Poly product = f * g;
  numeric::QuadratureOptions q;
  // |Delta(iy)| decays like e^(-2 pi |y|) times a power of |y|.
  q.decay_rate = 2.0 * M_PI;
  q.tol = options.tol;
  q.scale = min_parameter(t);
  q.abs_floor = options.abs_floor;
  q.bits = options.bits;
  const WeightVariant variant = options.variant;
  return numeric::integrate_imaginary_axis(
      [&](const HPComplex& x) { return product(x) * weight_Delta(t, x, variant, options.bits); }, q);
}

HPComplex bilinear_form(const ParamSet& t, const Poly& f, const Poly& g,
                        const BilinearOptions& options) {
  if (options.method == BilinearMethod::quadrature) return bilinear_quadrature(t, f, g, options).value;
  return unit_norm(t, options.variant, options.bits) * bilinear_ratio(t, f, g, options.variant);
}

Rational norm_ratio(const ParamSet& t, int m) {
  return Rational(1) / WeightTable::of(t, WeightVariant::full)->relative(m);
}

FiniteSpectralFunction forward_F(const ParamSet& t, const Poly& p) {
  t.require_exact();
  auto basis = WilsonBasis::of(t);
  auto weights = WeightTable::of(t, WeightVariant::full);
  auto c = expand_nonsymmetric(t, p);
  std::map<int, Rational> values;
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m].is_zero()) continue;
    const int k = static_cast<int>(m);
    values[k] = c[m] * basis->p_at_minus_x0(k) / weights->relative(k);
  }
  return FiniteSpectralFunction(std::move(values), unit_norm(t, WeightVariant::full));
}

ScaledPoly inverse_G(const ParamSet& t, const FiniteSpectralFunction& f) {
  t.require_exact();
  auto basis = WilsonBasis::of(t);
  auto weights = WeightTable::of(t, WeightVariant::full);
  Poly out;
  for (const auto& [m, v] : f.values()) out = out + basis->E(m) * (v * weights->relative(m));
  return {out, f.scale() * weight_w(t, 0, WeightVariant::full)};
}

ScaledValue spectral_pairing(const ParamSet& t, const FiniteSpectralFunction& f,
                             const FiniteSpectralFunction& g) {
  auto weights = WeightTable::of(t, WeightVariant::full);
  Rational sum(0);
  for (const auto& [m, v] : f.values()) sum += v * g.at(m) * weights->relative(m);
  return {sum, f.scale() * g.scale() * weight_w(t, 0, WeightVariant::full)};
}

HPComplex spectral_pairing_numeric(const ParamSet& t, const FiniteSpectralFunction& f,
                                   const FiniteSpectralFunction& g) {
  HPComplex sum;
  for (const auto& [m, v] : f.values()) {
    sum += f.numeric_at(m) * g.numeric_at(m) * weight_w(t, m, WeightVariant::full);
  }
  return sum;
}

bool check_forward_intertwining(const ParamSet& t, PolyGenerator generator, const Poly& p) {
  const Representation& rep = WilsonBasis::of(t)->representation();
  const FiniteSpectralFunction fp = forward_F(t, p);
  switch (generator) {
    case PolyGenerator::Y:
      return forward_F(t, rep.Y(p)) ==
             spectral_action(t, SpectralGenerator::multiply, fp, Poly({Rational(0), Rational(-1)}));
    case PolyGenerator::T1:
      return forward_F(t, rep.T(1, p)) == spectral_action(t, SpectralGenerator::T1_sigma, fp);
    case PolyGenerator::U1:
      return forward_F(t, rep.U(1, p)) == spectral_action(t, SpectralGenerator::T0_sigma, fp);
  }
  return false;
}

bool check_inverse_intertwining(const ParamSet& t, SpectralGenerator generator,
                                const FiniteSpectralFunction& f) {
  const Representation& rep = WilsonBasis::of(t)->representation();
  const Poly gf = inverse_G(t, f).poly;
  switch (generator) {
    case SpectralGenerator::multiply: {
      Poly z({Rational(0), Rational(1)});
      return inverse_G(t, spectral_action(t, generator, f, z)).poly == -rep.Y(gf);
    }
    case SpectralGenerator::T1_sigma:
      return inverse_G(t, spectral_action(t, generator, f)).poly == rep.T(1, gf);
    case SpectralGenerator::T0_sigma:
      return inverse_G(t, spectral_action(t, generator, f)).poly == rep.U(1, gf);
  }
  return false;
}

InversionResult check_G_after_F(const ParamSet& t, const Poly& p) {
  ScaledPoly g = inverse_G(t, forward_F(t, p));
  InversionResult out;
  out.exact_holds = g.poly == p;
  out.scale = g.scale;
  out.scale_error = relative_difference(g.scale, inversion_constant(t, WeightVariant::full));
  return out;
}

InversionResult check_F_after_G(const ParamSet& t, const FiniteSpectralFunction& f) {
  ScaledPoly g = inverse_G(t, f);
  FiniteSpectralFunction back = forward_F(t, g.poly);
  InversionResult out;
  out.exact_holds = back.same_exact_part(f);
  out.scale = back.scale() * g.scale / f.scale();
  out.scale_error = relative_difference(out.scale, inversion_constant(t, WeightVariant::full));
  return out;
}

PlancherelReport plancherel_check(const ParamSet& t, const Poly& p1, const Poly& p2, bool numeric) {
  PlancherelReport out;
  const FiniteSpectralFunction f1 = forward_F(t, p1), f2 = forward_F(t, p2);
  const Rational inner = bilinear_ratio(t, p1, p2);

  // [F p1, F p2] / (<1,1>^2 w(-gamma_0)) against N <p1,p2> / (<1,1>^2 w(-gamma_0)).
  const ScaledValue lhs_f = spectral_pairing(t, f1, f2);
  out.exact_F_holds = lhs_f.exact == inner;

  // <G f1, G f2> / (<1,1> w(-gamma_0))^2 / <1,1> against N [f1, f2] / (...)
  const ScaledPoly g1 = inverse_G(t, f1), g2 = inverse_G(t, f2);
  const Rational lhs_g = bilinear_ratio(t, g1.poly, g2.poly);
  out.exact_G_holds = lhs_g == spectral_pairing(t, f1, f2).exact;

  if (numeric && t.quadrature_ok()) {
    out.numeric_checked = true;
    const HPComplex n = inversion_constant(t, WeightVariant::full);
    BilinearOptions q;
    q.method = BilinearMethod::quadrature;
    // Orthogonal pairs integrate to zero; measure against the norms instead.
    const double norm_scale = std::sqrt(numeric::abs(bilinear_form(t, p1, p1)).to_double() *
                                        numeric::abs(bilinear_form(t, p2, p2)).to_double());
    q.abs_floor = norm_scale;
    const HPComplex quad = bilinear_form(t, p1, p2, q);
    const HPComplex lhs = spectral_pairing_numeric(t, f1, f2);
    const double scale_f = numeric::abs(n).to_double() * norm_scale;
    out.numeric_F_error = numeric::abs(lhs - n * quad).to_double() / scale_f;

    HPComplex g_quad = bilinear_form(t, g1.poly, g2.poly, q) * g1.scale * g2.scale;
    HPComplex g_rhs = n * lhs;
    const double scale_g = numeric::abs(n).to_double() * scale_f;
    out.numeric_G_error = numeric::abs(g_quad - g_rhs).to_double() / scale_g;
  }
  return out;
}

}  // namespace wilson
