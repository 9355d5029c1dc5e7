#pragma once

#include <vector>

#include "wilson/daha/operators.hpp"
#include "wilson/numeric/quadrature.hpp"
#include "wilson/transform/spectral.hpp"
#include "wilson/transform/weights.hpp"

namespace wilson {

// Exact value times a transcendental constant.
struct ScaledValue {
  Rational exact;
  HPComplex scale;
  HPComplex numeric() const { return scale * exact; }
};

struct ScaledPoly {
  Poly poly;
  HPComplex scale;
};

// Coefficients c_m with f = sum c_m p_m.
std::vector<Rational> expand_nonsymmetric(const ParamSet& t, const Poly& f);
// Coefficients d_n with f = sum d_n P^+_2n; throws NotSymmetricError for odd f.
std::vector<Rational> expand_symmetric(const ParamSet& t, const Poly& f);

enum class BilinearMethod { expansion, quadrature };

struct BilinearOptions {
  BilinearMethod method = BilinearMethod::expansion;
  WeightVariant variant = WeightVariant::full;
  double tol = 1e-12;
  // Scale below which the quadrature result counts as zero.
  double abs_floor = 0.0;
  int bits = numeric::working_bits(numeric::kDefaultPrecisionBits);
};

// <f,g> / <1,1> (or the plus analogue), exact from the expansion in the Wilson basis.
Rational bilinear_ratio(const ParamSet& t, const Poly& f, const Poly& g,
                        WeightVariant variant = WeightVariant::full);

// (1/2 pi i) int_{iR} f g Delta; requires quadrature_ok.
numeric::QuadratureResult bilinear_quadrature(const ParamSet& t, const Poly& f, const Poly& g,
                                              const BilinearOptions& options = {});

HPComplex bilinear_form(const ParamSet& t, const Poly& f, const Poly& g,
                        const BilinearOptions& options = {});

// <E(., gamma_m), E(., gamma_m)> / <1,1> = w(-gamma_0) / w(-gamma_m)
Rational norm_ratio(const ParamSet& t, int m);

// (F p)(gamma) = <p, E(., -gamma)>, scale <1,1>.
FiniteSpectralFunction forward_F(const ParamSet& t, const Poly& p);
// (G f)(x) = sum f(gamma) E(x, -gamma) w(gamma), scale f.scale * w(-gamma_0).
ScaledPoly inverse_G(const ParamSet& t, const FiniteSpectralFunction& f);

// sum f(gamma) g(gamma) w(gamma) with exact relative weights; scale f.scale * g.scale * w(-gamma_0).
ScaledValue spectral_pairing(const ParamSet& t, const FiniteSpectralFunction& f,
                             const FiniteSpectralFunction& g);
// Same sum with every weight evaluated numerically from its Gamma display.
HPComplex spectral_pairing_numeric(const ParamSet& t, const FiniteSpectralFunction& f,
                                   const FiniteSpectralFunction& g);

enum class PolyGenerator { Y, T1, U1 };

// F(X p) = sigma(X)(F p) with sigma(Y) = -z, sigma(T1) = T1^sigma, sigma(U1) = T0^sigma.
bool check_forward_intertwining(const ParamSet& t, PolyGenerator generator, const Poly& p);
// G(X f) = sigma^-1(X)(G f) with sigma^-1(z) = -Y, sigma^-1(T1^sigma) = T1,
// sigma^-1(T0^sigma) = U1.
bool check_inverse_intertwining(const ParamSet& t, SpectralGenerator generator,
                                const FiniteSpectralFunction& f);

struct InversionResult {
  bool exact_holds = false;   // exact part reproduces the input
  HPComplex scale;            // should equal N
  double scale_error = 0.0;   // relative distance of scale from inversion_constant()
  bool holds() const { return exact_holds && scale_error <= 1e-10; }
};

InversionResult check_G_after_F(const ParamSet& t, const Poly& p);
InversionResult check_F_after_G(const ParamSet& t, const FiniteSpectralFunction& f);

struct PlancherelReport {
  // [F p1, F p2] = N <p1, p2> and <G f1, G f2> = N [f1, f2] in exact ratio form.
  bool exact_F_holds = false;
  bool exact_G_holds = false;
  // Numeric sides: weights from the Gamma display, <.,.> by quadrature.
  bool numeric_checked = false;
  double numeric_F_error = 0.0;
  double numeric_G_error = 0.0;
  bool holds(double tol = 1e-8) const {
    return exact_F_holds && exact_G_holds &&
           (!numeric_checked || (numeric_F_error <= tol && numeric_G_error <= tol));
  }
};

// The G identity is checked with f_i = F p_i. Numeric parts run when the
// parameters allow quadrature on iR.
PlancherelReport plancherel_check(const ParamSet& t, const Poly& p1, const Poly& p2,
                                  bool numeric = true);

}  // namespace wilson
