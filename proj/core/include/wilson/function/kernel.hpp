#pragma once

#include <functional>
#include <vector>

#include "wilson/daha/poly.hpp"
#include "wilson/function/phi.hpp"
#include "wilson/numeric/quadrature.hpp"
#include "wilson/transform/weights.hpp"

namespace wilson {

// E~(x, lambda) = phi_lambda(x; t) + delta(x) delta_sigma(lambda) phi_lambda(x; t0, u0, t1+1, u1)
// with delta(x) = (a+x)(b+x) and delta_sigma(lambda) = (a~+lambda)(b~+lambda).
MeromorphicValue kernel_E_frak(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                               const PhiOptions& options = {});

// Wilson function G_tau(x) G_{sigma tau}(lambda) E~(x, lambda). Poles at
// x = +-(1-d+n) and lambda = +-(1-d~+n).
MeromorphicValue wilson_function_E(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                                   const PhiOptions& options = {});

// E^+(x, lambda) = G_tau(x) G_{sigma tau}(lambda) phi_lambda(x).
MeromorphicValue wilson_function_E_plus(const ParamSet& t, const HPComplex& x,
                                        const HPComplex& lambda, const PhiOptions& options = {});

// Theta(x) = Delta(x) / (G(x) G_tau(x)) = sin pi(d+-x) / pi^2 * Delta(x); the plus
// variant uses Delta^+.
HPComplex theta_weight(const ParamSet& t, const HPComplex& x, WeightVariant variant, int bits);

using PointFunction = std::function<HPComplex(const HPComplex&)>;

struct ThetaOptions {
  double tol = 1e-10;
  double abs_floor = 0.0;
  int bits = numeric::working_bits(numeric::kDefaultPrecisionBits);
};

// {f, g} = (1/2 pi i) int_{iR} f g Theta, and {f, g}^+ = (1/4 pi i) int f g Theta^+.
// For f, g in A G_tau the integrand decays like e^(-2 pi |y|); with one of them a
// Wilson function, like e^(-pi |y|). `decay` is passed to the quadrature.
numeric::QuadratureResult theta_form(const ParamSet& t, const PointFunction& f,
                                     const PointFunction& g, WeightVariant variant, double decay,
                                     const ThetaOptions& options = {});

// <p, E~(., lambda)>_{t^tau} (full) or <p, phi_lambda>^+_{t^tau} (plus), by quadrature.
numeric::QuadratureResult kernel_pairing(const ParamSet& t, const Poly& p, const HPComplex& lambda,
                                         WeightVariant variant, const ThetaOptions& options = {});

struct IdentityCheck {
  HPComplex lhs;
  HPComplex rhs;
  double error = 0.0;  // relative
  bool holds(double tol = 1e-8) const { return error <= tol; }
};

// <E_tau(., gamma_m^tau), E~(., lambda)>_{t^tau} against
// 2 t1 G_{tau sigma tau}(gamma_m^tau) / G_{tau sigma tau}(gamma_0^tau) E_{sigma tau}(lambda, gamma_m^tau).
IdentityCheck check_kernel_identity(const ParamSet& t, int m, const HPComplex& lambda,
                                    const ThetaOptions& options = {});

// <E^+_tau(., gamma_2n^tau), phi_lambda>^+_{t^tau} against
// 2 G_{tau sigma tau}(gamma_2n^tau) / G_{tau sigma tau}(gamma_0^tau) E^+_{sigma tau}(lambda, gamma_2n^tau).
IdentityCheck check_phi_pairing(const ParamSet& t, int n, const HPComplex& lambda,
                                const ThetaOptions& options = {});

// max |E(x, lambda) - E_sigma(lambda, x)| / (1 + |E(x, lambda)|) over the grid.
double check_wilson_duality(const ParamSet& t, const std::vector<HPComplex>& xs,
                            const std::vector<HPComplex>& lambdas, const PhiOptions& options = {});

// Gamma(1-a-d) / (Gamma(a+b) Gamma(a+c))
HPComplex reduction_constant(const ParamSet& t, int bits);

// max relative error of E(x, -gamma_m) against reduction_constant * E(x, gamma_m).
double check_polynomial_reduction(const ParamSet& t, int m, const std::vector<HPComplex>& xs,
                                  const PhiOptions& options = {});

struct EigenCheck {
  double y_error = 0.0;        // (Y E(., lambda))(x) + lambda E(x, lambda)
  double y_sigma_error = 0.0;  // (Y^sigma E(x, .))(lambda) + x E(x, lambda)
  bool holds(double tol = 1e-8) const { return y_error <= tol && y_sigma_error <= tol; }
};

// Y acts through T0 + T1 on point values at x, -x and 1-x.
EigenCheck check_wilson_eigen(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                              const PhiOptions& options = {});

// max relative asymmetry of {T_i f, g} - {f, T_i g}, i = 0, 1, over f, g in
// {G_tau, G_tau x}.
double check_theta_symmetry(const ParamSet& t, const ThetaOptions& options = {});

}  // namespace wilson
