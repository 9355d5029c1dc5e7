#pragma once

#include <vector>

#include "wilson/daha/param_set.hpp"
#include "wilson/numeric/complex.hpp"

namespace wilson {

using numeric::HPComplex;

// A value of a meromorphic function with the distance from the evaluation
// point to the nearest known pole.
struct MeromorphicValue {
  HPComplex value;
  bool near_pole = false;  // pole_distance < kNearPoleDistance
  double pole_distance = 0.0;
};

inline constexpr double kNearPoleDistance = 1e-6;

// Parameter sets reached by composing tau and sigma; the name lists the maps
// from left to right as they appear in the superscript.
ParamSet params_sigma_tau(const ParamSet& t);      // (u0, u1, t1, t0)
ParamSet params_tau_sigma(const ParamSet& t);      // (u1, t0, t1, u0)
ParamSet params_tau_sigma_tau(const ParamSet& t);  // (t0, u1, t1, u0)

// Distance from x to the lattice {+-(offset + n) : n >= 0}.
double distance_to_lattice(const HPComplex& x, const Rational& offset);

// G(x; t) = Gamma(d + x) Gamma(d - x). Poles at x = +-(d + n).
MeromorphicValue gaussian_G(const ParamSet& t, const HPComplex& x);

// The named Gaussians of the transform chapter.
MeromorphicValue gaussian_G_tau(const ParamSet& t, const HPComplex& x);        // Gamma(1-d +- x)
MeromorphicValue gaussian_G_sigma_tau(const ParamSet& t, const HPComplex& x);  // Gamma(1-d~ +- x)
MeromorphicValue gaussian_G_tau_sigma(const ParamSet& t, const HPComplex& x);
MeromorphicValue gaussian_G_tau_sigma_tau(const ParamSet& t, const HPComplex& x);

// G_{tau sigma}(gamma_m^tau) / G_{tau sigma}(gamma_0^tau) = (-1)^n (a+1-d)_n / (b+c)_n
// for m = 2n or 2n-1, and the reciprocal for G_{tau sigma tau}.
Rational gaussian_ratio_tau_sigma(const ParamSet& t, int m);
Rational gaussian_ratio_tau_sigma_tau(const ParamSet& t, int m);

// The same ratios from log-Gamma values at the points gamma_m of t^tau.
HPComplex gaussian_ratio_tau_sigma_numeric(const ParamSet& t, int m, int bits);
HPComplex gaussian_ratio_tau_sigma_tau_numeric(const ParamSet& t, int m, int bits);

// Values of f at x, -x and 1 - x.
struct ReflectionValues {
  HPComplex at_x, at_minus_x, at_one_minus_x;
};

// (T_i f)(x) = t_i f(x) + c_i(x) ((s_i f)(x) - f(x)) with
// c_0(x) = (c-x)(d-x)/(1-2x) and c_1(x) = (a+x)(b+x)/(2x).
HPComplex apply_T_pointwise(const ParamSet& t, int i, const HPComplex& x,
                            const ReflectionValues& f);

struct GaussianConjugationReport {
  // t0 - c0(x) = x - 1/2 - u0 + c0^tau(x) as rational functions.
  bool exact_identity_holds = false;
  // max relative error of G (X x^k) against tau(X) (G x^k), pointwise.
  double T0_error = 0.0;
  double T1_error = 0.0;
  double z_error = 0.0;
  bool holds(double tol = 1e-10) const {
    return exact_identity_holds && T0_error <= tol && T1_error <= tol && z_error <= tol;
  }
};

// Checks G X G^-1 = tau(X) for X in {T0, T1, z} with tau(T0) = U0^tau = z - 1/2 - T0^tau,
// tau(T1) = T1^tau and tau(z) = z, on x^k for k <= max_degree at each sample point.
GaussianConjugationReport check_gaussian_conjugation(const ParamSet& t, int max_degree,
                                                     const std::vector<HPComplex>& points);

}  // namespace wilson
