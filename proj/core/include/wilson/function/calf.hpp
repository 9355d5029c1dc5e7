#pragma once

#include <string>
#include <vector>

#include "wilson/function/kernel.hpp"
#include "wilson/transform/transforms.hpp"

namespace wilson {

// Three routes to the transform p -> (F~ p)(lambda) from polynomials over t^tau to
// polynomials over t^{sigma tau}:
//   composition  G_{sigma tau} o G_{tau sigma} o F_tau, on the spectral side;
//   basis        E_tau(., gamma) -> N_tau G_{tau sigma tau}(gamma) E_{sigma tau}(., gamma);
//   integral     K <p, E~(., lambda)>_{t^tau}, K = N_tau G_{tau sigma tau}(gamma_0^tau) / 2 t1.
enum class FrakMethod { composition, basis, integral };

// Exact polynomial in lambda times a constant; integral is not an exact method.
ScaledPoly frak_F_exact(const ParamSet& t, const Poly& p, FrakMethod method);

HPComplex frak_F_transform(const ParamSet& t, const Poly& p, const HPComplex& lambda,
                           FrakMethod method, const ThetaOptions& options = {});

// N_tau G_{tau sigma tau}(gamma_0^tau) / 2 t1
HPComplex kernel_constant(const ParamSet& t, int bits);

enum class ChiGenerator { z, Y_tau, T1_tau };

struct ChiReport {
  Poly lhs;  // F~(X p), exact part
  Poly rhs;  // chi(X) F~ p, exact part
  bool holds() const { return lhs == rhs; }
};

// chi(z) = -U0^{sigma tau} - T1^{sigma tau}, chi(Y^tau) = Y^{sigma tau},
// chi(T1^tau) = T1^{sigma tau}.
ChiReport check_chi_intertwining(const ParamSet& t, ChiGenerator generator, const Poly& p);

// Elements of A G_tau are stored as p with f = p G_tau. Their images under F lie
// in A G_{sigma tau} and are returned as the polynomial factor.

// F e_gamma = calF_basis_ratio * e^sigma_gamma with e_gamma = G_tau E_tau(., gamma_m^tau):
// (a+b) G_{tau sigma tau}(gamma_m^tau) / G_{tau sigma tau}(gamma_0^tau).
Rational calF_basis_ratio(const ParamSet& t, int m);

// Exact F (p G_tau) / G_{sigma tau}, from the basis action.
Poly calF_exact(const ParamSet& t, const Poly& p);

// {p G_tau, E(., lambda)}_t by quadrature.
HPComplex calF_numeric(const ParamSet& t, const Poly& p, const HPComplex& lambda,
                       const ThetaOptions& options = {});

// Symmetric analogues: F^+ e^+_n = G_{tau sigma tau} ratio * e^{+,sigma}_n.
Rational calF_plus_basis_ratio(const ParamSet& t, int n);
Poly calF_plus_exact(const ParamSet& t, const Poly& p);
// {p G_tau, E^+(., lambda)}^+_t by quadrature; p even.
HPComplex symmetric_calF_plus(const ParamSet& t, const Poly& p, const HPComplex& lambda,
                              const ThetaOptions& options = {});

struct CalFReport {
  bool basis_ratios_hold = false;      // exact Pochhammer against numeric Gamma ratios
  bool exact_inversion_holds = false;  // F_sigma F = (a+b)^2 on the exact route
  bool plancherel_holds = false;       // {F e, F e'}_sigma = (a+b)^2 {e, e'} in ratio form
  bool holds() const { return basis_ratios_hold && exact_inversion_holds && plancherel_holds; }
};

// Exact checks of transform F for basis indices m <= max_index.
CalFReport calF_exact_suite(const ParamSet& t, int max_index);

struct NumericInversion {
  double error = 0.0;  // relative, at the sample points
  long evaluations = 0;
};

// F_sigma F (p G_tau) against (a+b)^2 p G_tau (or F^+_sigma F^+ against the
// identity) through quadrature: F (p G_tau) is sampled at deg p + 1 points,
// divided by G_{sigma tau} and interpolated, then transformed back. Requires
// quadrature on iR for t, t^sigma and their tau twists.
NumericInversion calF_numeric_inversion(const ParamSet& t, const Poly& p,
                                        const std::vector<HPComplex>& xs, bool symmetric,
                                        const ThetaOptions& options = {});

// {F^+ f, F^+ f}^+_sigma against {f, f}^+_t for f = p G_tau, by quadrature.
double calF_plus_isometry_error(const ParamSet& t, const Poly& p, const ThetaOptions& options = {});

}  // namespace wilson
