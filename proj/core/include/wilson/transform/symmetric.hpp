#pragma once

#include "wilson/transform/transforms.hpp"

namespace wilson {

// Functions in F_+ are stored by n, standing for gamma_2n in Gamma^+.

// (F^+ p)(gamma_2n) = <p, E^+(., gamma_2n)>^+, scale <1,1>^+.
FiniteSpectralFunction forward_F_plus(const ParamSet& t, const Poly& p);
// sum_n f(gamma_2n) E^+(x, gamma_2n) w^+(gamma_2n), scale f.scale * w^+(gamma_0).
ScaledPoly inverse_G_plus(const ParamSet& t, const FiniteSpectralFunction& f);
// sum_n f g w^+, scale f.scale * g.scale * w^+(gamma_0).
ScaledValue spectral_pairing_plus(const ParamSet& t, const FiniteSpectralFunction& f,
                                  const FiniteSpectralFunction& g);
// <E^+_n, E^+_n>^+ / <1,1>^+ = w^+(gamma_0) / w^+(gamma_2n)
Rational norm_ratio_plus(const ParamSet& t, int n);

struct SymmetricSuiteReport {
  bool inversion_holds = false;        // G^+ F^+ p = N^+ p
  bool dual_inversion_holds = false;   // F^+ G^+ f = N^+ f for f = F^+ p
  bool norms_hold = false;             // norm ratios against the expansion route
  bool plancherel_holds = false;       // both Plancherel identities, exact ratio form
  bool holds() const {
    return inversion_holds && dual_inversion_holds && norms_hold && plancherel_holds;
  }
};

// Runs the inversion, norm and Plancherel checks of the symmetric transform on an even polynomial p,
// with q as the second Plancherel argument.
SymmetricSuiteReport symmetric_transform_suite(const ParamSet& t, const Poly& p, const Poly& q);

}  // namespace wilson
