#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "wilson/daha/operators.hpp"
#include "wilson/daha/param_set.hpp"
#include "wilson/daha/poly.hpp"

namespace wilson {

// Label of the point -gamma_0 in the convention E(x, -gamma_0) = 1.
inline constexpr int kMinusGamma0Label = -1;
// Label of gamma_{-2} in the convention E^+(x, gamma_{-2}) = 0.
inline constexpr int kGammaMinus2Label = -2;

// Index arithmetic for the spectral reflections: -gamma_m = gamma_(s1_label(m))
// for m >= 1 (s1_label(0) is kMinusGamma0Label) and -1 - gamma_m = gamma_(s0_label(m)).
int s1_label(int m);
int s0_label(int m);

// gamma_(2n) = t0+t1+n, gamma_(2n-1) = -(t0+t1+n).
Rational gamma_value(const Rational& t0_plus_t1, int m);

// Non-symmetric Wilson polynomials for one parameter set, generated by
// back-substitution in the monomial basis and cached. Safe for concurrent use.
class WilsonBasis {
 public:
  explicit WilsonBasis(ParamSet t);

  // Shared instance per parameter set.
  static std::shared_ptr<const WilsonBasis> of(const ParamSet& t);

  const ParamSet& params() const { return t_; }
  const Representation& representation() const { return rep_; }

  // gamma_m; honours a test override installed with with_gamma_override().
  Rational gamma(int m) const;
  // x_m = gamma_m over the dual parameters.
  Rational x_dual(int m) const;

  // Monic p_m with Y p_m = gamma_m p_m.
  Poly p(int m) const;
  // p_m(-x0) by direct substitution.
  Rational p_at_minus_x0(int m) const;
  // E(x, gamma_m) = p_m(x) / p_m(-x0); label kMinusGamma0Label gives 1.
  Poly E(int label) const;
  // b_m of the T_1 action; b_0 = t1.
  Rational b(int m) const;

  Poly P_plus(int n) const;
  Poly P_minus(int n) const;

  // Returns a copy whose eigenvalue table reports `value` at index m. The
  // back-substitution uses the table, so p_m comes out wrong; used to exercise
  // failure reporting.
  std::shared_ptr<WilsonBasis> with_gamma_override(int m, const Rational& value) const;

 private:
  Poly solve(int m) const;

  ParamSet t_;
  Representation rep_;
  std::map<int, Rational> gamma_override_;
  mutable std::mutex mutex_;
  mutable std::vector<Poly> y_columns_;  // Y x^k
  mutable std::vector<Poly> cache_;
};

Rational gamma_val(const ParamSet& t, int m);
Poly nonsymmetric_wilson(const ParamSet& t, int m);
// (S1 S0)^n 1 and S0 (S1 S0)^n 1 divided by their normalizing constants.
Poly nonsymmetric_wilson_rodriguez(const ParamSet& t, int m);
Rational t1_coefficient_b(const ParamSet& t, int m);
// Closed-form value of p_m(-x0).
Rational evaluation_at_minus_x0(const ParamSet& t, int m);
// Closed-form value of P^+_(2n)(x0).
Rational symmetric_evaluation_at_x0(const ParamSet& t, int n);
Poly renormalized_E(const ParamSet& t, int m);
Poly symmetric_P(const ParamSet& t, int n, Sign sign);
// E^+(x, gamma_(2n)) = P^+_(2n)(x) / P^+_(2n)(x0).
Poly renormalized_E_plus(const ParamSet& t, int n);

// Terminating 4F3(-n, n+a+b+c+d-1, a+x, a-x; a+b, a+c, a+d; 1).
Rational symmetric_E_4f3(const ParamSet& t, int n, const Rational& x);
HPComplex symmetric_E_4f3(const ParamSet& t, int n, const HPComplex& x);

}  // namespace wilson
