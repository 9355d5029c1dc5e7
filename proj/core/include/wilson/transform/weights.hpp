#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "wilson/daha/param_set.hpp"
#include "wilson/numeric/complex.hpp"

namespace wilson {

using numeric::HPComplex;

enum class WeightVariant { full, plus };

// Delta(x) (full) or Delta^+(x) (plus) as a Gamma quotient.
HPComplex weight_Delta(const ParamSet& t, const HPComplex& x, WeightVariant variant,
                       int bits = numeric::working_bits(numeric::kDefaultPrecisionBits));

// w(-gamma_m) / w(-gamma_0) (full) or w^+(gamma_2m) / w^+(gamma_0) (plus), exact.
//
// For the full weight the Gamma display is used on both branches. On the branch
// gamma = a~ + n it differs in sign from the residue of Delta(y; t^sigma); the
// display is the one compatible with the reflection identities in gamma.
Rational relative_weight_w(const ParamSet& t, int m, WeightVariant variant);

// w(-gamma_m) (full) or w^+(gamma_2m) (plus) evaluated numerically from the
// Gamma display, independent of the telescoped ratios.
HPComplex weight_w(const ParamSet& t, int m, WeightVariant variant,
                   int bits = numeric::working_bits(numeric::kDefaultPrecisionBits));

// <1,1> (full) or <1,1>^+ (plus) in closed form.
HPComplex unit_norm(const ParamSet& t, WeightVariant variant,
                    int bits = numeric::working_bits(numeric::kDefaultPrecisionBits));

// N = <1,1> w(-gamma_0), N^+ = <1,1>^+ w^+(gamma_0).
HPComplex inversion_constant(const ParamSet& t, WeightVariant variant,
                             int bits = numeric::working_bits(numeric::kDefaultPrecisionBits));

struct WeightSymmetry {
  bool s0_holds = false;  // (c~-g)(d~-g)/(1-2g) w(g) = (c~-1+g)(d~-1+g)/(2g-1) w(1-g)
  bool s1_holds = false;  // (a~+g)(b~+g)/(2g) w(g) = (a~-g)(b~-g)/(-2g) w(-g), g != -gamma_0
};

// Both reflection identities of w at g = -gamma_m, in exact relative weights.
WeightSymmetry check_weight_symmetry(const ParamSet& t, int m);

// Memoized relative weights per (parameter set, variant).
class WeightTable {
 public:
  WeightTable(ParamSet t, WeightVariant variant);

  static std::shared_ptr<const WeightTable> of(const ParamSet& t, WeightVariant variant);

  const ParamSet& params() const { return t_; }
  WeightVariant variant() const { return variant_; }
  // log w(-gamma_0) or log w^+(gamma_0)
  HPComplex base_point_log_weight(int bits = numeric::working_bits(numeric::kDefaultPrecisionBits)) const;
  Rational relative(int m) const;

 private:
  ParamSet t_;
  WeightVariant variant_;
  mutable std::mutex mutex_;
  mutable std::map<int, Rational> cache_;
};

}  // namespace wilson
