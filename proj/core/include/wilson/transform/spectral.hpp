#pragma once

#include <map>
#include <string>

#include "wilson/daha/param_set.hpp"
#include "wilson/daha/poly.hpp"
#include "wilson/numeric/complex.hpp"

namespace wilson {

using numeric::HPComplex;

// Finitely supported function on Gamma = {-gamma_m}. Index m stands for the
// point -gamma_m. The actual value is values[m] * scale; the exact part carries
// all the algebra and scale holds a transcendental constant such as <1,1>.
class FiniteSpectralFunction {
 public:
  FiniteSpectralFunction() = default;
  explicit FiniteSpectralFunction(std::map<int, Rational> values, HPComplex scale = unit_scale());

  static FiniteSpectralFunction indicator(int m);
  static HPComplex unit_scale();

  // Value at -gamma_m; label kMinusGamma0Label reads +gamma_0 as -gamma_0.
  Rational at(int label) const;
  HPComplex numeric_at(int label) const;

  const std::map<int, Rational>& values() const { return values_; }
  const HPComplex& scale() const { return scale_; }
  FiniteSpectralFunction with_scale(const HPComplex& scale) const;

  bool empty() const { return values_.empty(); }
  int max_index() const;  // -1 when empty

  FiniteSpectralFunction& operator+=(const FiniteSpectralFunction& o);  // scales must agree
  FiniteSpectralFunction operator*(const Rational& r) const;

  // Exact comparison of the exact parts; scales are compared to 1e-10 relative.
  bool same_exact_part(const FiniteSpectralFunction& o) const;
  friend bool operator==(const FiniteSpectralFunction& x, const FiniteSpectralFunction& y);

  std::string str() const;

 private:
  void prune();

  std::map<int, Rational> values_;
  HPComplex scale_ = unit_scale();
};

enum class SpectralGenerator { T0_sigma, T1_sigma, multiply };

// T_i^sigma f(g) = t_i^sigma f(g) + c_i(g; t^sigma)((s_i f)(g) - f(g)) and
// (p(z) f)(g) = p(g) f(g). `t` is the parameter set of the polynomial side;
// the action is the one of the dual algebra on functions on its spectrum.
FiniteSpectralFunction spectral_action(const ParamSet& t, SpectralGenerator generator,
                                       const FiniteSpectralFunction& f,
                                       const Poly& multiplier = Poly());

}  // namespace wilson
