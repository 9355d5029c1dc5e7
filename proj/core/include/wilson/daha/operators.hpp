#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wilson/daha/param_set.hpp"
#include "wilson/daha/poly.hpp"

namespace wilson {

using Operator = std::function<Poly(const Poly&)>;

enum class Reflection { s0, s1 };
enum class Sign { plus, minus };

// Composition of reflections; the rightmost letter acts first, so {s1, s0}
// maps p(x) to p(x + 1).
Poly apply_weyl(const std::vector<Reflection>& word, const Poly& p);

// D_i = (s_i - 1) / a_i with a_0(x) = 1 - 2x, a_1(x) = 2x.
Poly apply_D(int i, const Poly& p);

// The polynomial representation of the degenerate double affine Hecke algebra
// for one multiplicity function. T_i is evaluated as t_i + q_i(x) D_i with
//   q_0(x) = (c - x)(d - x),   q_1(x) = (a + x)(b + x).
class Representation {
 public:
  explicit Representation(ParamSet t);

  // Test hook: replaces c_1 by c_1 + s in T_1, which breaks the relations.
  Representation with_c1_shift(const Rational& s) const;

  const ParamSet& params() const { return t_; }

  Poly T(int i, const Poly& p) const;
  // U_0 = -T_0 - 1/2 + z, U_1 = -T_1 - z.
  Poly U(int i, const Poly& p) const;
  Poly Y(const Poly& p) const { return T(0, p) + T(1, p); }
  Poly z(const Poly& p) const { return p * Poly::x(); }
  // C_(+/-) = (t_1 +/- T_1) / (2 t_1)
  Poly C(Sign sign, const Poly& p) const;
  // S_0 = U_1 Y - Y U_1, S_1 = T_1 Y - Y T_1.
  Poly S(int i, const Poly& p) const;

 private:
  ParamSet t_;
  Poly q0_;
  Poly q1_;
  std::optional<Rational> c1_shift_;
};

Poly apply_T(int i, const ParamSet& t, const Poly& p);
Poly apply_U(int i, const ParamSet& t, const Poly& p);
Poly apply_Y(const ParamSet& t, const Poly& p);
Poly apply_C(Sign sign, const ParamSet& t, const Poly& p);
Poly apply_intertwiner(int i, const ParamSet& t, const Poly& p);

// q(W) f for an operator W, by Horner's rule.
Poly apply_polynomial_in(const Poly& q, const Operator& w, const Poly& f);

}  // namespace wilson
