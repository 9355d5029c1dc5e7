#include "wilson/daha/operators.hpp"

#include <string>

#include "wilson/errors.hpp"

namespace wilson {

namespace {

void check_index(int i) {
  if (i != 0 && i != 1) throw IndexError("operator index must be 0 or 1, got " + std::to_string(i));
}

}  // namespace

Poly apply_weyl(const std::vector<Reflection>& word, const Poly& p) {
  Poly out = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = (*it == Reflection::s0) ? out.reflect_s0() : out.reflect_s1();
  }
  return out;
}

Poly apply_D(int i, const Poly& p) {
  check_index(i);
  if (i == 1) {
    // (p(-x) - p(x)) / 2x keeps only the odd part: x^m -> -x^(m-1).
    std::vector<Rational> out;
    const auto& c = p.coefficients();
    for (std::size_t k = 1; k < c.size(); ++k) out.push_back(k % 2 == 1 ? -c[k] : Rational(0));
    return Poly(std::move(out));
  }
  return (p.reflect_s0() - p).divide_exact(Poly{Rational(1), Rational(-2)});
}

Representation::Representation(ParamSet t)
    : t_(std::move(t)),
      q0_(Poly{t_.c(), Rational(-1)} * Poly{t_.d(), Rational(-1)}),
      q1_(Poly{t_.a(), Rational(1)} * Poly{t_.b(), Rational(1)}) {}

Representation Representation::with_c1_shift(const Rational& s) const {
  Representation out(*this);
  out.c1_shift_ = s;
  return out;
}

Poly Representation::T(int i, const Poly& p) const {
  check_index(i);
  if (i == 0) return p * t_.t0() + q0_ * apply_D(0, p);
  Poly out = p * t_.t1() + q1_ * apply_D(1, p);
  if (c1_shift_) out += (p.reflect_s1() - p) * *c1_shift_;
  return out;
}

Poly Representation::U(int i, const Poly& p) const {
  check_index(i);
  if (i == 0) return -T(0, p) - p * Rational(1, 2) + z(p);
  return -T(1, p) - z(p);
}

Poly Representation::C(Sign sign, const Poly& p) const {
  if (t_.t1().is_zero()) throw ZeroParameterError("C_+/- requires t1 != 0");
  Poly t1p = T(1, p);
  Poly out = sign == Sign::plus ? p * t_.t1() + t1p : p * t_.t1() - t1p;
  return out / (Rational(2) * t_.t1());
}

Poly Representation::S(int i, const Poly& p) const {
  check_index(i);
  if (i == 0) return U(1, Y(p)) - Y(U(1, p));
  return T(1, Y(p)) - Y(T(1, p));
}

Poly apply_T(int i, const ParamSet& t, const Poly& p) { return Representation(t).T(i, p); }
Poly apply_U(int i, const ParamSet& t, const Poly& p) { return Representation(t).U(i, p); }
Poly apply_Y(const ParamSet& t, const Poly& p) { return Representation(t).Y(p); }
Poly apply_C(Sign sign, const ParamSet& t, const Poly& p) { return Representation(t).C(sign, p); }
Poly apply_intertwiner(int i, const ParamSet& t, const Poly& p) { return Representation(t).S(i, p); }

Poly apply_polynomial_in(const Poly& q, const Operator& w, const Poly& f) {
  Poly out;
  const auto& c = q.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = w(out) + f * *it;
  return out;
}

}  // namespace wilson
