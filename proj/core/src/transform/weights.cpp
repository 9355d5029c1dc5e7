#include "wilson/transform/weights.hpp"

#include <string>
#include <unordered_map>

#include "wilson/errors.hpp"
#include "wilson/numeric/special.hpp"
#include "wilson/polys/wilson_basis.hpp"

namespace wilson {

namespace {

using numeric::Real;

// Gamma(z + k) / Gamma(z) for integer k of either sign.
Rational gamma_shift(const Rational& z, long k) {
  Rational out(1);
  if (k >= 0) {
    for (long i = 0; i < k; ++i) out *= z + Rational(i);
  } else {
    for (long i = 1; i <= -k; ++i) {
      Rational f = z - Rational(i);
      if (f.is_zero()) throw DegenerateDenominatorError("Gamma shift through a pole at " + z.str());
      out /= f;
    }
  }
  return out;
}

Rational factorial(long n) {
  Rational out(1);
  for (long i = 2; i <= n; ++i) out *= Rational(i);
  return out;
}

Rational sign_power(long n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

struct Tilde {
  Rational a, b, c, d;
  explicit Tilde(const ParamSet& t)
      : a(t.a_tilde()), b(t.b_tilde()), c(t.c_tilde()), d(t.d_tilde()) {}
};

// w(-a~-n) / w(-a~)
Rational lower_branch(const Tilde& p, long n) {
  Rational r = sign_power(n) / factorial(n);
  r *= gamma_shift(Rational(2) * p.a + Rational(1), n);
  r *= gamma_shift(p.b - p.a, -n) * gamma_shift(p.b + p.a + Rational(1), n);
  r *= gamma_shift(p.c - p.a, -n) * gamma_shift(p.c + p.a, n);
  r *= gamma_shift(p.d - p.a, -n) * gamma_shift(p.d + p.a, n);
  r /= gamma_shift(-Rational(2) * p.a, -2 * n);
  r /= gamma_shift(Rational(1) + Rational(2) * p.a, 2 * n);
  return r;
}

// w(a~+n) / w(a~+1) for n >= 1, with the (-1)^(n-1) sign of the display.
Rational upper_branch(const Tilde& p, long n) {
  const long j = n - 1;
  const Rational one(1);
  Rational r = sign_power(j) / factorial(j);
  r *= gamma_shift(Rational(2) * p.a + one, j);
  r *= gamma_shift(p.b + p.a + one, j) * gamma_shift(p.b - p.a, -j);
  r *= gamma_shift(p.c + p.a + one, j) * gamma_shift(p.c - p.a - one, -j);
  r *= gamma_shift(p.d + p.a + one, j) * gamma_shift(p.d - p.a - one, -j);
  r /= gamma_shift(Rational(2) * p.a + Rational(2), 2 * j);
  r /= gamma_shift(-one - Rational(2) * p.a, -2 * j);
  return r;
}

Rational full_relative(const ParamSet& t, int m) {
  const Tilde p(t);
  const long n = (m + 1) / 2;
  if (m % 2 == 0) return lower_branch(p, n);
  // w(a~+1) / w(-a~): the Gamma(2y)Gamma(1-2y) factors contribute -1.
  const Rational one(1);
  Rational cross = -((p.c + p.a) * (p.d + p.a)) / ((p.c - p.a - one) * (p.d - p.a - one));
  return cross * upper_branch(p, n);
}

Rational plus_relative(const ParamSet& t, int n) {
  const Tilde p(t);
  const Rational two_a = Rational(2) * p.a;
  Rational r = sign_power(n) / factorial(n);
  r *= gamma_shift(two_a, n);
  r *= gamma_shift(p.b + p.a, n) * gamma_shift(p.b - p.a, -n);
  r *= gamma_shift(p.c + p.a, n) * gamma_shift(p.c - p.a, -n);
  r *= gamma_shift(p.d + p.a, n) * gamma_shift(p.d - p.a, -n);
  r /= gamma_shift(two_a, 2 * n) * gamma_shift(-two_a, -2 * n);
  return r;
}

HPComplex c(const Rational& q, int bits) { return HPComplex(q, bits); }

}  // namespace

HPComplex weight_Delta(const ParamSet& t, const HPComplex& x, WeightVariant variant, int bits) {
  const Rational one(1);
  std::vector<HPComplex> num;
  for (const Rational& p : {t.a(), t.b(), t.c(), t.d()}) {
    num.push_back(x + p);
    const bool shifted = variant == WeightVariant::full && (p == t.a() || p == t.b());
    num.push_back(shifted ? (p + one) - x : p - x);
  }
  // 1/(Gamma(2x)Gamma(1-2x)) = sin(2 pi x)/pi; 1/Gamma(+-2x) = -2x sin(2 pi x)/pi.
  const Real pi = numeric::pi(bits);
  HPComplex reciprocal = sin(x * (pi * Real(2L, bits))) / pi;
  if (variant == WeightVariant::plus) reciprocal = reciprocal * x * Rational(-2);
  return numeric::gamma_quotient(num, {}, bits) * reciprocal;
}

Rational relative_weight_w(const ParamSet& t, int m, WeightVariant variant) {
  t.require_exact();
  if (m < 0) throw IndexError("weight index must be nonnegative, got " + std::to_string(m));
  return variant == WeightVariant::full ? full_relative(t, m) : plus_relative(t, m);
}

HPComplex weight_w(const ParamSet& t, int m, WeightVariant variant, int bits) {
  t.require_exact();
  if (m < 0) throw IndexError("weight index must be nonnegative, got " + std::to_string(m));
  const Tilde p(t);
  const Rational one(1), two(2);
  if (variant == WeightVariant::plus) {
    // Res at g = a~+n of Gamma(a~ +- y)Gamma(b~ +- y)Gamma(c~ +- y)Gamma(d~ +- y)/Gamma(+-2y)
    const long n = m;
    const Rational g = p.a + Rational(n);
    HPComplex v = numeric::gamma_quotient(
        {c(p.a + g, bits), c(p.b + g, bits), c(p.b - g, bits), c(p.c + g, bits),
         c(p.c - g, bits), c(p.d + g, bits), c(p.d - g, bits)},
        {c(Rational(n + 1), bits), c(two * g, bits), c(-two * g, bits)}, bits);
    return v * -sign_power(n);
  }
  const long n = (m + 1) / 2;
  if (m % 2 == 0) {
    const Rational g = -p.a - Rational(n);
    HPComplex v = numeric::gamma_quotient(
        {c(p.a + one - g, bits), c(p.b + g, bits), c(p.b + one - g, bits), c(p.c + g, bits),
         c(p.c - g, bits), c(p.d + g, bits), c(p.d - g, bits)},
        {c(one - g - p.a, bits), c(two * g, bits), c(one - two * g, bits)}, bits);
    return v * sign_power(n);
  }
  const Rational g = p.a + Rational(n);
  HPComplex v = numeric::gamma_quotient(
      {c(p.a + g, bits), c(p.b + g, bits), c(p.b + one - g, bits), c(p.c + g, bits),
       c(p.c - g, bits), c(p.d + g, bits), c(p.d - g, bits)},
      {c(g - p.a, bits), c(two * g, bits), c(one - two * g, bits)}, bits);
  return v * sign_power(n - 1);
}

HPComplex unit_norm(const ParamSet& t, WeightVariant variant, int bits) {
  const Rational a = t.a(), b = t.b(), cc = t.c(), d = t.d();
  const Rational first = variant == WeightVariant::full ? a + b + Rational(1) : a + b;
  HPComplex v = numeric::gamma_quotient(
      {c(first, bits), c(a + cc, bits), c(a + d, bits), c(b + cc, bits), c(b + d, bits),
       c(cc + d, bits)},
      {c(a + b + cc + d, bits)}, bits);
  return variant == WeightVariant::full ? v : v * Rational(2);
}

HPComplex inversion_constant(const ParamSet& t, WeightVariant variant, int bits) {
  return unit_norm(t, variant, bits) * weight_w(t, 0, variant, bits);
}

WeightSymmetry check_weight_symmetry(const ParamSet& t, int m) {
  t.require_exact();
  const Tilde p(t);
  const Rational one(1), two(2);
  const Rational g = -gamma_value(t.t0() + t.t1(), m);
  WeightSymmetry out;
  const Rational w = full_relative(t, m);
  // 1 - g = -gamma_(s0 label)
  const int m0 = m % 2 == 0 ? m + 1 : m - 1;
  out.s0_holds = (p.c - g) * (p.d - g) / (one - two * g) * w ==
                 (p.c - one + g) * (p.d - one + g) / (two * g - one) * full_relative(t, m0);
  if (m == 0) {
    out.s1_holds = true;
  } else {
    const int m1 = m % 2 == 0 ? m - 1 : m + 1;
    out.s1_holds = (p.a + g) * (p.b + g) / (two * g) * w ==
                   (p.a - g) * (p.b - g) / (-two * g) * full_relative(t, m1);
  }
  return out;
}

WeightTable::WeightTable(ParamSet t, WeightVariant variant) : t_(std::move(t)), variant_(variant) {
  t_.require_exact();
}

std::shared_ptr<const WeightTable> WeightTable::of(const ParamSet& t, WeightVariant variant) {
  static std::mutex registry_mutex;
  static std::unordered_map<std::string, std::shared_ptr<const WeightTable>> registry;
  const std::string key = t.str() + (variant == WeightVariant::full ? "full" : "plus");
  std::lock_guard lock(registry_mutex);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto table = std::make_shared<const WeightTable>(t, variant);
  registry.emplace(key, table);
  return table;
}

HPComplex WeightTable::base_point_log_weight(int bits) const {
  return log(weight_w(t_, 0, variant_, bits));
}

Rational WeightTable::relative(int m) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  Rational r = relative_weight_w(t_, m, variant_);
  cache_.emplace(m, r);
  return r;
}

}  // namespace wilson
