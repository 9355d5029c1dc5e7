#include "wilson/polys/wilson_basis.hpp"

#include <string>
#include <unordered_map>

#include "wilson/errors.hpp"
#include "wilson/numeric/special.hpp"

namespace wilson {

using numeric::pochhammer;

int s1_label(int m) {
  if (m < 0) throw IndexResolutionError("s1 label of negative index " + std::to_string(m));
  if (m == 0) return kMinusGamma0Label;
  return m % 2 == 0 ? m - 1 : m + 1;
}

int s0_label(int m) {
  if (m < 0) throw IndexResolutionError("s0 label of negative index " + std::to_string(m));
  return m % 2 == 0 ? m + 1 : m - 1;
}

Rational gamma_value(const Rational& t0_plus_t1, int m) {
  if (m < 0) throw IndexError("spectral index must be nonnegative, got " + std::to_string(m));
  const int n = (m + 1) / 2;
  Rational g = t0_plus_t1 + Rational(n);
  return m % 2 == 0 ? g : -g;
}

WilsonBasis::WilsonBasis(ParamSet t) : t_(std::move(t)), rep_(t_) { t_.require_exact(); }

std::shared_ptr<const WilsonBasis> WilsonBasis::of(const ParamSet& t) {
  static std::mutex registry_mutex;
  static std::unordered_map<std::string, std::shared_ptr<const WilsonBasis>> registry;
  const std::string key = t.str();
  std::lock_guard lock(registry_mutex);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto basis = std::make_shared<const WilsonBasis>(t);
  registry.emplace(key, basis);
  return basis;
}

Rational WilsonBasis::gamma(int m) const {
  auto it = gamma_override_.find(m);
  if (it != gamma_override_.end()) return it->second;
  return gamma_value(t_.t0() + t_.t1(), m);
}

Rational WilsonBasis::x_dual(int m) const { return gamma_value(t_.t1() + t_.u1(), m); }

Poly WilsonBasis::solve(int m) const {
  // Caller holds the mutex. Column k of the matrix of Y is Y x^k.
  while (static_cast<int>(y_columns_.size()) <= m) {
    y_columns_.push_back(rep_.Y(Poly::monomial(static_cast<int>(y_columns_.size()))));
  }
  const Rational eigenvalue = gamma(m);
  std::vector<Rational> v(static_cast<std::size_t>(m) + 1, Rational(0));
  v[static_cast<std::size_t>(m)] = Rational(1);
  for (int k = m - 1; k >= 0; --k) {
    Rational rhs(0);
    for (int j = k + 1; j <= m; ++j) {
      const Rational& vj = v[static_cast<std::size_t>(j)];
      if (!vj.is_zero()) rhs -= y_columns_[static_cast<std::size_t>(j)].coefficient(k) * vj;
    }
    Rational diag = y_columns_[static_cast<std::size_t>(k)].coefficient(k) - eigenvalue;
    if (diag.is_zero()) {
      throw AdmissibilityError("degenerate spectrum: gamma_" + std::to_string(k) +
                               " = gamma_" + std::to_string(m));
    }
    v[static_cast<std::size_t>(k)] = rhs / diag;
  }
  return Poly(std::move(v));
}

Poly WilsonBasis::p(int m) const {
  if (m < 0) throw IndexError("polynomial index must be nonnegative, got " + std::to_string(m));
  std::lock_guard lock(mutex_);
  while (static_cast<int>(cache_.size()) <= m) cache_.push_back(solve(static_cast<int>(cache_.size())));
  return cache_[static_cast<std::size_t>(m)];
}

Rational WilsonBasis::p_at_minus_x0(int m) const { return p(m)(-t_.a()); }

Poly WilsonBasis::E(int label) const {
  if (label == kMinusGamma0Label) return Poly(Rational(1));
  Poly pm = p(label);
  Rational value = pm(-t_.a());
  if (value.is_zero()) {
    throw ZeroEvaluationError("p_" + std::to_string(label) + "(-x0) = 0");
  }
  return pm / value;
}

Rational WilsonBasis::b(int m) const {
  if (m == 0) return t_.t1();
  Rational g = gamma(m);
  if (g.is_zero()) throw DivisionByZeroError("b_m needs gamma_m != 0");
  return (g + t_.t1() + t_.t0()) * (g + t_.t1() - t_.t0()) / (Rational(2) * g) - t_.t1();
}

Poly WilsonBasis::P_plus(int n) const {
  if (n < 0) throw IndexError("P^+ index must be nonnegative");
  if (n == 0) return Poly(Rational(1));
  return p(2 * n) + p(2 * n - 1) * (b(2 * n) - t_.t1());
}

Poly WilsonBasis::P_minus(int n) const {
  if (n < 1) throw IndexError("P^- is defined for n >= 1, got " + std::to_string(n));
  return p(2 * n) + p(2 * n - 1) * (b(2 * n) + t_.t1());
}

std::shared_ptr<WilsonBasis> WilsonBasis::with_gamma_override(int m, const Rational& value) const {
  auto out = std::make_shared<WilsonBasis>(t_);
  out->gamma_override_ = gamma_override_;
  out->gamma_override_[m] = value;
  return out;
}

Rational gamma_val(const ParamSet& t, int m) {
  t.require_exact();
  return gamma_value(t.t0() + t.t1(), m);
}

Poly nonsymmetric_wilson(const ParamSet& t, int m) { return WilsonBasis::of(t)->p(m); }

Poly nonsymmetric_wilson_rodriguez(const ParamSet& t, int m) {
  t.require_exact();
  if (m < 0) throw IndexError("polynomial index must be nonnegative");
  Representation rep(t);
  const int n = m / 2;
  Poly out(Rational(1));
  for (int k = 0; k < n; ++k) out = rep.S(1, rep.S(0, out));
  if (m % 2 == 1) out = rep.S(0, out);
  Rational constant = pochhammer(Rational(2) * (t.t0() + t.t1()) + Rational(1), m);
  // (-1)^n for even m, (-1)^(n+1) for odd m
  const int sign_power = m % 2 == 0 ? n : n + 1;
  if (sign_power % 2 == 1) constant = -constant;
  if (constant.is_zero()) {
    throw ZeroNormalizerError("(2t0+2t1+1)_" + std::to_string(m) + " vanishes");
  }
  return out / constant;
}

Rational t1_coefficient_b(const ParamSet& t, int m) { return WilsonBasis::of(t)->b(m); }

Rational evaluation_at_minus_x0(const ParamSet& t, int m) {
  t.require_exact();
  if (m < 0) throw IndexError("polynomial index must be nonnegative");
  if (m == 0) return Rational(1);
  const Rational a = t.a(), b = t.b(), c = t.c(), d = t.d();
  const Rational s = a + b + c + d;
  const int n = (m + 1) / 2;
  Rational num, den;
  if (m % 2 == 0) {
    num = pochhammer(a + b + Rational(1), n) * pochhammer(a + c, n) * pochhammer(a + d, n);
    den = pochhammer(Rational(n) + s, n);
  } else {
    num = -(pochhammer(a + b + Rational(1), n - 1) * pochhammer(a + c, n) * pochhammer(a + d, n));
    den = pochhammer(Rational(n - 1) + s, n);
  }
  if (den.is_zero()) {
    throw DegenerateDenominatorError("evaluation formula denominator vanishes at m = " +
                                     std::to_string(m));
  }
  return num / den;
}

Rational symmetric_evaluation_at_x0(const ParamSet& t, int n) {
  t.require_exact();
  if (n < 0) throw IndexError("symmetric index must be nonnegative");
  const Rational a = t.a(), b = t.b(), c = t.c(), d = t.d();
  Rational den = pochhammer(Rational(n - 1) + a + b + c + d, n);
  if (den.is_zero()) throw DegenerateDenominatorError("P^+ evaluation denominator vanishes");
  return pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n) / den;
}

Poly renormalized_E(const ParamSet& t, int m) { return WilsonBasis::of(t)->E(m); }

Poly symmetric_P(const ParamSet& t, int n, Sign sign) {
  auto basis = WilsonBasis::of(t);
  return sign == Sign::plus ? basis->P_plus(n) : basis->P_minus(n);
}

Poly renormalized_E_plus(const ParamSet& t, int n) {
  Poly p = symmetric_P(t, n, Sign::plus);
  Rational value = p(t.a());
  if (value.is_zero()) throw ZeroEvaluationError("P^+(x0) = 0");
  return p / value;
}

namespace {

void check_4f3_denominators(const ParamSet& t, int n) {
  const Rational a = t.a();
  for (const Rational& beta : {a + t.b(), a + t.c(), a + t.d()}) {
    if (!pochhammer(beta, n).is_zero()) continue;
    throw DegenerateDenominatorError("4F3 denominator parameter " + beta.str() +
                                     " is a nonpositive integer");
  }
}

}  // namespace

Rational symmetric_E_4f3(const ParamSet& t, int n, const Rational& x) {
  check_4f3_denominators(t, n);
  const Rational a = t.a(), s = t.a() + t.b() + t.c() + t.d();
  Rational sum(0), term(1);
  for (int j = 0; j <= n; ++j) {
    sum += term;
    const Rational k(j);
    term *= (Rational(-n) + k) * (Rational(n) + s - Rational(1) + k) * (a + x + k) * (a - x + k);
    term /= (a + t.b() + k) * (a + t.c() + k) * (a + t.d() + k) * Rational(j + 1);
  }
  return sum;
}

HPComplex symmetric_E_4f3(const ParamSet& t, int n, const HPComplex& x) {
  check_4f3_denominators(t, n);
  const int bits = x.precision_bits();
  const Rational a = t.a(), s = t.a() + t.b() + t.c() + t.d();
  HPComplex sum(bits);
  HPComplex term(Rational(1), bits);
  for (int j = 0; j <= n; ++j) {
    sum += term;
    const Rational k(j);
    Rational exact = (Rational(-n) + k) * (Rational(n) + s - Rational(1) + k) /
                     ((a + t.b() + k) * (a + t.c() + k) * (a + t.d() + k) * Rational(j + 1));
    term = term * ((a + k) + x) * ((a + k) - x) * exact;
  }
  return sum;
}

}  // namespace wilson
