#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

Rational T(int i, const ParamSet& t, const Fn& f, const Rational& x) {
  const Rational fx = f(x);
  if (i == 0) {
    const Rational one(1);
    return t.t0() * fx + (t.c() - x) * (t.d() - x) / (one - Rational(2) * x) * (f(one - x) - fx);
  }
  return t.t1() * fx + (t.a() + x) * (t.b() + x) / (Rational(2) * x) * (f(-x) - fx);
}

Rational Y(const ParamSet& t, const Fn& f, const Rational& x) {
  return T(0, t, f, x) + T(1, t, f, x);
}

Rational eval(const std::vector<Rational>& coefficients, const Rational& x) {
  Rational out(0);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) out = out * x + *it;
  return out;
}

Rational gamma(const ParamSet& t, int m) {
  const Rational base = t.t0() + t.t1() + Rational((m + 1) / 2);
  return m % 2 == 0 ? base : -base;
}

std::vector<Rational> eigenpolynomial(const ParamSet& t, int degree, const Rational& g) {
  const int rows = degree + 1, cols = degree;
  // Column k holds ((Y - g) x^k)(x_j); the last column is the right side.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (int j = 0; j < rows; ++j) {
    const Rational x = Rational(j + 1, 7) + Rational(1, 13);
    for (int k = 0; k <= degree; ++k) {
      Fn mono = [k](const Rational& y) {
        return wilson::numeric::pow(y, static_cast<unsigned>(k));
      };
      const Rational v = Y(t, mono, x) - g * mono(x);
      if (k < degree)
        m[j][k] = v;
      else
        m[j][cols] = -v;
    }
  }
  int r = 0;
  for (int c = 0; c < cols; ++c, ++r) {
    int pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) throw std::runtime_error("oracle eigenpolynomial: singular system");
    std::swap(m[r], m[pivot]);
    for (int j = 0; j < rows; ++j) {
      if (j == r || m[j][c].is_zero()) continue;
      const Rational f = m[j][c] / m[r][c];
      for (int k = c; k <= cols; ++k) m[j][k] -= f * m[r][k];
    }
  }
  for (int j = r; j < rows; ++j) {
    if (!m[j][cols].is_zero()) throw std::runtime_error("oracle eigenpolynomial: no solution");
  }
  std::vector<Rational> coefficients(degree + 1, Rational(1));
  for (int c = 0; c < cols; ++c) coefficients[c] = m[c][cols] / m[c][c];
  return coefficients;
}

Rational rising(const Rational& x, int n) {
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= x + Rational(i);
  return out;
}

Rational wilson_4f3(const ParamSet& t, int n, const Rational& x) {
  const Rational a = t.a(), b = t.b(), c = t.c(), d = t.d();
  const Rational top = Rational(n) + a + b + c + d - Rational(1);
  Rational sum(0), term(1);
  for (int k = 0; k <= n; ++k) {
    sum += term;
    const Rational kk(k);
    term *= (kk - Rational(n)) * (top + kk) * (a + x + kk) * (a - x + kk);
    term /= (a + b + kk) * (a + c + kk) * (a + d + kk) * (kk + Rational(1));
  }
  return sum;
}

Rational wilson_difference(const ParamSet& t, const Fn& f, const Rational& x) {
  auto B = [&](const Rational& y) {
    return (t.a() + y) * (t.b() + y) * (t.c() + y) * (t.d() + y) /
           (Rational(2) * y * (Rational(2) * y + Rational(1)));
  };
  const Rational fx = f(x), one(1);
  return B(x) * (f(x + one) - fx) + B(-x) * (f(x - one) - fx);
}

double unit_norm_double(const ParamSet& t) {
  const double a = t.a().to_double(), b = t.b().to_double(), c = t.c().to_double(),
               d = t.d().to_double();
  const double lg = std::lgamma(a + b + 1) + std::lgamma(a + c) + std::lgamma(a + d) +
                    std::lgamma(b + c) + std::lgamma(b + d) + std::lgamma(c + d) -
                    std::lgamma(a + b + c + d);
  return std::exp(lg);
}

std::vector<ParamSet> random_admissible(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 11) + 2;
    return Rational(num, den);
  };
  std::vector<ParamSet> out;
  while (static_cast<int>(out.size()) < count) {
    ParamSet t(draw(), draw(), draw(), draw());
    if (t.exact_ok()) out.push_back(t);
  }
  return out;
}

ParamSet canonical() {
  return ParamSet(Rational(2, 3), Rational(1, 5), Rational(3, 5), Rational(1, 7));
}

ParamSet second_set() {
  return ParamSet(Rational(1, 5), Rational(1, 7), Rational(2, 3), Rational(1, 9));
}

}  // namespace oracle
