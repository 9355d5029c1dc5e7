#include "wilson/numeric/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "wilson/errors.hpp"
#include "wilson/numeric/special.hpp"

namespace wilson::numeric {

namespace {

int common_bits(const std::vector<HPComplex>& a, const std::vector<HPComplex>& b) {
  int bits = working_bits(kDefaultPrecisionBits);
  bool first = true;
  for (const auto* list : {&a, &b}) {
    for (const auto& z : *list) {
      bits = first ? z.precision_bits() : std::min(bits, z.precision_bits());
      first = false;
    }
  }
  return bits;
}

std::optional<long> termination_index(const std::vector<HPComplex>& numerators) {
  std::optional<long> best;
  for (const auto& a : numerators) {
    long n = 0;
    if (near_nonpositive_integer(a, n) && (!best || n < *best)) best = n;
  }
  return best;
}

// Ratio t_{k+1}/t_k evaluated in place.
void advance_term(HPComplex& term, const std::vector<HPComplex>& num,
                  const std::vector<HPComplex>& den, long k, int bits) {
  HPComplex top(Rational(1), bits);
  HPComplex bottom(Rational(k + 1), bits);
  Rational kk(k);
  for (const auto& a : num) top *= a + kk;
  for (const auto& b : den) {
    HPComplex f = b + kk;
    if (f.is_zero()) throw PoleError("hypergeometric denominator parameter hits zero at term " +
                                     std::to_string(k));
    bottom *= f;
  }
  term *= top;
  term /= bottom;
}

struct TailEstimate {
  HPComplex value;
  Real error;
};

// Tail sum_{k>=N} t_k for a balanced (p = q+1) series, written as
// t_N * N * h(1/N) with h solving h(u) - R(u)(1+u) H(u) = u, where R is the term
// ratio in u = 1/k and H(u) = sum_j h_j u^j (1+u)^(-j). The coefficient h_{n-1}
// is the first unknown entering order n, with multiplier (n + s' - 2).
TailEstimate asymptotic_tail(const HPComplex& t_n, long n_terms, const std::vector<HPComplex>& num,
                             const std::vector<HPComplex>& den, int bits) {
  constexpr int kOrder = 48;
  const HPComplex zero(bits);
  std::vector<HPComplex> ratio(kOrder + 1, zero);
  ratio[0] = HPComplex(Rational(1), bits);
  for (const auto& a : num) {
    for (int i = kOrder; i >= 1; --i) ratio[i] += ratio[i - 1] * a;
  }
  std::vector<HPComplex> lower = den;
  lower.emplace_back(Rational(1), bits);
  HPComplex s_prime(bits);
  for (const auto& b : lower) s_prime += b;
  for (const auto& a : num) s_prime -= a;
  for (const auto& b : lower) {
    for (int i = 1; i <= kOrder; ++i) ratio[i] -= b * ratio[i - 1];
  }
  // S(u) = R(u) (1 + u)
  std::vector<HPComplex> s_series(kOrder + 1, zero);
  for (int i = 0; i <= kOrder; ++i) {
    s_series[i] = ratio[i];
    if (i > 0) s_series[i] += ratio[i - 1];
  }

  std::vector<HPComplex> h(kOrder, zero);
  std::vector<HPComplex> big_h(kOrder + 1, zero);
  for (int n = 1; n <= kOrder; ++n) {
    HPComplex r(bits);
    for (int m = 0; m <= n; ++m) r -= s_series[m] * big_h[n - m];
    HPComplex rhs = (n == 1 ? HPComplex(Rational(1), bits) : zero) - r;
    HPComplex divisor = s_prime + Rational(n - 2);
    if (divisor.is_zero()) throw DivergenceError("degenerate tail expansion");
    h[n - 1] = rhs / divisor;
    // add h_{n-1} u^{n-1} (1+u)^{-(n-1)}
    const long j = n - 1;
    Real binom(1L, bits);
    for (int l = 0; j + l <= kOrder; ++l) {
      big_h[j + l] += h[j] * binom;
      binom *= -(j + l);
      binom /= static_cast<long>(l + 1);
    }
  }

  const Real inv_n = Real(1L, bits) / Real(n_terms, bits);
  HPComplex sum(bits);
  Real power(1L, bits);
  Real previous(bits);
  Real error(bits);
  bool have_previous = false;
  for (int j = 0; j < kOrder; ++j) {
    Real magnitude = abs(h[j]) * power;
    if (have_previous && j >= 2 && magnitude > previous) {
      error = magnitude;
      break;
    }
    sum += h[j] * power;
    previous = magnitude;
    have_previous = true;
    error = magnitude;
    power *= inv_n;
  }
  HPComplex prefactor = t_n * Real(n_terms, bits);
  Real scale = abs(prefactor);
  return {prefactor * sum, error * scale};
}

}  // namespace

SeriesResult hyp_pfq_unit(const std::vector<HPComplex>& numerators,
                          const std::vector<HPComplex>& denominators,
                          const SeriesOptions& options) {
  const int bits = common_bits(numerators, denominators);
  const Real eps = ldexp(Real(1L, bits), -(bits - 4));

  if (auto stop = termination_index(numerators)) {
    // Stop at the last term before the vanishing numerator factor.
    HPComplex sum(bits);
    HPComplex term(Rational(1), bits);
    for (long k = 0; k <= *stop; ++k) {
      sum += term;
      if (k < *stop) advance_term(term, numerators, denominators, k, bits);
    }
    return {sum, *stop + 1, Real(bits)};
  }

  for (const auto& b : denominators) {
    long n = 0;
    if (near_nonpositive_integer(b, n)) {
      throw PoleError("hypergeometric denominator parameter at nonpositive integer -" +
                      std::to_string(n));
    }
  }

  const long p = static_cast<long>(numerators.size());
  const long q = static_cast<long>(denominators.size());
  if (p > q + 1) throw DivergenceError("pFq at unit argument diverges for p > q+1");

  Real balance(bits);
  for (const auto& b : denominators) balance += b.real();
  for (const auto& a : numerators) balance -= a.real();
  if (p == q + 1 && balance.sign() <= 0) {
    throw DivergenceError("balance Re(sum den - sum num) = " + balance.str(8) + " is not positive");
  }

  double largest = 1.0;
  for (const auto* list : {&numerators, &denominators}) {
    for (const auto& z : *list) largest = std::max(largest, abs(z).to_double());
  }

  HPComplex sum(bits);
  HPComplex term(Rational(1), bits);
  Real largest_partial(bits);
  long checkpoint = 32;
  while (checkpoint < 6.0 * largest) checkpoint *= 2;

  for (long k = 0; k < options.max_terms; ++k) {
    sum += term;
    largest_partial = max(largest_partial, abs(sum));
    advance_term(term, numerators, denominators, k, bits);
    const long used = k + 1;
    if (p < q + 1) {
      // Factorially convergent: stop once the terms are negligible and shrinking.
      Real mag = abs(term);
      if (used > 2 * largest && mag * Real(2L, bits) <
                                    Real(options.tol, bits) * max(abs(sum), Real(1e-300, bits))) {
        return {sum, used, mag * Real(2L, bits)};
      }
      continue;
    }
    if (used == checkpoint) {
      TailEstimate tail = asymptotic_tail(term, used, numerators, denominators, bits);
      HPComplex total = sum + tail.value;
      Real rounding = largest_partial * eps * Real(used, bits);
      Real bound = tail.error + rounding;
      if (bound <= Real(options.tol, bits) * abs(total)) return {total, used, bound};
      checkpoint *= 2;
    }
  }
  throw ConvergenceBudgetError("hypergeometric series did not converge within " +
                               std::to_string(options.max_terms) + " terms");
}

Rational hyp_pfq_unit(const std::vector<Rational>& numerators,
                      const std::vector<Rational>& denominators) {
  std::optional<long> stop;
  for (const auto& a : numerators) {
    if (a.is_integer() && a.sign() <= 0) {
      long n = -a.numerator().get_si();
      if (!stop || n < *stop) stop = n;
    }
  }
  if (!stop) throw DivergenceError("exact hypergeometric sum requires a terminating series");
  Rational sum(0);
  Rational term(1);
  for (long k = 0; k <= *stop; ++k) {
    sum += term;
    if (k == *stop) break;
    Rational top(1);
    Rational bottom(k + 1);
    for (const auto& a : numerators) top *= a + Rational(k);
    for (const auto& b : denominators) {
      Rational f = b + Rational(k);
      if (f.is_zero()) {
        throw PoleError("hypergeometric denominator parameter hits zero at term " +
                        std::to_string(k));
      }
      bottom *= f;
    }
    term *= top / bottom;
  }
  return sum;
}

}  // namespace wilson::numeric
