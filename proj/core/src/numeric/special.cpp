#include "wilson/numeric/special.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "wilson/errors.hpp"

namespace wilson::numeric {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};
std::vector<Rational> stirling_table{Rational(0)};

void extend_bernoulli(int n) {
  // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
  while (static_cast<int>(bernoulli_table.size()) <= n) {
    long m = static_cast<long>(bernoulli_table.size());
    mpq_class sum = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (long k = 0; k < m; ++k) {
      sum += mpq_class(binom) * bernoulli_table[k].get();
      binom *= (m + 1 - k);
      binom /= (k + 1);
    }
    bernoulli_table.emplace_back(mpq_class(-sum / (m + 1)));
  }
}

Real log_two_pi_half(int bits) {
  Real two_pi = pi(bits);
  two_pi *= 2L;
  Real out = log(two_pi);
  out /= 2L;
  return out;
}

// B_2k / (2k (2k-1))
Rational stirling_coefficient(int k) {
  std::lock_guard lock(bernoulli_mutex);
  extend_bernoulli(2 * k);
  while (static_cast<int>(stirling_table.size()) <= k) {
    long j = static_cast<long>(stirling_table.size());
    stirling_table.push_back(bernoulli_table[2 * j] / Rational(2 * j * (2 * j - 1)));
  }
  return stirling_table[k];
}

}  // namespace

Rational bernoulli(int n) {
  std::lock_guard lock(bernoulli_mutex);
  extend_bernoulli(n);
  return bernoulli_table[n];
}

bool near_nonpositive_integer(const HPComplex& z, long& n) {
  int bits = z.precision_bits();
  Real tol = ldexp(Real(1L, bits), -(bits - 12));
  Real nearest = round_nearest(z.real());
  if (nearest.sign() > 0) return false;
  Real scale = max(Real(1L, bits), abs(nearest));
  if (abs(z.imag()) > tol * scale) return false;
  if (abs(z.real() - nearest) > tol * scale) return false;
  n = -mpfr_get_si(nearest.get(), MPFR_RNDN);
  return true;
}

HPComplex log_gamma(const HPComplex& z) {
  const int out_bits = z.precision_bits();
  if (z.imag().is_zero() && z.real().is_integer() && z.real().sign() <= 0) {
    throw PoleError("log_gamma at nonpositive integer " + z.real().str(10));
  }
  const int bits = out_bits + 20;
  HPComplex w = z.with_precision(bits);

  // Shift until Re w >= 1 and |w| >= R so that the Stirling series is accurate.
  const double radius = std::max(12.0, 0.25 * bits);
  double re = w.real().to_double();
  double im = w.imag().to_double();
  long shift = 0;
  if (re < 1.0) shift = static_cast<long>(std::ceil(1.0 - re));
  double re_shifted = re + static_cast<double>(shift);
  if (re_shifted * re_shifted + im * im < radius * radius) {
    double need = std::sqrt(radius * radius - im * im) - re_shifted;
    if (need > 0) shift += static_cast<long>(std::ceil(need));
  }

  HPComplex correction(bits);  // sum_{k<shift} log(z+k)
  if (shift > 0) {
    HPComplex product(Rational(1), bits);
    double arg_sum = 0.0;
    HPComplex term = w;
    for (long k = 0; k < shift; ++k) {
      product *= term;
      arg_sum += std::atan2(im, re + static_cast<double>(k));
      term += Rational(1);
    }
    correction = log(product);
    // Restore the branch: the imaginary part must equal the sum of the arguments.
    Real two_pi = pi(bits);
    two_pi *= 2L;
    double turns = std::round((arg_sum - correction.imag().to_double()) / two_pi.to_double());
    if (turns != 0.0) {
      correction += HPComplex(Real(bits), two_pi * Real(static_cast<long>(turns), bits));
    }
    w = term;
  }

  // Stirling: (w-1/2) log w - w + log(2 pi)/2 + sum B_2k / (2k(2k-1) w^(2k-1))
  HPComplex log_w = log(w);
  HPComplex result = (w - Rational(1, 2)) * log_w - w;
  result += HPComplex(log_two_pi_half(bits));
  HPComplex inv_w = HPComplex(Rational(1), bits) / w;
  HPComplex inv_w2 = inv_w * inv_w;
  HPComplex power = inv_w;
  Real eps = ldexp(Real(1L, bits), -bits);
  Real scale = max(abs(result), Real(1L, bits));
  for (int k = 1; k < 400; ++k) {
    HPComplex term = power * stirling_coefficient(k);
    result += term;
    if (abs(term) < eps * scale) break;
    power *= inv_w2;
  }
  result -= correction;
  return result.with_precision(out_bits);
}

HPComplex gamma(const HPComplex& z) { return exp(log_gamma(z)); }

HPComplex rgamma(const HPComplex& z) {
  const int bits = z.precision_bits();
  if (z.imag().is_zero() && z.real().is_integer() && z.real().sign() <= 0) {
    return HPComplex(bits);
  }
  if (z.real() < Real(0.5, bits)) {
    // 1/Gamma(z) = Gamma(1-z) sin(pi z) / pi, smooth through the poles.
    HPComplex one_minus = HPComplex(Rational(1), bits + 10) - z.with_precision(bits + 10);
    HPComplex s = sin(z.with_precision(bits + 10) * pi(bits + 10));
    HPComplex out = exp(log_gamma(one_minus)) * s / pi(bits + 10);
    return out.with_precision(bits);
  }
  return exp(-log_gamma(z));
}

HPComplex gamma_quotient(const std::vector<HPComplex>& num, const std::vector<HPComplex>& den,
                         int bits) {
  HPComplex log_sum(bits + 10);
  for (const auto& z : den) {
    long n = 0;
    if (near_nonpositive_integer(z, n)) return HPComplex(bits);
    log_sum -= log_gamma(z.with_precision(bits + 10));
  }
  for (const auto& z : num) log_sum += log_gamma(z.with_precision(bits + 10));
  return exp(log_sum).with_precision(bits);
}

Rational pochhammer(const Rational& alpha, int n) {
  Rational out(1);
  Rational factor = alpha;
  for (int k = 0; k < n; ++k) {
    out *= factor;
    factor += Rational(1);
  }
  return out;
}

HPComplex pochhammer(const HPComplex& alpha, int n) {
  HPComplex out(Rational(1), alpha.precision_bits());
  HPComplex factor = alpha;
  for (int k = 0; k < n; ++k) {
    out *= factor;
    factor += Rational(1);
  }
  return out;
}

}  // namespace wilson::numeric
