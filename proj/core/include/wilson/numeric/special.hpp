#pragma once

#include <vector>

#include "wilson/numeric/complex.hpp"
#include "wilson/numeric/rational.hpp"

namespace wilson::numeric {

// Principal branch of log Gamma, analytic off (-inf, 0]. Throws PoleError at
// nonpositive integers.
HPComplex log_gamma(const HPComplex& z);

HPComplex gamma(const HPComplex& z);

// 1/Gamma(z); entire, exactly zero at the poles of Gamma.
HPComplex rgamma(const HPComplex& z);

// prod Gamma(num_i) / prod Gamma(den_j) through log-Gamma sums. Denominator
// poles give zero; numerator poles throw PoleError.
HPComplex gamma_quotient(const std::vector<HPComplex>& num, const std::vector<HPComplex>& den,
                         int bits);

// Rising factorial (alpha)_n = alpha (alpha+1) ... (alpha+n-1).
Rational pochhammer(const Rational& alpha, int n);
HPComplex pochhammer(const HPComplex& alpha, int n);

// Bernoulli number B_n with B_1 = -1/2. Thread-safe cached table.
Rational bernoulli(int n);

// True when z is (within the last few bits) a nonpositive integer; sets n = -z.
bool near_nonpositive_integer(const HPComplex& z, long& n);

}  // namespace wilson::numeric
