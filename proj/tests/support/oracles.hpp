#pragma once

// Independent reference computations for the tests. Everything here works from
// the defining formulas pointwise, without the library's polynomial operators,
// eigen-solver or closed forms.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "wilson/daha/param_set.hpp"
#include "wilson/daha/poly.hpp"

namespace oracle {

using wilson::ParamSet;
using wilson::Poly;
using wilson::Rational;

using Fn = std::function<Rational(const Rational&)>;

// (T_0 f)(x) = t0 f(x) + (c-x)(d-x)/(1-2x) (f(1-x) - f(x))
// (T_1 f)(x) = t1 f(x) + (a+x)(b+x)/(2x) (f(-x) - f(x))
Rational T(int i, const ParamSet& t, const Fn& f, const Rational& x);
Rational Y(const ParamSet& t, const Fn& f, const Rational& x);

Rational eval(const std::vector<Rational>& coefficients, const Rational& x);

// Monic eigenpolynomial of Y with eigenvalue gamma, found from the linear
// system (Y - gamma) p = 0 at deg + 1 sample points. Returns coefficients
// in increasing degree.
std::vector<Rational> eigenpolynomial(const ParamSet& t, int degree, const Rational& gamma);

// gamma_2n = t0+t1+n, gamma_(2n-1) = -(t0+t1+n)
Rational gamma(const ParamSet& t, int m);

Rational rising(const Rational& x, int n);

// Wilson's 4F3(-n, n+a+b+c+d-1, a+x, a-x; a+b, a+c, a+d; 1), summed term by term.
Rational wilson_4f3(const ParamSet& t, int n, const Rational& x);

// Right side of the Wilson difference equation,
// B(x)(f(x+1) - f(x)) + B(-x)(f(x-1) - f(x)), B(x) = (a+x)(b+x)(c+x)(d+x)/(2x(2x+1)).
Rational wilson_difference(const ParamSet& t, const Fn& f, const Rational& x);

// Gamma(a+b+1)Gamma(a+c)Gamma(a+d)Gamma(b+c)Gamma(b+d)Gamma(c+d)/Gamma(a+b+c+d) in
// double precision through std::lgamma; requires all arguments positive.
double unit_norm_double(const ParamSet& t);

// Random rational parameter sets passing exact_ok().
std::vector<ParamSet> random_admissible(std::uint64_t seed, int count);

ParamSet canonical();
// All of t, t^tau, t^sigma and t^{sigma tau} allow quadrature on iR.
ParamSet second_set();

}  // namespace oracle
