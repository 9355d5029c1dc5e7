#include <cmath>

#include "doctest.h"
#include "wilson/errors.hpp"
#include "wilson/numeric/hypergeometric.hpp"
#include "wilson/numeric/quadrature.hpp"
#include "wilson/numeric/rational.hpp"
#include "wilson/numeric/special.hpp"

using namespace wilson::numeric;
using wilson::numeric::Rational;

namespace {

constexpr int kBits = working_bits(128);

double rel(const HPComplex& x, const HPComplex& y) { return relative_difference(x, y); }

HPComplex from_double(double v) { return HPComplex(v, 0.0, kBits); }

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("-8657/31164") == Rational(-8657, 31164));
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), wilson::ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), wilson::ParseError);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("real parsing keeps the requested precision") {
  const Real x = Real::parse("0.1", 200);
  CHECK(x.precision() == 200);
  CHECK(std::abs(x.to_double() - 0.1) < 1e-17);
  CHECK_THROWS_AS(Real::parse("0.1q", 64), wilson::ParseError);
}

TEST_CASE("Gamma against std::lgamma and reflection") {
  for (double x : {0.3, 1.7, 4.25, 11.5}) {
    const HPComplex g = gamma(from_double(x));
    CHECK(std::abs(std::log(g.real().to_double()) - std::lgamma(x)) < 1e-13);
  }
  // Gamma(1/2)^2 = pi
  const HPComplex half(Rational(1, 2), kBits);
  const HPComplex g = gamma(half);
  CHECK(rel(g * g, HPComplex(pi(kBits))) < 1e-40);
  // Gamma(z) Gamma(1-z) = pi / sin(pi z) off the real axis
  const HPComplex z(0.3, 0.8, kBits);
  const HPComplex lhs = gamma(z) * gamma(HPComplex(Rational(1), kBits) - z);
  const HPComplex rhs = HPComplex(pi(kBits)) / sin(z * pi(kBits));
  CHECK(rel(lhs, rhs) < 1e-40);
  CHECK_THROWS_AS(log_gamma(HPComplex(Rational(-2), kBits)), wilson::PoleError);
  CHECK(rgamma(HPComplex(Rational(-3), kBits)).real().is_zero());
}

TEST_CASE("Pochhammer symbols") {
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-2), 3) == Rational(0));
  CHECK(pochhammer(Rational(5), 0) == Rational(1));
}

TEST_CASE("non-terminating series at unity matches Gauss's sum") {
  // 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)), here in doubles.
  const double a = 0.3, b = 0.45, c = 1.9;
  const double expect =
      std::exp(std::lgamma(c) + std::lgamma(c - a - b) - std::lgamma(c - a) - std::lgamma(c - b));
  SeriesOptions opts;
  opts.tol = 1e-14;
  const SeriesResult r = hyp_pfq_unit({from_double(a), from_double(b)}, {from_double(c)}, opts);
  CHECK(std::abs(r.value.real().to_double() / expect - 1.0) < 1e-12);
}

TEST_CASE("terminating series are exact") {
  // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
  const Rational b(2, 7), c(9, 5);
  for (int n = 0; n <= 6; ++n) {
    const Rational value =
        hyp_pfq_unit(std::vector<Rational>{Rational(-n), b}, std::vector<Rational>{c});
    CHECK(value == pochhammer(c - b, n) / pochhammer(c, n));
  }
  CHECK_THROWS_AS(
      hyp_pfq_unit(std::vector<Rational>{Rational(1, 2)}, std::vector<Rational>{Rational(3, 2)}),
      wilson::DivergenceError);
}

TEST_CASE("imaginary-axis quadrature") {
  // (1/2 pi i) int_{iR} exp(x^2) dx = (1/2pi) int exp(-y^2) dy = 1 / (2 sqrt(pi))
  QuadratureOptions opts;
  opts.decay_rate = 1.0;
  opts.tol = 1e-20;
  const auto r = integrate_imaginary_axis([](const HPComplex& x) { return exp(x * x); }, opts);
  const HPComplex expect = HPComplex(Rational(1, 2), kBits) / sqrt(HPComplex(pi(kBits)));
  CHECK(rel(r.value, expect) < 1e-18);

  // Gamma(1/2 +- x) on the axis: (1/2pi) int pi / cosh(pi y) dy = 1/2
  opts.decay_rate = M_PI;
  opts.scale = 0.5;
  const auto g = integrate_imaginary_axis(
      [](const HPComplex& x) {
        const HPComplex half(Rational(1, 2), x.precision_bits());
        return gamma(half + x) * gamma(half - x);
      },
      opts);
  CHECK(rel(g.value, HPComplex(Rational(1, 2), kBits)) < 1e-18);
}
