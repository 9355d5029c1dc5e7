#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wilson/errors.hpp"
#include "wilson/polys/wilson_basis.hpp"
#include "wilson/transform/symmetric.hpp"

using wilson::HPComplex;
using wilson::ParamSet;
using wilson::Poly;
using wilson::Rational;
using wilson::WeightVariant;

namespace {

constexpr int kBits = wilson::numeric::working_bits(128);

// (1/2 pi i) times the contour integral of f around a circle of radius r.
HPComplex residue(const std::function<HPComplex(const HPComplex&)>& f, const HPComplex& at,
                  double r) {
  const int n = 64;
  HPComplex acc(Rational(0), kBits);
  for (int k = 0; k < n; ++k) {
    const double th = 2 * M_PI * k / n;
    const HPComplex e(r * std::cos(th), r * std::sin(th), kBits);
    acc = acc + f(at + e) * e;
  }
  return acc * Rational(1, n);
}

}  // namespace

TEST_CASE("<1,1> closed form against an independent Gamma product") {
  for (const ParamSet& t : {oracle::canonical(), oracle::second_set()}) {
    const double v = wilson::unit_norm(t, WeightVariant::full, kBits).real().to_double();
    CHECK(std::abs(v / oracle::unit_norm_double(t) - 1.0) < 1e-12);
  }
}

TEST_CASE("quadrature <1,1> and orthogonality") {
  const ParamSet t = oracle::canonical();
  wilson::BilinearOptions q;
  q.method = wilson::BilinearMethod::quadrature;
  q.tol = 1e-12;
  const HPComplex one = wilson::bilinear_form(t, Poly(1), Poly(1), q);
  CHECK(std::abs(one.real().to_double() / oracle::unit_norm_double(t) - 1.0) < 1e-10);
  const auto basis = wilson::WilsonBasis::of(t);
  q.abs_floor = std::abs(one.real().to_double());
  const HPComplex off = wilson::bilinear_form(t, basis->p(1), basis->p(3), q);
  CHECK(wilson::numeric::abs(off).to_double() / q.abs_floor < 1e-9);
  // exact expansion route
  CHECK(wilson::bilinear_ratio(t, basis->p(2), basis->p(4)) == Rational(0));
  CHECK(wilson::bilinear_ratio(t, Poly(1), Poly(1)) == Rational(1));
}

TEST_CASE("weights are residues of the dual weight, with the sign flip on the upper branch") {
  const ParamSet t = oracle::canonical();
  const ParamSet s = wilson::dual_sigma(t);
  auto delta = [&](const HPComplex& y) {
    return wilson::weight_Delta(s, y, WeightVariant::full, kBits);
  };
  for (int m = 0; m <= 5; ++m) {
    const HPComplex at(-oracle::gamma(t, m), kBits);
    const HPComplex res = residue(delta, at, 0.01);
    const HPComplex w = wilson::weight_w(t, m, WeightVariant::full, kBits);
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    CHECK(std::abs(w.real().to_double() / res.real().to_double() - sign) < 1e-12);
    // telescoped ratios against the Gamma display
    const HPComplex ratio = w / wilson::weight_w(t, 0, WeightVariant::full, kBits);
    CHECK(wilson::numeric::relative_difference(
              ratio, HPComplex(wilson::relative_weight_w(t, m, WeightVariant::full), kBits)) <
          1e-40);
  }
}

TEST_CASE("weight reflection identities") {
  for (int m = 1; m <= 6; ++m) {
    const auto s = wilson::check_weight_symmetry(oracle::canonical(), m);
    CHECK(s.s0_holds);
    CHECK(s.s1_holds);
  }
}

TEST_CASE("F of x and the G F round trip") {
  const ParamSet t = oracle::canonical();
  const auto f = wilson::forward_F(t, Poly::x());
  // x = p_1 + 8657/31164 p_0
  CHECK(f.values().size() == 2);
  CHECK(f.at(0) == Rational(8657, 31164));
  const auto g = wilson::inverse_G(t, f);
  CHECK(g.poly == Poly::x());
  CHECK(wilson::numeric::relative_difference(
            g.scale, wilson::inversion_constant(t, WeightVariant::full, kBits)) < 1e-30);
  for (int k = 0; k <= 6; ++k) {
    CHECK(wilson::check_G_after_F(t, Poly::monomial(k)).holds());
    CHECK(wilson::check_F_after_G(t, wilson::FiniteSpectralFunction::indicator(k)).holds());
  }
}

TEST_CASE("intertwining with the dual algebra") {
  const ParamSet t = oracle::canonical();
  for (int k = 0; k <= 4; ++k) {
    for (auto g :
         {wilson::PolyGenerator::Y, wilson::PolyGenerator::T1, wilson::PolyGenerator::U1}) {
      CHECK(wilson::check_forward_intertwining(t, g, Poly::monomial(k)));
    }
    for (auto g : {wilson::SpectralGenerator::T0_sigma, wilson::SpectralGenerator::T1_sigma,
                   wilson::SpectralGenerator::multiply}) {
      CHECK(wilson::check_inverse_intertwining(t, g, wilson::FiniteSpectralFunction::indicator(k)));
    }
  }
}

TEST_CASE("Plancherel, exact and by quadrature") {
  const ParamSet t = oracle::canonical();
  const Poly p{Rational(1, 2), Rational(-3), Rational(0), Rational(2, 3)};
  const Poly q{Rational(-1), Rational(1, 4), Rational(5)};
  const auto r = wilson::plancherel_check(t, p, q, true);
  CHECK(r.exact_F_holds);
  CHECK(r.exact_G_holds);
  CHECK(r.numeric_checked);
  CHECK(r.numeric_F_error < 1e-8);
  CHECK(r.numeric_G_error < 1e-8);
}

TEST_CASE("symmetric transform") {
  const ParamSet t = oracle::canonical();
  for (int n = 0; n <= 3; ++n) {
    CHECK(wilson::symmetric_transform_suite(t, Poly::monomial(2 * n),
                                            Poly{Rational(1), Rational(0), Rational(3)})
              .holds());
  }
  CHECK_THROWS_AS(wilson::forward_F_plus(t, Poly::x()), wilson::NotSymmetricError);
}
