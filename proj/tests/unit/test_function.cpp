#include "doctest.h"
#include "oracles.hpp"
#include "wilson/function/calf.hpp"
#include "wilson/function/phi.hpp"
#include "wilson/polys/wilson_basis.hpp"

using wilson::HPComplex;
using wilson::ParamSet;
using wilson::Poly;
using wilson::Rational;

namespace {

constexpr int kBits = wilson::numeric::working_bits(128);

HPComplex at(double re, double im) { return HPComplex(re, im, kBits); }

double rel(const HPComplex& x, const HPComplex& y) {
  return wilson::numeric::relative_difference(x, y);
}

// (-1)^n (a+1-d)_n / (b+c)_n for m = 2n or 2n-1
Rational tau_sigma_ratio(const ParamSet& t, int m) {
  const int n = (m + 1) / 2;
  const Rational r =
      oracle::rising(t.a() + Rational(1) - t.d(), n) / oracle::rising(t.b() + t.c(), n);
  return n % 2 == 0 ? r : -r;
}

}  // namespace

TEST_CASE("twisted parameter sets") {
  const ParamSet t = oracle::canonical();
  const ParamSet st = wilson::params_sigma_tau(t);
  CHECK(st.t0() == t.u0());
  CHECK(st.u0() == t.u1());
  CHECK(st.u1() == t.t0());
  CHECK(wilson::dual_tau(wilson::dual_sigma(t)).t0() == st.t0());
  const ParamSet ts = wilson::params_tau_sigma(t);
  CHECK(wilson::dual_sigma(wilson::dual_tau(t)).u1() == ts.u1());
}

TEST_CASE("Gaussian ratios: Pochhammer oracle and Gamma values") {
  const ParamSet t = oracle::canonical();
  CHECK(wilson::gaussian_ratio_tau_sigma(t, 2) == Rational(-163, 383));
  for (int m = 0; m <= 16; ++m) {
    CHECK(wilson::gaussian_ratio_tau_sigma(t, m) == tau_sigma_ratio(t, m));
    CHECK(wilson::gaussian_ratio_tau_sigma_tau(t, m) * tau_sigma_ratio(t, m) == Rational(1));
    CHECK(rel(wilson::gaussian_ratio_tau_sigma_numeric(t, m, kBits),
              HPComplex(tau_sigma_ratio(t, m), kBits)) < 1e-40);
  }
}

TEST_CASE("Gaussian poles are flagged") {
  const ParamSet t = oracle::canonical();
  const auto v = wilson::gaussian_G(t, HPComplex(t.d(), kBits) + at(1e-9, 0.0));
  CHECK(v.near_pole);
  CHECK_FALSE(wilson::gaussian_G(t, at(0.1, 0.3)).near_pole);
}

TEST_CASE("conjugation by the Gaussian realizes tau") {
  const auto r =
      wilson::check_gaussian_conjugation(oracle::canonical(), 4, {at(0.0, 0.3), at(0.2, 0.5)});
  CHECK(r.exact_identity_holds);
  CHECK(r.holds(1e-30));
}

TEST_CASE("phi solves the explicit difference equation") {
  const ParamSet t = oracle::canonical();
  const HPComplex x = at(0.0, 0.3), lambda = at(0.0, 0.7);
  auto phi = [&](const HPComplex& y) { return wilson::phi_lambda(t, y, lambda).value; };
  const HPComplex one(Rational(1), kBits), two(Rational(2), kBits);
  const HPComplex a(t.a(), kBits), b(t.b(), kBits), c(t.c(), kBits), d(t.d(), kBits);
  auto A = [&](const HPComplex& y) {
    return (a + y) * (b + y) * (c + y) * (d + y) / (two * y * (two * y + one));
  };
  const HPComplex f = phi(x);
  const HPComplex lhs = -(A(x) * ((one - d + x) / (-d - x) * phi(x + one) - f) +
                          A(-x) * ((one - d - x) / (x - d) * phi(x - one) - f));
  const HPComplex a_tilde(t.a_tilde(), kBits);
  CHECK(rel(lhs, (a_tilde * a_tilde - lambda * lambda) * f) < 1e-25);
  CHECK(rel(wilson::apply_L_to_phi(t, x, lambda), lhs) < 1e-25);

  const auto checks = wilson::check_phi(t, x, lambda);
  CHECK(checks.holds(1e-20));
}

TEST_CASE("Wilson function: duality, reduction, eigenfunction") {
  const ParamSet t = oracle::canonical();
  const std::vector<HPComplex> grid = {at(0.0, 0.25), at(0.1, 0.8)};
  CHECK(wilson::check_wilson_duality(t, grid, grid) < 1e-30);
  for (int m = 0; m <= 3; ++m) CHECK(wilson::check_polynomial_reduction(t, m, grid) < 1e-30);
  const auto e = wilson::check_wilson_eigen(t, at(0.0, 0.3), at(0.0, 0.7));
  CHECK(e.holds(1e-20));
}

TEST_CASE("reduction constant is Gamma(1-a-d) / (Gamma(a+b) Gamma(a+c))") {
  const ParamSet t = oracle::canonical();
  const double a = t.a().to_double(), b = t.b().to_double(), c = t.c().to_double(),
               d = t.d().to_double();
  // 1 - a - d = -7/10, Gamma negative there
  const double expect = std::tgamma(1 - a - d) / (std::tgamma(a + b) * std::tgamma(a + c));
  CHECK(std::abs(wilson::reduction_constant(t, kBits).real().to_double() / expect - 1.0) < 1e-12);
}

TEST_CASE("kernel identity and the symmetric pairing by quadrature") {
  const ParamSet t = oracle::canonical();
  wilson::ThetaOptions o;
  o.tol = 1e-12;
  CHECK(wilson::check_kernel_identity(t, 1, at(0.0, 0.6), o).holds(1e-10));
  CHECK(wilson::check_phi_pairing(t, 1, at(0.0, 0.6), o).holds(1e-10));
}

TEST_CASE("transform F~: routes agree and chi intertwines") {
  const ParamSet t = oracle::canonical();
  const auto basis_tau = wilson::WilsonBasis::of(wilson::dual_tau(t));
  for (int k = 0; k <= 3; ++k) {
    const Poly p = basis_tau->p(k);
    const auto x = wilson::frak_F_exact(t, p, wilson::FrakMethod::composition);
    const auto y = wilson::frak_F_exact(t, p, wilson::FrakMethod::basis);
    CHECK(x.poly == y.poly);
    CHECK(rel(x.scale, y.scale) < 1e-30);
    for (auto g :
         {wilson::ChiGenerator::z, wilson::ChiGenerator::Y_tau, wilson::ChiGenerator::T1_tau}) {
      CHECK(wilson::check_chi_intertwining(t, g, Poly::monomial(k)).holds());
    }
  }
}

TEST_CASE("transform F on the basis") {
  const ParamSet t = oracle::canonical();
  const Rational ab = t.a() + t.b();
  for (int m = 0; m <= 6; ++m) CHECK(wilson::calF_basis_ratio(t, m) == ab / tau_sigma_ratio(t, m));
  // e_{gamma_0^tau} = G_tau maps to (a+b) e^sigma_{gamma_0}
  CHECK(wilson::calF_exact(t, Poly(1)) == Poly(ab));
  const auto report = wilson::calF_exact_suite(t, 6);
  CHECK(report.holds());
}

TEST_CASE("transform F by quadrature against the exact image") {
  const ParamSet t = oracle::canonical();
  const Poly p = wilson::WilsonBasis::of(wilson::dual_tau(t))->E(1);
  const Poly image = wilson::calF_exact(t, p);
  const HPComplex l = at(0.0, 0.5);
  const HPComplex exact = image(l) * wilson::gaussian_G_sigma_tau(t, l).value;
  CHECK(rel(wilson::calF_numeric(t, p, l), exact) < 1e-9);
}
