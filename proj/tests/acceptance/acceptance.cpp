// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wilson/daha/relations.hpp"
#include "wilson/function/calf.hpp"
#include "wilson/function/phi.hpp"
#include "wilson/polys/checks.hpp"
#include "wilson/transform/symmetric.hpp"

using wilson::HPComplex;
using wilson::ParamSet;
using wilson::Poly;
using wilson::Rational;
using wilson::WeightVariant;
using wilson::WilsonBasis;

namespace {

constexpr int kBits = wilson::numeric::working_bits(128);

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = "failed: " + what;
    ok = ok && cond;
  }
  void within(double value, double tol, const std::string& what) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2e > %.0e)", value, tol);
    require(value <= tol, what + buf);
  }
};

HPComplex at(double im) { return HPComplex(0.0, im, kBits); }

double rel(const HPComplex& x, const HPComplex& y) {
  return wilson::numeric::relative_difference(x, y);
}

Poly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) {
    c.emplace_back(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 5) + 1);
  }
  if (c.back().is_zero()) c.back() = Rational(1);
  return Poly(c);
}

Rational tau_sigma_ratio(const ParamSet& t, int m) {
  const int n = (m + 1) / 2;
  const Rational r =
      oracle::rising(t.a() + Rational(1) - t.d(), n) / oracle::rising(t.b() + t.c(), n);
  return n % 2 == 0 ? r : -r;
}

Outcome algebra() {
  Outcome o;
  auto sets = oracle::random_admissible(2024, 5);
  sets.insert(sets.begin(), oracle::canonical());
  for (const auto& t : sets) {
    const auto report = wilson::verify_relations(t, 20);
    for (const auto& c : report.checks) o.require(c.passed, c.name + " for " + t.str());
  }
  // The operators themselves against their pointwise definition.
  const ParamSet t = oracle::canonical();
  const wilson::Representation rep(t);
  for (int k = 0; k <= 20; k += 5) {
    const Poly p = Poly::monomial(k);
    oracle::Fn f = [&](const Rational& x) { return p(x); };
    for (int i = 0; i <= 1; ++i) {
      const Rational x(3, 7);
      o.require(rep.T(i, p)(x) == oracle::T(i, t, f, x),
                "T_i pointwise at degree " + std::to_string(k));
    }
  }
  o.detail = o.ok ? "canonical + 5 random sets, deg <= 20" : o.detail;
  return o;
}

Outcome eigen() {
  Outcome o;
  const ParamSet t = oracle::canonical();
  const auto basis = WilsonBasis::of(t);
  for (int m = 0; m <= 40; ++m) {
    const Poly p = basis->p(m);
    o.require(p.degree() == m && p.is_monic(), "monic p_" + std::to_string(m));
    o.require(basis->representation().Y(p) == p * oracle::gamma(t, m), "Y p_" + std::to_string(m));
  }
  for (int m = 0; m <= 20; ++m) {
    o.require(wilson::nonsymmetric_wilson_rodriguez(t, m) == basis->p(m),
              "Rodriguez m = " + std::to_string(m));
  }
  for (int m = 0; m <= 10; ++m) {
    o.require(basis->p(m).coefficients() == oracle::eigenpolynomial(t, m, oracle::gamma(t, m)),
              "independent eigen-solve m = " + std::to_string(m));
  }
  if (o.ok) o.detail = "m <= 40, Rodriguez m <= 20";
  return o;
}

Outcome evaluation() {
  Outcome o;
  const ParamSet t = oracle::canonical();
  const auto basis = WilsonBasis::of(t);
  const Rational minus_x0 = -(t.t1() + t.u1());
  for (int m = 0; m <= 20; ++m) {
    o.require(wilson::evaluation_at_minus_x0(t, m) == basis->p(m)(minus_x0),
              "m = " + std::to_string(m));
  }
  const Rational pinned(1749407, 999600);
  o.require(oracle::eval(oracle::eigenpolynomial(t, 2, oracle::gamma(t, 2)), minus_x0) == pinned,
            "oracle p_2(-x0)");
  o.require(wilson::evaluation_at_minus_x0(t, 2) == pinned, "p_2(-x0) = 1749407/999600");
  if (o.ok) o.detail = "m <= 20, p_2(-x0) = 1749407/999600";
  return o;
}

Outcome duality() {
  Outcome o;
  const ParamSet t = oracle::canonical();
  for (int m = 0; m <= 12; ++m) {
    for (int n = 0; n <= 12; ++n)
      o.require(wilson::check_duality(t, m, n).holds,
                "m,n = " + std::to_string(m) + "," + std::to_string(n));
  }
  if (o.ok) o.detail = "m, n <= 12";
  return o;
}

Outcome orthogonality() {
  Outcome o;
  const ParamSet t = oracle::canonical();
  const auto basis = WilsonBasis::of(t);
  wilson::BilinearOptions q;
  q.method = wilson::BilinearMethod::quadrature;
  q.tol = 1e-12;
  q.bits = kBits;
  const HPComplex one = wilson::bilinear_form(t, Poly(1), Poly(1), q);
  o.within(std::abs(one.real().to_double() / oracle::unit_norm_double(t) - 1.0), 1e-8,
           "<1,1> against the Gamma product");
  std::vector<HPComplex> diag;
  for (int m = 0; m <= 6; ++m)
    diag.push_back(wilson::bilinear_form(t, basis->p(m), basis->p(m), q));
  double worst_off = 0.0, worst_norm = 0.0;
  for (int m = 0; m <= 6; ++m) {
    for (int n = m + 1; n <= 6; ++n) {
      const double scale = std::sqrt(wilson::numeric::abs(diag[m]).to_double() *
                                     wilson::numeric::abs(diag[n]).to_double());
      wilson::BilinearOptions qo = q;
      qo.abs_floor = scale;
      worst_off = std::max(
          worst_off,
          wilson::numeric::abs(wilson::bilinear_form(t, basis->p(m), basis->p(n), qo)).to_double() /
              scale);
    }
    const Poly e = basis->E(m);
    const HPComplex ratio = wilson::bilinear_form(t, e, e, q) / one;
    // w(-gamma_0)/w(-gamma_m) from the Gamma display of the weights
    const HPComplex expect = wilson::weight_w(t, 0, WeightVariant::full, kBits) /
                             wilson::weight_w(t, m, WeightVariant::full, kBits);
    worst_norm = std::max(worst_norm, rel(ratio, expect));
  }
  o.within(worst_off, 1e-8, "off-diagonal");
  o.within(worst_norm, 1e-8, "norm ratios");
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "m,n <= 6, off-diagonal %.1e, norms %.1e", worst_off,
                  worst_norm);
    o.detail = buf;
  }
  return o;
}

Outcome inversion() {
  Outcome o;
  const ParamSet t = oracle::canonical();
  for (int k = 0; k <= 12; ++k) {
    o.require(wilson::check_G_after_F(t, Poly::monomial(k)).holds(), "G F x^" + std::to_string(k));
    o.require(wilson::check_F_after_G(t, wilson::FiniteSpectralFunction::indicator(k)).holds(),
              "F G 1_" + std::to_string(k));
  }
  for (int n = 0; n <= 6; ++n) {
    const auto s = wilson::symmetric_transform_suite(
        t, Poly::monomial(2 * n), Poly{Rational(1), Rational(0), Rational(1, 2)});
    o.require(s.holds(), "symmetric x^" + std::to_string(2 * n));
  }
  if (o.ok) o.detail = "x^k and 1_m for k, m <= 12; symmetric x^2n, n <= 6";
  return o;
}

Outcome plancherel() {
  Outcome o;
  const ParamSet t = oracle::canonical();
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Poly p = random_poly(rng, static_cast<int>(rng() % 7));
    const Poly q = random_poly(rng, static_cast<int>(rng() % 7));
    const auto r = wilson::plancherel_check(t, p, q, true);
    o.require(r.exact_F_holds && r.exact_G_holds, "exact pair " + std::to_string(i));
    worst = std::max({worst, r.numeric_F_error, r.numeric_G_error});
  }
  o.within(worst, 1e-8, "numeric Plancherel");
  if (o.ok) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "10 random pairs, numeric %.1e", worst);
    o.detail = buf;
  }
  return o;
}

Outcome difference_equation() {
  Outcome o;
  const ParamSet t = oracle::canonical();
  const Rational total = t.a() + t.b() + t.c() + t.d() - Rational(1);
  for (int n = 0; n <= 6; ++n) {
    const Poly e = wilson::renormalized_E_plus(t, n);
    oracle::Fn f = [&](const Rational& x) { return e(x); };
    o.require(wilson::check_l_eigen(t, n), "L eigenvalue n = " + std::to_string(n));
    for (const Rational& x : {Rational(1, 3), Rational(-7, 5)}) {
      o.require(oracle::wilson_difference(t, f, x) == Rational(n) * (Rational(n) + total) * e(x),
                "explicit difference form");
    }
    o.require(wilson::check_recurrence(t, n), "recurrence n = " + std::to_string(n));
  }
  for (int n = 0; n <= 10; ++n) {
    const Poly e = wilson::renormalized_E_plus(t, n);
    for (int j = 0; j <= n; ++j) {
      const Rational x(2 * j + 1, 5);
      o.require(e(x) == oracle::wilson_4f3(t, n, x), "4F3 n = " + std::to_string(n));
    }
  }
  if (o.ok) o.detail = "n <= 6, 4F3 n <= 10";
  return o;
}

Outcome wilson_function() {
  Outcome o;
  const ParamSet t = oracle::canonical();
  wilson::PhiOptions phi;
  phi.bits = kBits;
  const std::vector<HPComplex> grid = {at(0.2), at(0.6), at(1.0), HPComplex(0.15, 0.4, kBits)};
  o.within(wilson::check_wilson_duality(t, grid, grid, phi), 1e-8, "duality");
  double reduction = 0.0;
  for (int m = 0; m <= 4; ++m)
    reduction = std::max(reduction, wilson::check_polynomial_reduction(t, m, grid, phi));
  o.within(reduction, 1e-8, "polynomial reduction");
  const double a = t.a().to_double(), b = t.b().to_double(), c = t.c().to_double(),
               d = t.d().to_double();
  const double constant = std::tgamma(1 - a - d) / (std::tgamma(a + b) * std::tgamma(a + c));
  o.within(std::abs(wilson::reduction_constant(t, kBits).real().to_double() / constant - 1.0),
           1e-12, "reduction constant");
  wilson::ThetaOptions theta;
  theta.bits = kBits;
  double pairing = 0.0;
  for (int n = 0; n <= 1; ++n)
    pairing = std::max(pairing, wilson::check_phi_pairing(t, n, at(0.6), theta).error);
  o.within(pairing, 1e-8, "phi pairing");
  double eigen = 0.0;
  for (const auto& x : {at(0.3), HPComplex(0.1, 0.5, kBits)}) {
    eigen = std::max(eigen, wilson::check_phi(t, x, at(0.7), phi).eigen_error);
  }
  o.within(eigen, 1e-8, "L eigencheck");
  if (o.ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "duality, reduction %.1e, pairing %.1e, L %.1e", reduction,
                  pairing, eigen);
    o.detail = buf;
  }
  return o;
}

Outcome nonpolynomial_transform() {
  Outcome o;
  const ParamSet t = oracle::canonical();
  const Rational ab = t.a() + t.b();
  for (int m = 0; m <= 8; ++m) {
    o.require(wilson::calF_basis_ratio(t, m) == ab / tau_sigma_ratio(t, m),
              "Pochhammer ratio m = " + std::to_string(m));
    o.require(rel(wilson::gaussian_ratio_tau_sigma_tau_numeric(t, m, kBits),
                  HPComplex(Rational(1) / tau_sigma_ratio(t, m), kBits)) < 1e-30,
              "Gamma ratio m = " + std::to_string(m));
  }
  const auto report = wilson::calF_exact_suite(t, 8);
  o.require(report.exact_inversion_holds, "F_sigma F = (a+b)^2 on the basis");
  o.require(report.plancherel_holds, "Plancherel on ratios");
  o.require(report.basis_ratios_hold, "basis ratios");
  // The dual side of the canonical set has b~ < 0, so the quadrature route
  // runs on a set where all four twists allow quadrature.
  const ParamSet s = oracle::second_set();
  wilson::ThetaOptions theta;
  theta.bits = kBits;
  const auto inv = wilson::calF_numeric_inversion(s, Poly{Rational(1, 3), Rational(1)},
                                                  {at(0.3), at(0.7)}, false, theta);
  o.within(inv.error, 1e-6, "F_sigma F by quadrature");
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "ratios m <= 8 exact; quadrature route %.1e", inv.error);
    o.detail = buf;
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 = none stated
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "algebra relations", 10, algebra},
      {2, "eigen-structure", 30, eigen},
      {3, "evaluation formulas", 0, evaluation},
      {4, "duality", 0, duality},
      {5, "orthogonality and norms", 120, orthogonality},
      {6, "transform inversion", 0, inversion},
      {7, "Plancherel", 0, plancherel},
      {8, "difference equation and recurrence", 0, difference_equation},
      {9, "Wilson function suite", 300, wilson_function},
      {10, "non-polynomial transform", 0, nonpolynomial_transform},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    std::printf("criterion %2d %-36s %s  [%s; %.1f s]\n", c.id, c.title, o.ok ? "PASS" : "FAIL",
                o.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
