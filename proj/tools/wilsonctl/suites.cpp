#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "wilson/daha/relations.hpp"
#include "wilson/errors.hpp"
#include "wilson/function/calf.hpp"
#include "wilson/polys/checks.hpp"
#include "wilson/transform/symmetric.hpp"

namespace wilsonctl {

using wilson::HPComplex;
using wilson::ParamSet;
using wilson::Poly;
using wilson::Rational;

namespace {

const std::string kExactOnly = "exact-only mode";

std::string upto(const std::string& what, int n) { return what + " <= " + std::to_string(n); }

// Runs a numeric check; numerical failures become failed records.
Record guarded(const std::string& name, const std::string& anchor, const std::string& grid,
               double tol, const std::function<double()>& residual) {
  try {
    return numeric_record(name, anchor, grid, residual(), tol);
  } catch (const wilson::ToleranceNotMetError& e) {
    return {name, anchor, "numeric", grid, e.what(), "fail"};
  } catch (const wilson::ConvergenceBudgetError& e) {
    return {name, anchor, "numeric", grid, e.what(), "fail"};
  }
}

// Exact check over an index range; the first failing index is the witness.
Record exact_over(const std::string& name, const std::string& anchor, const std::string& label,
                  int lo, int hi, const std::function<bool(int)>& holds) {
  for (int k = lo; k <= hi; ++k) {
    bool ok = false;
    std::string note;
    try {
      ok = holds(k);
    } catch (const wilson::Error& e) {
      note = std::string(": ") + e.what();
    }
    if (!ok)
      return exact_record(name, anchor, upto(label, hi), false,
                          label + " = " + std::to_string(k) + note);
  }
  return exact_record(name, anchor, upto(label, hi), true);
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  const int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) {
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = static_cast<long>(rng() % 4) + 1;
    c.emplace_back(num, den);
  }
  c.back() = c.back().is_zero() ? Rational(1) : c.back();
  return Poly(c);
}

std::vector<Record> algebra_suite(const ParamSet& t, const RunConfig& config) {
  std::vector<Record> rows;
  const auto report = wilson::verify_relations(t, config.max_degree);
  for (const auto& check : report.checks) {
    rows.push_back(exact_record(check.name, "defining relations", upto("deg", check.max_degree),
                                check.passed,
                                check.witness ? "witness " + check.witness->str() : std::string()));
  }
  return rows;
}

std::vector<Record> polynomial_suite(const ParamSet& t, const RunConfig& config,
                                     const Hooks& hooks) {
  std::vector<Record> rows;
  const int top = config.max_index;
  std::shared_ptr<const wilson::WilsonBasis> basis = wilson::WilsonBasis::of(t);
  if (hooks.corrupt_gamma_index) {
    const int m = *hooks.corrupt_gamma_index;
    basis = basis->with_gamma_override(m, basis->gamma(m) + Rational(1, 3));
  }
  const Rational base = t.t0() + t.t1();
  const Rational minus_x0 = -basis->x_dual(0);

  rows.push_back(
      exact_over("Y p_m = gamma_m p_m, p_m monic", "eigenbasis", "m", 0, top, [&](int m) {
        const Poly p = basis->p(m);
        return p.is_monic() && p.degree() == m &&
               basis->representation().Y(p) == p * wilson::gamma_value(base, m);
      }));
  rows.push_back(exact_over(
      "Rodriguez route = triangular route", "Rodriguez formula", "m", 0, std::min(top, 20),
      [&](int m) { return wilson::nonsymmetric_wilson_rodriguez(t, m) == basis->p(m); }));
  rows.push_back(exact_over("p_m(-x0) closed form", "evaluation formula", "m", 0, top, [&](int m) {
    return wilson::evaluation_at_minus_x0(t, m) == basis->p(m)(minus_x0);
  }));
  rows.push_back(exact_over("E(-x_n, gamma_m; t) = E(-gamma_m, x_n; t^sigma)", "duality", "m,n", 0,
                            top, [&](int m) {
                              for (int n = 0; n <= top; ++n) {
                                if (!wilson::check_duality(t, m, n).holds) return false;
                              }
                              return true;
                            }));
  const int small = std::min(top, 8);
  rows.push_back(exact_over("T1 action on p_m", "T1 action", "m", 0, small,
                            [&](int m) { return wilson::check_t1_action(t, m); }));
  rows.push_back(
      exact_over("T1, U1 as operators in gamma", "dual variable action", "m", 0, small,
                 [&](int m) { return wilson::check_dual_variable_action(t, m).holds(); }));
  rows.push_back(exact_over("L E^+_2n = n(n+a+b+c+d-1) E^+_2n", "difference equation", "n", 0, 6,
                            [&](int n) { return wilson::check_l_eigen(t, n); }));
  rows.push_back(exact_over("three-term recurrence", "recurrence", "n", 0, 6,
                            [&](int n) { return wilson::check_recurrence(t, n); }));
  rows.push_back(exact_over("4F3 form of E^+_2n", "explicit form", "n", 0, 10, [&](int n) {
    const Poly e = wilson::renormalized_E_plus(t, n);
    // n + 1 distinct values of x^2 pin down the even polynomial of degree 2n.
    for (int j = 0; j <= n; ++j) {
      const Rational x(j, 3);
      if (wilson::symmetric_E_4f3(t, n, x) != e(x)) return false;
    }
    return true;
  }));
  rows.push_back(exact_over("Weyl character P^-_2n", "Weyl character", "n", 1, 5,
                            [&](int n) { return wilson::check_weyl_character(t, n).holds(); }));
  return rows;
}

std::vector<Record> transform_suite(const ParamSet& t, const RunConfig& config) {
  std::vector<Record> rows;
  const int top = config.max_index;
  const double tol = config.tol("numeric");
  rows.push_back(exact_over("G F x^k = N x^k", "inversion", "k", 0, top, [&](int k) {
    return wilson::check_G_after_F(t, Poly::monomial(k)).holds();
  }));
  rows.push_back(exact_over("F G 1_m = N 1_m", "inversion", "m", 0, top, [&](int m) {
    return wilson::check_F_after_G(t, wilson::FiniteSpectralFunction::indicator(m)).holds();
  }));
  rows.push_back(exact_over(
      "F(X p) = sigma(X) F p, X in {Y, T1, U1}", "intertwining", "deg", 0, 6, [&](int k) {
        const Poly p = Poly::monomial(k);
        for (auto g :
             {wilson::PolyGenerator::Y, wilson::PolyGenerator::T1, wilson::PolyGenerator::U1}) {
          if (!wilson::check_forward_intertwining(t, g, p)) return false;
        }
        return true;
      }));
  rows.push_back(exact_over("G(X f) = sigma^-1(X) G f", "intertwining", "m", 0, 6, [&](int m) {
    const auto f = wilson::FiniteSpectralFunction::indicator(m);
    for (auto g : {wilson::SpectralGenerator::T0_sigma, wilson::SpectralGenerator::T1_sigma,
                   wilson::SpectralGenerator::multiply}) {
      if (!wilson::check_inverse_intertwining(t, g, f)) return false;
    }
    return true;
  }));
  rows.push_back(exact_over("w reflection symmetries", "spectral weight", "m", 1, 6, [&](int m) {
    const auto s = wilson::check_weight_symmetry(t, m);
    return s.s0_holds && s.s1_holds;
  }));
  rows.push_back(exact_over(
      "symmetric inversion, norms, Plancherel", "symmetric transform", "n", 0, 3, [&](int n) {
        return wilson::symmetric_transform_suite(t, Poly::monomial(2 * n), Poly::monomial(2))
            .holds();
      }));

  std::mt19937_64 rng(config.seed);
  std::vector<std::pair<Poly, Poly>> pairs;
  for (int i = 0; i < 10; ++i) pairs.emplace_back(random_poly(rng, 6), random_poly(rng, 6));
  rows.push_back(exact_over("[F p1, F p2] = N <p1, p2>", "Plancherel", "pair", 0, 9, [&](int i) {
    const auto r = wilson::plancherel_check(t, pairs[i].first, pairs[i].second, false);
    return r.exact_F_holds && r.exact_G_holds;
  }));

  if (!t.quadrature_ok()) {
    const std::pair<const char*, const char*> skipped[] = {
        {"[F p1, F p2] = N <p1, p2> by quadrature", "Plancherel"},
        {"<p_m, p_n> = 0, m != n", "orthogonality"},
        {"<E_m, E_m> / <1,1> = w(-gamma_0)/w(-gamma_m)", "norms"},
        {"<1,1> against the Gamma product", "norms"}};
    for (const auto& [name, anchor] : skipped)
      rows.push_back(skipped_record(name, anchor, "numeric", kExactOnly));
    return rows;
  }
  rows.push_back(
      guarded("[F p1, F p2] = N <p1, p2> by quadrature", "Plancherel", "10 pairs", tol, [&] {
        double worst = 0.0;
        for (const auto& [p, q] : pairs) {
          const auto r = wilson::plancherel_check(t, p, q, true);
          worst = std::max({worst, r.numeric_F_error, r.numeric_G_error});
        }
        return worst;
      }));

  wilson::BilinearOptions quad;
  quad.method = wilson::BilinearMethod::quadrature;
  quad.tol = config.tol("quadrature");
  quad.bits = config.working_bits();
  const auto basis = wilson::WilsonBasis::of(t);
  const int orth = std::min(top, 6);
  const HPComplex one_one = wilson::unit_norm(t, wilson::WeightVariant::full, quad.bits);
  const double scale = wilson::numeric::abs(one_one).to_double();
  rows.push_back(guarded("<p_m, p_n> = 0, m != n", "orthogonality", upto("m,n", orth), tol, [&] {
    double worst = 0.0;
    for (int m = 0; m <= orth; ++m) {
      for (int n = m + 1; n <= orth; ++n) {
        const Poly pm = basis->p(m), pn = basis->p(n);
        wilson::BilinearOptions o = quad;
        // Relative to the geometric mean of the two norms.
        const double norms =
            std::sqrt(wilson::numeric::abs(wilson::bilinear_form(t, pm, pm)).to_double() *
                      wilson::numeric::abs(wilson::bilinear_form(t, pn, pn)).to_double());
        o.abs_floor = norms;
        worst = std::max(
            worst, wilson::numeric::abs(wilson::bilinear_form(t, pm, pn, o)).to_double() / norms);
      }
    }
    return worst;
  }));
  rows.push_back(
      guarded("<E_m, E_m> / <1,1> = w(-gamma_0)/w(-gamma_m)", "norms", upto("m", orth), tol, [&] {
        double worst = 0.0;
        for (int m = 0; m <= orth; ++m) {
          const Poly e = basis->E(m);
          const HPComplex value = wilson::bilinear_form(t, e, e, quad) / one_one;
          const HPComplex exact(wilson::norm_ratio(t, m), quad.bits);
          worst = std::max(worst, wilson::numeric::relative_difference(value, exact));
        }
        return worst;
      }));
  rows.push_back(guarded("<1,1> against the Gamma product", "norms", "-", tol, [&] {
    wilson::BilinearOptions o = quad;
    o.abs_floor = scale;
    return wilson::numeric::relative_difference(wilson::bilinear_form(t, Poly(1), Poly(1), o),
                                                one_one);
  }));
  return rows;
}

std::vector<Record> wilson_function_suite(const ParamSet& t, const RunConfig& config) {
  std::vector<Record> rows;
  const ParamSet tt = wilson::dual_tau(t);
  const ParamSet tst = wilson::params_sigma_tau(t);
  if (!tt.exact_ok() || !tst.exact_ok()) {
    const std::string reason = "twisted parameters not admissible: " +
                               (tt.exact_ok() ? tst.exact_violation() : tt.exact_violation());
    rows.push_back(skipped_record("Wilson function suite", "Wilson function", "exact", reason));
    return rows;
  }
  const double tol = config.tol("numeric");
  const int bits = config.working_bits();
  wilson::PhiOptions phi;
  phi.bits = bits;
  wilson::ThetaOptions theta;
  theta.bits = bits;
  theta.tol = config.tol("quadrature");
  auto point = [&](double im) { return HPComplex(0.0, im, bits); };

  rows.push_back(
      guarded("Gaussian ratio laws (Pochhammer vs Gamma)", "Gaussian", upto("n", 8), 1e-10, [&] {
        double worst = 0.0;
        for (int m = 0; m <= 16; ++m) {
          worst = std::max(worst, wilson::numeric::relative_difference(
                                      HPComplex(wilson::gaussian_ratio_tau_sigma(t, m), bits),
                                      wilson::gaussian_ratio_tau_sigma_numeric(t, m, bits)));
          worst = std::max(worst, wilson::numeric::relative_difference(
                                      HPComplex(wilson::gaussian_ratio_tau_sigma_tau(t, m), bits),
                                      wilson::gaussian_ratio_tau_sigma_tau_numeric(t, m, bits)));
        }
        return worst;
      }));
  const auto conj =
      wilson::check_gaussian_conjugation(t, 4, {point(0.3), HPComplex(0.2, 0.5, bits)});
  rows.push_back(exact_record("t0 - c0(x) = x - 1/2 - u0 + c0^tau(x)", "Gaussian conjugation", "-",
                              conj.exact_identity_holds));
  rows.push_back(numeric_record("G X G^-1 = tau(X), X in {T0, T1, z}", "Gaussian conjugation",
                                "deg <= 4, 2 points",
                                std::max({conj.T0_error, conj.T1_error, conj.z_error}), 1e-10));

  rows.push_back(
      exact_over("composition route = basis route", "transform F~", "deg", 0, 4, [&](int k) {
        const Poly p = wilson::WilsonBasis::of(tt)->p(k);
        const auto a = wilson::frak_F_exact(t, p, wilson::FrakMethod::composition);
        const auto b = wilson::frak_F_exact(t, p, wilson::FrakMethod::basis);
        return a.poly == b.poly && wilson::numeric::relative_difference(a.scale, b.scale) <= 1e-30;
      }));
  rows.push_back(
      exact_over("F~(X p) = chi(X) F~ p, X in {z, Y^tau, T1^tau}", "chi", "deg", 0, 3, [&](int k) {
        for (auto g :
             {wilson::ChiGenerator::z, wilson::ChiGenerator::Y_tau, wilson::ChiGenerator::T1_tau}) {
          if (!wilson::check_chi_intertwining(t, g, Poly::monomial(k)).holds()) return false;
        }
        return true;
      }));
  const auto cal = wilson::calF_exact_suite(t, 8);
  rows.push_back(exact_record("F e_gamma ratios (a+b) G ratio", "transform F", upto("m", 8),
                              cal.basis_ratios_hold));
  rows.push_back(exact_record("F_sigma F = (a+b)^2 on the basis", "transform F", upto("m", 8),
                              cal.exact_inversion_holds));
  rows.push_back(exact_record("{F e, F e'}_sigma = (a+b)^2 {e, e'}", "transform F", upto("m", 8),
                              cal.plancherel_holds));

  rows.push_back(guarded("phi duality, reduction, L eigenvalue", "phi", "(0.3i, 0.7i)", tol, [&] {
    const auto c = wilson::check_phi(t, point(0.3), point(0.7), phi);
    return std::max({c.duality_error, c.reduction_error, c.eigen_error});
  }));
  std::vector<HPComplex> grid = {point(0.2), point(0.6), point(1.0)};
  rows.push_back(guarded("E(x, lambda) = E_sigma(lambda, x)", "Wilson function duality", "3x3 grid",
                         tol, [&] { return wilson::check_wilson_duality(t, grid, grid, phi); }));
  rows.push_back(guarded(
      "E(x, -gamma_m) = const E(x, gamma_m)", "polynomial reduction", upto("m", 4), tol, [&] {
        double worst = 0.0;
        for (int m = 0; m <= 4; ++m) {
          worst = std::max(worst, wilson::check_polynomial_reduction(
                                      t, m, {point(0.3), HPComplex(0.1, 0.5, bits)}, phi));
        }
        return worst;
      }));
  rows.push_back(
      guarded("Y E = -lambda E, Y^sigma E = -x E", "eigenfunction", "(0.3i, 0.7i)", tol, [&] {
        const auto e = wilson::check_wilson_eigen(t, point(0.3), point(0.7), phi);
        return std::max(e.y_error, e.y_sigma_error);
      }));

  const std::vector<std::string> quadrature_names = {
      "<E^+_tau, phi_lambda>^+ = 2 G ratio E^+_sigma_tau",
      "<E_tau, E~>_tau = 2 t1 G ratio E_sigma_tau", "F~ integral route = basis route",
      "{p G_tau, E} = G_sigma_tau F-exact", "Theta symmetry of T0, T1"};
  if (!t.quadrature_ok() || !tt.quadrature_ok()) {
    for (const auto& name : quadrature_names)
      rows.push_back(skipped_record(name, "Wilson function", "numeric", kExactOnly));
  } else {
    rows.push_back(guarded(quadrature_names[0], "phi pairing", "n <= 1, lambda = 0.6i", tol, [&] {
      double worst = 0.0;
      for (int n = 0; n <= 1; ++n)
        worst = std::max(worst, wilson::check_phi_pairing(t, n, point(0.6), theta).error);
      return worst;
    }));
    rows.push_back(
        guarded(quadrature_names[1], "kernel identity", "m in {0, 2}, lambda = 0.6i", tol, [&] {
          double worst = 0.0;
          for (int m : {0, 2})
            worst = std::max(worst, wilson::check_kernel_identity(t, m, point(0.6), theta).error);
          return worst;
        }));
    rows.push_back(guarded(quadrature_names[2], "transform F~", "p = 1, lambda = 0.4i", tol, [&] {
      const Poly one(1);
      return wilson::numeric::relative_difference(
          wilson::frak_F_transform(t, one, point(0.4), wilson::FrakMethod::integral, theta),
          wilson::frak_F_transform(t, one, point(0.4), wilson::FrakMethod::basis, theta));
    }));
    rows.push_back(guarded(quadrature_names[3], "transform F", "e_0, e_1 on lambda grid", tol, [&] {
      double worst = 0.0;
      for (int m = 0; m <= 1; ++m) {
        const Poly e = wilson::WilsonBasis::of(tt)->E(m);
        const Poly image = wilson::calF_exact(t, e);
        for (double im : config.lambda_grid) {
          const HPComplex l = point(im);
          const HPComplex exact = image(l) * wilson::gaussian_G_sigma_tau(t, l).value;
          worst = std::max(worst, wilson::numeric::relative_difference(
                                      wilson::calF_numeric(t, e, l, theta), exact));
        }
      }
      return worst;
    }));
    rows.push_back(guarded(quadrature_names[4], "Theta form", "f, g in {G_tau, G_tau x}", tol,
                           [&] { return wilson::check_theta_symmetry(t, theta); }));
  }

  const std::vector<std::string> dual_names = {"F_sigma F = (a+b)^2 by quadrature",
                                               "F^+_sigma F^+ = id by quadrature", "F^+ isometry"};
  const bool dual_ok = t.quadrature_ok() && tt.quadrature_ok() &&
                       wilson::dual_sigma(t).quadrature_ok() && tst.quadrature_ok();
  if (!dual_ok) {
    const std::string reason =
        t.quadrature_ok() ? "dual side not quadrature-admissible" : kExactOnly;
    for (const auto& name : dual_names)
      rows.push_back(skipped_record(name, "transform F", "numeric", reason));
    return rows;
  }
  const double loose = config.tol("numeric") * 100.0;  // 1e-6 at the default tolerance
  rows.push_back(guarded(dual_names[0], "transform F", "p = x + 1/3, x = 0.3i", loose, [&] {
    return wilson::calF_numeric_inversion(t, Poly{Rational(1, 3), Rational(1)}, {point(0.3)}, false,
                                          theta)
        .error;
  }));
  rows.push_back(guarded(dual_names[1], "symmetric transform F^+", "p = 1, x = 0.3i", tol, [&] {
    return wilson::calF_numeric_inversion(t, Poly(1), {point(0.3)}, true, theta).error;
  }));
  rows.push_back(guarded(dual_names[2], "symmetric transform F^+", "p = 1", tol,
                         [&] { return wilson::calF_plus_isometry_error(t, Poly(1), theta); }));
  return rows;
}

}  // namespace

std::vector<Record> run_suite(const std::string& suite, const ParamSet& t, const RunConfig& config,
                              const Hooks& hooks) {
  if (suite == "algebra") return algebra_suite(t, config);
  if (suite == "polynomials") return polynomial_suite(t, config, hooks);
  if (suite == "transform") return transform_suite(t, config);
  if (suite == "wilson-function") return wilson_function_suite(t, config);
  if (suite == "all") {
    std::vector<Record> rows;
    for (const auto& s : kSuites) {
      auto part = run_suite(s, t, config, hooks);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
  }
  throw ParseFailure("unknown suite '" + suite + "'");
}

}  // namespace wilsonctl
