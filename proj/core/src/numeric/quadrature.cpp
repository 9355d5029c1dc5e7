#include "wilson/numeric/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wilson/errors.hpp"

namespace wilson::numeric {

namespace {

double initial_cutoff(double decay, double tol) {
  // Smallest Y with e^(-decay Y) (1+Y)^6 below tol/10, padded by e^-5.
  const double target = std::log(10.0 / tol) + 5.0;
  double y = target / decay;
  for (int i = 0; i < 50; ++i) y = (target + 6.0 * std::log1p(y)) / decay;
  return y;
}

class NodeSum {
 public:
  NodeSum(const Integrand& f, const QuadratureOptions& o) : f_(f), o_(o) {}

  // f(i s sinh t) s cosh t
  HPComplex weighted(double t) {
    ++evaluations_;
    Real tt(t, o_.bits);
    Real s(o_.scale, o_.bits);
    HPComplex x = imaginary(s * sinh(tt));
    return f_(x) * (s * cosh(tt));
  }

  // Sum over t = k h, k odd (odd_only) or all k, |t| <= T, from left to right.
  HPComplex sum(double h, double t_max, bool odd_only) {
    long k_max = static_cast<long>(std::floor(t_max / h));
    HPComplex total(o_.bits);
    for (long k = -k_max; k <= k_max; ++k) {
      if (odd_only && (k % 2 == 0)) continue;
      total += weighted(static_cast<double>(k) * h);
    }
    return total;
  }

  long evaluations() const { return evaluations_; }

 private:
  const Integrand& f_;
  const QuadratureOptions& o_;
  long evaluations_ = 0;
};

}  // namespace

QuadratureResult integrate_imaginary_axis(const Integrand& f, const QuadratureOptions& options) {
  if (!(options.decay_rate > 0.0)) {
    throw NoDecayError("quadrature needs a positive decay rate, got " +
                       std::to_string(options.decay_rate));
  }
  if (!(options.scale > 0.0)) throw NoDecayError("quadrature scale must be positive");

  const int bits = options.bits;
  double y_max = initial_cutoff(options.decay_rate, options.tol);
  const Real two_pi = pi(bits) * Real(2L, bits);
  NodeSum nodes(f, options);

  for (int attempt = 0; attempt < 4; ++attempt) {
    const double t_max = std::asinh(y_max / options.scale);
    double h = 0.5;
    HPComplex level_sum = nodes.sum(h, t_max, false);
    HPComplex estimate = level_sum * Real(h, bits);

    // Truncation check at the cutoff: the neglected tail is about |f(iY)|/decay.
    Real edge = max(abs(f(imaginary(Real(y_max, bits)))), abs(f(imaginary(Real(-y_max, bits)))));
    double tail = edge.to_double() / options.decay_rate / two_pi.to_double();
    double magnitude = std::max(abs(estimate).to_double() / two_pi.to_double(), options.abs_floor);
    if (tail > 0.1 * options.tol * magnitude && attempt < 3) {
      y_max *= 1.5;
      continue;
    }

    for (int level = 1; level <= options.max_levels; ++level) {
      h /= 2.0;
      level_sum += nodes.sum(h, t_max, true);
      HPComplex refined = level_sum * Real(h, bits);
      double diff = abs(refined - estimate).to_double() / two_pi.to_double();
      double size = std::max(abs(refined).to_double() / two_pi.to_double(), options.abs_floor);
      estimate = refined;
      if (level >= 2 && diff <= options.tol * size) {
        QuadratureResult out{estimate / two_pi, diff, nodes.evaluations(), level, y_max};
        return out;
      }
    }
    throw ToleranceNotMetError("quadrature did not converge to " + std::to_string(options.tol) +
                               " after " + std::to_string(options.max_levels) + " refinements");
  }
  throw ToleranceNotMetError("quadrature tail did not decay below tolerance");
}

HPComplex quad_imaginary_axis(const Integrand& f, double decay_rate, double tol) {
  QuadratureOptions options;
  options.decay_rate = decay_rate;
  options.tol = tol;
  return integrate_imaginary_axis(f, options).value;
}

}  // namespace wilson::numeric
