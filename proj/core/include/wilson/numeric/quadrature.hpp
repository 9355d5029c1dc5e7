#pragma once

#include <functional>

#include "wilson/numeric/complex.hpp"

namespace wilson::numeric {

using Integrand = std::function<HPComplex(const HPComplex&)>;

struct QuadratureOptions {
  double decay_rate = 0.0;  // |f(iy)| <= C e^(-decay_rate |y|) poly(|y|)
  double tol = 1e-8;
  // Distance from the axis to the nearest singularity; nodes are packed near
  // y = 0 on this scale through y = scale * sinh(t).
  double scale = 1.0;
  // Absolute floor for the convergence test, for integrals that vanish.
  double abs_floor = 0.0;
  int max_levels = 9;
  int bits = working_bits(kDefaultPrecisionBits);
};

struct QuadratureResult {
  HPComplex value;
  double error_estimate = 0.0;
  long evaluations = 0;
  int levels = 0;
  double y_max = 0.0;
};

// (1/2 pi i) * integral over the imaginary axis of f(x) dx, by the trapezoid rule
// in t after y = scale * sinh(t), halving the step until two successive levels
// agree within tol.
QuadratureResult integrate_imaginary_axis(const Integrand& f, const QuadratureOptions& options);

HPComplex quad_imaginary_axis(const Integrand& f, double decay_rate, double tol = 1e-8);

}  // namespace wilson::numeric
