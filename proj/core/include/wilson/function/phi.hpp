#pragma once

#include "wilson/function/gaussian.hpp"

namespace wilson {

struct PhiOptions {
  double tol = 1e-20;  // relative tolerance of each 4F3 sum
  int bits = numeric::working_bits(numeric::kDefaultPrecisionBits);
};

// phi_lambda(x; t), the sum of two balanced 4F3(1) series:
//
//   Gamma(1-a-d) / (Gamma(a+b) Gamma(a+c) Gamma(1-d+-x) Gamma(1-d~+-lambda))
//     * 4F3(a+x, a-x, a~+lambda, a~-lambda; a+b, a+c, a+d; 1)
// + Gamma(a+d-1) / (Gamma(1+b-d) Gamma(1+c-d) Gamma(a+-x) Gamma(a~+-lambda))
//     * 4F3(1-d+-x, 1-d~+-lambda; 1+b-d, 1+c-d, 2-a-d; 1)
//
// Entire in x and lambda. Terms with large |x| or |lambda| cancel strongly, so
// the sums run with extra bits proportional to |x| + |lambda|.
MeromorphicValue phi_lambda(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                            const PhiOptions& options = {});

// Coefficient A(x) = (a+x)(b+x)(c+x)(d+x) / (2x (2x+1)) of the symmetric
// difference operator (Y^2)_sym - (t0+t1)^2.
HPComplex difference_coefficient_A(const ParamSet& t, const HPComplex& x);

// (L phi_lambda)(x) with L = a~^2 - G_tau^-1 (Y^2)_sym G_tau, assembled from
// phi_lambda at x and x +- 1. Should equal (a~^2 - lambda^2) phi_lambda(x).
HPComplex apply_L_to_phi(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                         const PhiOptions& options = {});

struct PhiChecks {
  double duality_error = 0.0;   // phi_lambda(x; t) against phi_x(lambda; t^sigma)
  double reduction_error = 0.0; // phi at lambda = gamma_0 against 1/(G_tau G_sigma_tau)
  double eigen_error = 0.0;     // L phi = (a~^2 - lambda^2) phi
  bool holds(double tol = 1e-8) const {
    return duality_error <= tol && reduction_error <= tol && eigen_error <= tol;
  }
};

PhiChecks check_phi(const ParamSet& t, const HPComplex& x, const HPComplex& lambda,
                    const PhiOptions& options = {});

}  // namespace wilson
