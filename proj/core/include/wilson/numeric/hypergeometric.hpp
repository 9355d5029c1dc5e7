#pragma once

#include <vector>

#include "wilson/numeric/complex.hpp"
#include "wilson/numeric/rational.hpp"

namespace wilson::numeric {

struct SeriesResult {
  HPComplex value;
  long terms_used = 0;
  Real tail_bound;
};

struct SeriesOptions {
  double tol = 1e-10;
  long max_terms = 1'000'000;
};

// Sum of the generalized hypergeometric series pFq(num; den; 1).
//
// Terminating series (a numerator at a nonpositive integer) are summed to the
// last term. Otherwise p = q+1 with Re(sum den - sum num) > 0 is required; the
// partial sum is completed by an asymptotic expansion of the tail derived from
// the term ratio, and tail_bound estimates what that expansion leaves out.
SeriesResult hyp_pfq_unit(const std::vector<HPComplex>& numerators,
                          const std::vector<HPComplex>& denominators,
                          const SeriesOptions& options = {});

// Exact sum of a terminating series; throws DivergenceError if no numerator is
// a nonpositive integer.
Rational hyp_pfq_unit(const std::vector<Rational>& numerators,
                      const std::vector<Rational>& denominators);

}  // namespace wilson::numeric
