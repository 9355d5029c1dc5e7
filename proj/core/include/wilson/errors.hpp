#pragma once

#include <stdexcept>
#include <string>

namespace wilson {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WILSON_DEFINE_ERROR(Name) \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

WILSON_DEFINE_ERROR(PoleError);
WILSON_DEFINE_ERROR(DivergenceError);
WILSON_DEFINE_ERROR(ConvergenceBudgetError);
WILSON_DEFINE_ERROR(NoDecayError);
WILSON_DEFINE_ERROR(ToleranceNotMetError);
WILSON_DEFINE_ERROR(DivisionByZeroError);
WILSON_DEFINE_ERROR(AdmissibilityError);
WILSON_DEFINE_ERROR(ZeroParameterError);
WILSON_DEFINE_ERROR(ZeroNormalizerError);
WILSON_DEFINE_ERROR(DegenerateDenominatorError);
WILSON_DEFINE_ERROR(ZeroEvaluationError);
WILSON_DEFINE_ERROR(IndexError);
WILSON_DEFINE_ERROR(NotSymmetricError);
WILSON_DEFINE_ERROR(IndexResolutionError);
WILSON_DEFINE_ERROR(ParseError);

#undef WILSON_DEFINE_ERROR

}  // namespace wilson
