#include "wilson/numeric/real.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "wilson/errors.hpp"

namespace wilson::numeric {

namespace {

mpfr_prec_t min_prec(const Real& a, const Real& b) {
  return std::min(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

// Rounds into a lower precision in place when the other operand is coarser.
void narrow_to(Real& target, mpfr_prec_t bits) {
  if (mpfr_get_prec(target.get()) > bits) mpfr_prec_round(target.get(), bits, MPFR_RNDN);
}

}  // namespace

Real::Real(int bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(double value, int bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real Real::parse(const std::string& text, int bits) {
  Real r(bits);
  if (text.empty() || mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("not a number: '" + text + "'");
  }
  return r;
}

Real::Real(long value, int bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, int bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, value.get().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_precision(int bits) const {
  Real out(bits);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

std::string Real::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  char* buffer = nullptr;
  if (digits <= 0) {
    // Enough decimal digits to round-trip the binary precision.
    digits = static_cast<int>(precision() * 0.30103) + 2;
  }
  mpfr_asprintf(&buffer, "%.*Re", digits - 1, v_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.v_, out.v_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& o) {
  narrow_to(*this, mpfr_get_prec(o.v_));
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  narrow_to(*this, mpfr_get_prec(o.v_));
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  narrow_to(*this, mpfr_get_prec(o.v_));
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.is_zero()) throw DivisionByZeroError("high-precision division by zero");
  narrow_to(*this, mpfr_get_prec(o.v_));
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  if (o == 0) throw DivisionByZeroError("high-precision division by zero");
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real out(static_cast<int>(min_prec(a, b)));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(static_cast<int>(min_prec(a, b)));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(static_cast<int>(min_prec(a, b)));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw DivisionByZeroError("high-precision division by zero");
  Real out(static_cast<int>(min_prec(a, b)));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.str(20); }

#define WILSON_UNARY(name, fn)                     \
  Real name(const Real& x) {                       \
    Real out(x.precision());                       \
    fn(out.get(), x.get(), MPFR_RNDN);             \
    return out;                                    \
  }

WILSON_UNARY(abs, mpfr_abs)
WILSON_UNARY(sqrt, mpfr_sqrt)
WILSON_UNARY(exp, mpfr_exp)
WILSON_UNARY(log, mpfr_log)
WILSON_UNARY(sin, mpfr_sin)
WILSON_UNARY(cos, mpfr_cos)
WILSON_UNARY(sinh, mpfr_sinh)
WILSON_UNARY(cosh, mpfr_cosh)
WILSON_UNARY(asinh, mpfr_asinh)

#undef WILSON_UNARY

Real atan2(const Real& y, const Real& x) {
  Real out(static_cast<int>(min_prec(y, x)));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

Real round_nearest(const Real& x) {
  Real out(x.precision());
  mpfr_rint(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pi(int bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

Real ldexp(const Real& x, long e) {
  Real out(x);
  mpfr_mul_2si(out.get(), out.get(), e, MPFR_RNDN);
  return out;
}

}  // namespace wilson::numeric
