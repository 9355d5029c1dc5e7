#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "wilson/numeric/rational.hpp"

namespace wilson::numeric {

// Requested precision for reported values; computations add kGuardBits on top.
inline constexpr int kDefaultPrecisionBits = 128;
inline constexpr int kGuardBits = 32;
inline constexpr int kMinPrecisionBits = 64;

constexpr int working_bits(int precision_bits) { return precision_bits + kGuardBits; }

// RAII wrapper around an MPFR float. Binary operations produce a result at the
// smaller of the two operand precisions.
class Real {
 public:
  explicit Real(int bits = working_bits(kDefaultPrecisionBits));
  Real(double value, int bits);
  Real(long value, int bits);
  Real(const Rational& value, int bits);
  // Decimal or scientific notation; throws ParseError.
  static Real parse(const std::string& text, int bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  Real with_precision(int bits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits (0 = all).
  std::string str(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  friend std::ostream& operator<<(std::ostream& os, const Real& r);

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real asinh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real round_nearest(const Real& x);
Real pi(int bits);
Real max(const Real& a, const Real& b);

// Multiplies by 2^e exactly.
Real ldexp(const Real& x, long e);

}  // namespace wilson::numeric
