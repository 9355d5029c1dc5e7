#pragma once

#include <iosfwd>
#include <string>

#include "wilson/numeric/rational.hpp"
#include "wilson/numeric/real.hpp"

namespace wilson::numeric {

// High-precision complex number. precision_bits() is the smaller of the two
// component precisions and never drops below kMinPrecisionBits.
class HPComplex {
 public:
  explicit HPComplex(int bits = working_bits(kDefaultPrecisionBits));
  HPComplex(Real re, Real im);
  explicit HPComplex(Real re);
  HPComplex(const Rational& re, int bits);
  HPComplex(const Rational& re, const Rational& im, int bits);
  HPComplex(double re, double im, int bits);

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  int precision_bits() const;
  HPComplex with_precision(int bits) const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  HPComplex operator-() const { return HPComplex(-re_, -im_); }
  HPComplex& operator+=(const HPComplex& o);
  HPComplex& operator-=(const HPComplex& o);
  HPComplex& operator*=(const HPComplex& o);
  HPComplex& operator/=(const HPComplex& o);
  HPComplex& operator*=(const Real& o);
  HPComplex& operator/=(const Real& o);
  HPComplex& operator+=(const Rational& o);
  HPComplex& operator-=(const Rational& o);
  HPComplex& operator*=(const Rational& o);

  friend HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
  friend HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
  friend HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
  friend HPComplex operator/(HPComplex a, const HPComplex& b) { return a /= b; }
  friend HPComplex operator*(HPComplex a, const Real& b) { return a *= b; }
  friend HPComplex operator*(const Real& b, HPComplex a) { return a *= b; }
  friend HPComplex operator/(HPComplex a, const Real& b) { return a /= b; }

  // Mixed arithmetic with exact rationals, converted at this value's precision.
  friend HPComplex operator+(const HPComplex& a, const Rational& b);
  friend HPComplex operator+(const Rational& b, const HPComplex& a) { return a + b; }
  friend HPComplex operator-(const HPComplex& a, const Rational& b) { return a + (-b); }
  friend HPComplex operator-(const Rational& b, const HPComplex& a) { return (-a) + b; }
  friend HPComplex operator*(const HPComplex& a, const Rational& b);
  friend HPComplex operator*(const Rational& b, const HPComplex& a) { return a * b; }
  friend HPComplex operator/(const HPComplex& a, const Rational& b);

  friend bool operator==(const HPComplex& a, const HPComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str(int digits = 20) const;
  friend std::ostream& operator<<(std::ostream& os, const HPComplex& z);

 private:
  Real re_;
  Real im_;
};

HPComplex conj(const HPComplex& z);
Real abs(const HPComplex& z);
Real norm(const HPComplex& z);  // |z|^2
Real arg(const HPComplex& z);
HPComplex exp(const HPComplex& z);
// Principal branch, imaginary part in (-pi, pi].
HPComplex log(const HPComplex& z);
HPComplex sin(const HPComplex& z);
HPComplex cos(const HPComplex& z);
HPComplex sqrt(const HPComplex& z);
HPComplex pow(const HPComplex& z, int n);

// i * y, convenient for points on the imaginary axis.
HPComplex imaginary(const Real& y);

// max(|a-b|) relative to max(|a|, |b|, floor); used by numeric comparisons.
double relative_difference(const HPComplex& a, const HPComplex& b, double floor = 0.0);

}  // namespace wilson::numeric
