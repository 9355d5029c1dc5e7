#include "wilson/numeric/complex.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "wilson/errors.hpp"

namespace wilson::numeric {

HPComplex::HPComplex(int bits) : re_(bits), im_(bits) {}

HPComplex::HPComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  int bits = std::min(re_.precision(), im_.precision());
  if (re_.precision() != bits) re_ = re_.with_precision(bits);
  if (im_.precision() != bits) im_ = im_.with_precision(bits);
}

HPComplex::HPComplex(Real re) : re_(std::move(re)), im_(re_.precision()) {}

HPComplex::HPComplex(const Rational& re, int bits) : re_(re, bits), im_(bits) {}

HPComplex::HPComplex(const Rational& re, const Rational& im, int bits)
    : re_(re, bits), im_(im, bits) {}

HPComplex::HPComplex(double re, double im, int bits) : re_(re, bits), im_(im, bits) {}

int HPComplex::precision_bits() const { return std::min(re_.precision(), im_.precision()); }

HPComplex HPComplex::with_precision(int bits) const {
  return HPComplex(re_.with_precision(bits), im_.with_precision(bits));
}

HPComplex& HPComplex::operator+=(const HPComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

HPComplex& HPComplex::operator-=(const HPComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

HPComplex& HPComplex::operator*=(const HPComplex& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

HPComplex& HPComplex::operator/=(const HPComplex& o) {
  if (o.is_zero()) throw DivisionByZeroError("complex division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Real den = o.re_ * o.re_ + o.im_ * o.im_;
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  Real im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

HPComplex& HPComplex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

HPComplex& HPComplex::operator/=(const Real& o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

HPComplex& HPComplex::operator+=(const Rational& o) {
  re_ += Real(o, re_.precision());
  return *this;
}

HPComplex& HPComplex::operator-=(const Rational& o) { return *this += -o; }

HPComplex& HPComplex::operator*=(const Rational& o) { return *this *= Real(o, precision_bits()); }

HPComplex operator+(const HPComplex& a, const Rational& b) {
  HPComplex out(a);
  out.re_ += Real(b, a.re_.precision());
  return out;
}

HPComplex operator*(const HPComplex& a, const Rational& b) {
  Real r(b, a.precision_bits());
  return a * r;
}

HPComplex operator/(const HPComplex& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZeroError("complex division by zero");
  Real r(b, a.precision_bits());
  return a / r;
}

std::string HPComplex::str(int digits) const {
  return "(" + re_.str(digits) + ", " + im_.str(digits) + ")";
}

std::ostream& operator<<(std::ostream& os, const HPComplex& z) { return os << z.str(); }

HPComplex conj(const HPComplex& z) { return HPComplex(z.real(), -z.imag()); }

Real norm(const HPComplex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real abs(const HPComplex& z) {
  Real out(z.precision_bits());
  mpfr_hypot(out.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return out;
}

Real arg(const HPComplex& z) { return atan2(z.imag(), z.real()); }

HPComplex exp(const HPComplex& z) {
  Real m = exp(z.real());
  if (z.imag().is_zero()) return HPComplex(m, Real(z.precision_bits()));
  int bits = z.precision_bits();
  Real s(bits);
  Real c(bits);
  mpfr_sin_cos(s.get(), c.get(), z.imag().get(), MPFR_RNDN);
  return HPComplex(m * c, m * s);
}

HPComplex log(const HPComplex& z) {
  if (z.is_zero()) throw PoleError("logarithm of zero");
  return HPComplex(log(abs(z)), arg(z));
}

HPComplex sin(const HPComplex& z) {
  // sin(x+iy) = sin x cosh y + i cos x sinh y
  int bits = z.precision_bits();
  Real s(bits);
  Real c(bits);
  mpfr_sin_cos(s.get(), c.get(), z.real().get(), MPFR_RNDN);
  return HPComplex(s * cosh(z.imag()), c * sinh(z.imag()));
}

HPComplex cos(const HPComplex& z) {
  int bits = z.precision_bits();
  Real s(bits);
  Real c(bits);
  mpfr_sin_cos(s.get(), c.get(), z.real().get(), MPFR_RNDN);
  return HPComplex(c * cosh(z.imag()), -(s * sinh(z.imag())));
}

HPComplex sqrt(const HPComplex& z) {
  if (z.is_zero()) return z;
  Real r = abs(z);
  Real two(2L, z.precision_bits());
  Real re = sqrt((r + abs(z.real())) / two);
  Real im = z.imag() / (two * re);
  if (z.real().sign() >= 0) return HPComplex(re, im);
  // Re z < 0: swap roles so the result keeps a nonnegative real part.
  Real out_im = z.imag().sign() < 0 ? -re : re;
  return HPComplex(abs(im), out_im);
}

HPComplex pow(const HPComplex& z, int n) {
  if (n < 0) {
    HPComplex one(Rational(1), z.precision_bits());
    return one / pow(z, -n);
  }
  HPComplex out(Rational(1), z.precision_bits());
  HPComplex base = z;
  unsigned e = static_cast<unsigned>(n);
  while (e != 0) {
    if (e & 1U) out *= base;
    base *= base;
    e >>= 1U;
  }
  return out;
}

HPComplex imaginary(const Real& y) { return HPComplex(Real(y.precision()), y); }

double relative_difference(const HPComplex& a, const HPComplex& b, double floor) {
  double diff = abs(a - b).to_double();
  double scale = std::max({abs(a).to_double(), abs(b).to_double(), floor});
  if (scale == 0.0) return diff;
  return diff / scale;
}

}  // namespace wilson::numeric
