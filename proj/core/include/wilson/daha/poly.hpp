#pragma once

#include <climits>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "wilson/numeric/complex.hpp"
#include "wilson/numeric/rational.hpp"

namespace wilson {

using numeric::HPComplex;
using numeric::Rational;

// Univariate polynomial with exact rational coefficients, lowest degree first.
// Trailing zero coefficients are never stored.
class Poly {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);

  static Poly monomial(int k, const Rational& coefficient = Rational(1));
  static Poly x() { return monomial(1); }

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const;
  bool is_monic() const { return !is_zero() && leading() == Rational(1); }
  bool is_even() const;
  bool is_odd() const;

  Rational operator()(const Rational& x) const;
  HPComplex operator()(const HPComplex& x) const;

  // p(alpha x + beta)
  Poly substitute(const Rational& alpha, const Rational& beta) const;
  // Reflections x -> -x and x -> 1 - x.
  Poly reflect_s1() const { return substitute(Rational(-1), Rational(0)); }
  Poly reflect_s0() const { return substitute(Rational(-1), Rational(1)); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(Poly p, const Poly& q) { return p *= q; }
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend Poly operator/(Poly p, const Rational& c) { return p /= c; }
  friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }

  // Quotient and remainder of Euclidean division; divisor must be nonzero.
  struct DivMod;
  DivMod divmod(const Poly& divisor) const;
  // Quotient when the division is known to be exact; throws otherwise.
  Poly divide_exact(const Poly& divisor) const;

  // Human readable form, e.g. "x^2 - 3/5*x + 1".
  std::string str() const;
  // Coefficients as "p/q" strings, lowest degree first.
  std::vector<std::string> coefficient_strings() const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct Poly::DivMod {
  Poly quotient;
  Poly remainder;
};

}  // namespace wilson
