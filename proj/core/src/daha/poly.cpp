#include "wilson/daha/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "wilson/errors.hpp"

namespace wilson {

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::monomial(int k, const Rational& coefficient) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  c.back() = coefficient;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

bool Poly::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

bool Poly::is_odd() const {
  for (std::size_t k = 0; k < coeffs_.size(); k += 2) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

Rational Poly::operator()(const Rational& x) const {
  Rational out(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + *it;
  return out;
}

HPComplex Poly::operator()(const HPComplex& x) const {
  HPComplex out(x.precision_bits());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + *it;
  return out;
}

Poly Poly::substitute(const Rational& alpha, const Rational& beta) const {
  // Horner in the polynomial alpha x + beta.
  Poly linear{beta, alpha};
  Poly out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out *= linear;
    out += Poly(*it);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c.is_zero()) throw DivisionByZeroError("polynomial divided by zero");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

Poly::DivMod Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by the zero polynomial");
  DivMod out{Poly(), *this};
  const int dd = divisor.degree();
  if (degree() < dd) return out;
  std::vector<Rational> q(static_cast<std::size_t>(degree() - dd) + 1, Rational(0));
  std::vector<Rational>& r = out.remainder.coeffs_;
  const Rational lead = divisor.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    Rational factor = r[static_cast<std::size_t>(k + dd)] / lead;
    q[static_cast<std::size_t>(k)] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      r[static_cast<std::size_t>(k + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  out.remainder.trim();
  out.quotient = Poly(std::move(q));
  return out;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  DivMod dm = divmod(divisor);
  if (!dm.remainder.is_zero()) {
    throw DivisionByZeroError("inexact polynomial division of " + str() + " by " + divisor.str());
  }
  return dm.quotient;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational m = abs(c);
    if (k == 0) {
      os << m;
    } else {
      if (m != Rational(1)) os << m << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::vector<std::string> Poly::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  if (out.empty()) out.emplace_back("0");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace wilson
