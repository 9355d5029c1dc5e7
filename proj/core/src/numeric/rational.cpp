#include "wilson/numeric/rational.hpp"

#include <cctype>
#include <ostream>

#include "wilson/errors.hpp"

namespace wilson::numeric {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class&& q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!valid_integer(num) || !valid_integer(den)) {
      throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(to_mpz(num), d));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !valid_integer(whole) || !valid_integer(frac) || frac.front() == '-' ||
        frac.front() == '+') {
      throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = to_mpz(whole) * scale + to_mpz(frac);
    if (negative) num = -num;
    return Rational(mpq_class(num, scale));
  }
  if (!valid_integer(s)) throw ParseError("not a rational: '" + std::string(text) + "'");
  return Rational(mpq_class(to_mpz(s)));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::size_t Rational::hash() const {
  std::size_t h1 = std::hash<std::string>{}(q_.get_num().get_str(16));
  std::size_t h2 = std::hash<std::string>{}(q_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned exponent) {
  Rational out(1);
  Rational base = r;
  while (exponent != 0) {
    if (exponent & 1U) out *= base;
    base *= base;
    exponent >>= 1U;
  }
  return out;
}

mpz_class floor(const Rational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.get().get_num_mpz_t(), r.get().get_den_mpz_t());
  return out;
}

}  // namespace wilson::numeric
