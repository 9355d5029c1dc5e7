#include "wilson/daha/param_set.hpp"

#include <array>
#include <sstream>
#include <utility>

#include "wilson/errors.hpp"

namespace wilson {

namespace {

bool in_minus_half_n0(const Rational& x) {
  // x in {0, -1/2, -1, ...}
  Rational twice = x * Rational(2);
  return twice.is_integer() && twice.sign() <= 0;
}

std::string check_exact(const ParamSet& t) {
  const std::array<std::pair<const char*, Rational>, 4> abcd{
      {{"a", t.a()}, {"b", t.b()}, {"c", t.c()}, {"d", t.d()}}};
  for (const auto& [name, v] : abcd) {
    if (in_minus_half_n0(v)) {
      return std::string(name) + " = " + v.str() + " lies in -1/2 * {0, 1, 2, ...}";
    }
  }
  for (std::size_t i = 0; i < abcd.size(); ++i) {
    for (std::size_t j = i + 1; j < abcd.size(); ++j) {
      Rational sum = abcd[i].second + abcd[j].second;
      if (sum.is_integer()) {
        return std::string(abcd[i].first) + " + " + abcd[j].first + " = " + sum.str() +
               " is an integer";
      }
    }
  }
  Rational s = t.t0() + t.t1();
  if (in_minus_half_n0(s) && !s.is_zero()) {
    return "t0 + t1 = " + s.str() + " lies in -1/2 * {1, 2, 3, ...}";
  }
  return {};
}

std::string check_quadrature(const ParamSet& t) {
  if (t.a().sign() <= 0) return "a = " + t.a().str() + " is not positive";
  if (t.b().sign() <= 0) return "b = " + t.b().str() + " is not positive";
  if (t.c().sign() <= 0) return "c = " + t.c().str() + " is not positive";
  if (t.d().sign() <= 0 || t.d() >= Rational(1)) return "d = " + t.d().str() + " is not in (0, 1)";
  return {};
}

}  // namespace

ParamSet::ParamSet(Rational t0, Rational u0, Rational t1, Rational u1)
    : t0_(std::move(t0)), u0_(std::move(u0)), t1_(std::move(t1)), u1_(std::move(u1)) {
  exact_violation_ = check_exact(*this);
  quadrature_violation_ = check_quadrature(*this);
}

ParamSet ParamSet::canonical() {
  return ParamSet(Rational(2, 3), Rational(1, 5), Rational(3, 5), Rational(1, 7));
}

std::string ParamSet::quadrature_violation() const {
  return exact_violation_.empty() ? quadrature_violation_ : exact_violation_;
}

void ParamSet::require_exact() const {
  if (!exact_ok()) throw AdmissibilityError("parameters " + str() + ": " + exact_violation_);
}

void ParamSet::require_quadrature() const {
  if (!quadrature_ok()) {
    throw AdmissibilityError("parameters " + str() + " not usable on the imaginary axis: " +
                             quadrature_violation());
  }
}

ParamSet ParamSet::shifted_t1(const Rational& delta) const {
  return ParamSet(t0_, u0_, t1_ + delta, u1_);
}

std::string ParamSet::str() const {
  std::ostringstream os;
  os << "(" << t0_ << ", " << u0_ << ", " << t1_ << ", " << u1_ << ")";
  return os.str();
}

ParamSet dual_sigma(const ParamSet& t) { return ParamSet(t.u1(), t.u0(), t.t1(), t.t0()); }

ParamSet dual_tau(const ParamSet& t) { return ParamSet(t.u0(), t.t0(), t.t1(), t.u1()); }

}  // namespace wilson
