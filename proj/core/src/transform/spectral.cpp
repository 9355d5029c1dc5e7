#include "wilson/transform/spectral.hpp"

#include <sstream>

#include "wilson/errors.hpp"
#include "wilson/polys/checks.hpp"

namespace wilson {

FiniteSpectralFunction::FiniteSpectralFunction(std::map<int, Rational> values, HPComplex scale)
    : values_(std::move(values)), scale_(std::move(scale)) {
  for (const auto& [m, v] : values_) {
    if (m < 0) throw IndexResolutionError("spectral index " + std::to_string(m) + " is not in Gamma");
  }
  prune();
}

HPComplex FiniteSpectralFunction::unit_scale() {
  return HPComplex(Rational(1), numeric::working_bits(numeric::kDefaultPrecisionBits));
}

FiniteSpectralFunction FiniteSpectralFunction::indicator(int m) {
  return FiniteSpectralFunction({{m, Rational(1)}});
}

Rational FiniteSpectralFunction::at(int label) const {
  if (label == kMinusGamma0Label) label = 0;
  if (label < 0) throw IndexResolutionError("label " + std::to_string(label) + " is not in Gamma");
  auto it = values_.find(label);
  return it == values_.end() ? Rational(0) : it->second;
}

HPComplex FiniteSpectralFunction::numeric_at(int label) const { return scale_ * at(label); }

FiniteSpectralFunction FiniteSpectralFunction::with_scale(const HPComplex& scale) const {
  FiniteSpectralFunction out = *this;
  out.scale_ = scale;
  return out;
}

int FiniteSpectralFunction::max_index() const {
  return values_.empty() ? -1 : values_.rbegin()->first;
}

FiniteSpectralFunction& FiniteSpectralFunction::operator+=(const FiniteSpectralFunction& o) {
  if (numeric::relative_difference(scale_, o.scale_) > 1e-10) {
    throw std::invalid_argument("adding spectral functions with different scales");
  }
  for (const auto& [m, v] : o.values_) values_[m] += v;
  prune();
  return *this;
}

FiniteSpectralFunction FiniteSpectralFunction::operator*(const Rational& r) const {
  FiniteSpectralFunction out = *this;
  for (auto& [m, v] : out.values_) v *= r;
  out.prune();
  return out;
}

bool FiniteSpectralFunction::same_exact_part(const FiniteSpectralFunction& o) const {
  return values_ == o.values_;
}

bool operator==(const FiniteSpectralFunction& x, const FiniteSpectralFunction& y) {
  return x.same_exact_part(y) && numeric::relative_difference(x.scale_, y.scale_) <= 1e-10;
}

std::string FiniteSpectralFunction::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [m, v] : values_) {
    os << (first ? "" : ", ") << m << ": " << v;
    first = false;
  }
  os << "}";
  return os.str();
}

void FiniteSpectralFunction::prune() {
  for (auto it = values_.begin(); it != values_.end();) {
    it = it->second.is_zero() ? values_.erase(it) : std::next(it);
  }
}

FiniteSpectralFunction spectral_action(const ParamSet& t, SpectralGenerator generator,
                                       const FiniteSpectralFunction& f, const Poly& multiplier) {
  t.require_exact();
  const ParamSet dual = dual_sigma(t);
  dual.require_exact();
  const int top = f.max_index();
  std::map<int, Rational> out;
  if (generator == SpectralGenerator::multiply) {
    for (const auto& [m, v] : f.values()) out[m] = multiplier(-gamma_val(t, m)) * v;
    return FiniteSpectralFunction(std::move(out), f.scale());
  }
  // s_1 and s_0 move index m to s1_label(m), s0_label(m); both stay within top+1.
  for (int m = 0; m <= top + 1; ++m) {
    const Rational g = -gamma_val(t, m);
    const Rational fm = f.at(m);
    Rational value;
    if (generator == SpectralGenerator::T1_sigma) {
      const Rational coeff = m == 0 ? Rational(0) : c1_sigma(t, g);
      value = dual.t1() * fm + coeff * (f.at(s1_label(m)) - fm);
    } else {
      value = dual.t0() * fm + c0_sigma(t, g) * (f.at(s0_label(m)) - fm);
    }
    if (!value.is_zero()) out[m] = value;
  }
  return FiniteSpectralFunction(std::move(out), f.scale());
}

}  // namespace wilson
