#pragma once

#include <string>

#include "wilson/numeric/rational.hpp"

namespace wilson {

using numeric::Rational;

// Multiplicity function (t0, u0, t1, u1) with the derived Wilson parameters
//   (a, b, c, d) = (t1+u1, t1-u1, t0+u0+1/2, t0-u0+1/2).
// Construction never throws; the admissibility flags are computed eagerly and
// operations call require_exact() / require_quadrature() as needed.
class ParamSet {
 public:
  ParamSet(Rational t0, Rational u0, Rational t1, Rational u1);

  // (2/3, 1/5, 3/5, 1/7), admissible for both modes.
  static ParamSet canonical();

  const Rational& t0() const { return t0_; }
  const Rational& u0() const { return u0_; }
  const Rational& t1() const { return t1_; }
  const Rational& u1() const { return u1_; }

  Rational a() const { return t1_ + u1_; }
  Rational b() const { return t1_ - u1_; }
  Rational c() const { return t0_ + u0_ + Rational(1, 2); }
  Rational d() const { return t0_ - u0_ + Rational(1, 2); }

  // Wilson parameters of the dual set (u1, u0, t1, t0).
  Rational a_tilde() const { return t1_ + t0_; }
  Rational b_tilde() const { return t1_ - t0_; }
  Rational c_tilde() const { return u1_ + u0_ + Rational(1, 2); }
  Rational d_tilde() const { return u1_ - u0_ + Rational(1, 2); }

  bool exact_ok() const { return exact_violation_.empty(); }
  bool quadrature_ok() const { return exact_ok() && quadrature_violation_.empty(); }
  // Empty when the condition holds, otherwise names the violated condition.
  const std::string& exact_violation() const { return exact_violation_; }
  std::string quadrature_violation() const;

  // Throw AdmissibilityError naming the violated condition.
  void require_exact() const;
  void require_quadrature() const;

  // (t0, u0, t1 + delta, u1)
  ParamSet shifted_t1(const Rational& delta = Rational(1)) const;

  // "(t0, u0, t1, u1)"
  std::string str() const;

  friend bool operator==(const ParamSet& x, const ParamSet& y) {
    return x.t0_ == y.t0_ && x.u0_ == y.u0_ && x.t1_ == y.t1_ && x.u1_ == y.u1_;
  }

 private:
  Rational t0_, u0_, t1_, u1_;
  std::string exact_violation_;
  std::string quadrature_violation_;
};

// (t0, u0, t1, u1) -> (u1, u0, t1, t0)
ParamSet dual_sigma(const ParamSet& t);
// (t0, u0, t1, u1) -> (u0, t0, t1, u1)
ParamSet dual_tau(const ParamSet& t);

}  // namespace wilson
