#pragma once

#include <span>

#include "homfac/laurent_poly.hpp"

namespace homfac {

/// num / den with Laurent polynomial parts. No gcd cancellation; equality is
/// tested by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(LaurentPoly num, LaurentPoly den);
  explicit RationalFunction(LaurentPoly num);
  static RationalFunction constant(const VarList& vars, const Rational& c);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws std::domain_error when b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return {-num_, den_}; }

  friend bool equal(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Throws std::domain_error when the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace homfac
