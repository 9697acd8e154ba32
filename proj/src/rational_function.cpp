#include "homfac/rational_function.hpp"

#include <stdexcept>

namespace homfac {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RationalFunction::RationalFunction(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.vars(), 1)) {}

RationalFunction RationalFunction::constant(const VarList& vars, const Rational& c) {
  return {LaurentPoly::constant(vars, c.get_num()), LaurentPoly::constant(vars, c.get_den())};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = homfac::evaluate(den_, point);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return homfac::evaluate(num_, point) / d;
}

}  // namespace homfac
