#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homfac/integer.hpp"

namespace homfac {

/// Dense univariate polynomial over the integers, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Integer& c);
  static UniPoly monomial(const Integer& c, int degree);

  const std::vector<Integer>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Integer& lc() const { return c_.back(); }
  Integer operator[](int i) const;

  UniPoly& operator+=(const UniPoly& g);
  UniPoly& operator-=(const UniPoly& g);
  UniPoly operator-() const;
  friend UniPoly operator+(UniPoly f, const UniPoly& g) { return f += g; }
  friend UniPoly operator-(UniPoly f, const UniPoly& g) { return f -= g; }
  friend UniPoly operator*(const UniPoly& f, const UniPoly& g);
  friend bool operator==(const UniPoly& f, const UniPoly& g) { return f.c_ == g.c_; }

  UniPoly scaled(const Integer& k) const;
  /// Divides every coefficient by k; k must divide all of them.
  UniPoly divided_by(const Integer& k) const;
  UniPoly derivative() const;
  UniPoly pow(unsigned n) const;
  Integer content() const;
  /// Content removed and leading coefficient made positive.
  UniPoly primitive_part() const;
  Rational evaluate(const Rational& x) const;
  Integer evaluate(const Integer& x) const;
  /// p(1 - x)
  UniPoly compose_one_minus_x() const;
  /// p(x + a)
  UniPoly taylor_shift(const Integer& a) const;
  /// Multiplicity of x as a factor.
  int trailing_zeros() const;
  UniPoly shift_down(int k) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Exact quotient over the integers, if g divides f in Z[x].
std::optional<UniPoly> divide_exact(const UniPoly& f, const UniPoly& g);

/// Pseudo-division: lc(g)^(deg f - deg g + 1) f = q g + r.
std::pair<UniPoly, UniPoly> pseudo_divmod(const UniPoly& f, const UniPoly& g);

/// Greatest common divisor in Z[x] with positive leading coefficient.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

/// Sum of squares of the coefficients.
Integer norm2_squared(const UniPoly& f);

}  // namespace homfac
