#pragma once

// Sparse Laurent polynomials over the integers in a small number of named
// variables. Values are immutable once built; every operation returns a new
// polynomial in canonical form (no zero coefficients, terms ordered by
// descending lexicographic exponent vector).

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homfac/integer.hpp"

namespace homfac {

using Exponents = std::vector<int>;
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);

/// A unit of the Laurent ring: sign * x^a y^b ...
struct Monomial {
  int sign = 1;
  Exponents exponents;

  Monomial inverse() const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Integer, std::greater<Exponents>>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarList vars);
  explicit LaurentPoly(std::vector<std::string> names);
  LaurentPoly(VarList vars, TermMap terms);

  static LaurentPoly constant(VarList vars, const Integer& c);
  static LaurentPoly variable(VarList vars, std::string_view name, int power = 1);
  static LaurentPoly term(VarList vars, Exponents e, const Integer& c);
  static LaurentPoly from_monomial(VarList vars, const Monomial& m);

  const VarList& vars() const { return vars_; }
  const std::vector<std::string>& variables() const;
  std::size_t num_variables() const { return vars_ ? vars_->size() : 0; }
  int index_of(std::string_view name) const;
  bool same_variables(const LaurentPoly& other) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  /// The monomial if this is +-1 times a single monomial.
  std::optional<Monomial> as_unit() const;
  bool is_unit() const { return as_unit().has_value(); }
  Integer coefficient(const Exponents& e) const;
  /// Lex-leading term (first in canonical order). Requires nonzero.
  const std::pair<const Exponents, Integer>& leading_term() const;

  int min_degree(std::size_t var) const;
  int max_degree(std::size_t var) const;

  /// Accumulates c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  LaurentPoly& operator*=(const LaurentPoly& g);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend bool operator==(const LaurentPoly& f, const LaurentPoly& g);

  LaurentPoly scaled(const Integer& c) const;
  LaurentPoly times_monomial(const Monomial& m) const;
  LaurentPoly pow(unsigned n) const;

  std::string to_string() const;

 private:
  void require_compatible(const LaurentPoly& g) const;

  VarList vars_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);

/// Maps variable i of f to images[i], a signed monomial in `target`.
LaurentPoly substitute_monomials(const LaurentPoly& f, std::span<const Monomial> images,
                                 const VarList& target);
/// Same, with images given as polynomials; each must be a unit.
LaurentPoly substitute_monomials(const LaurentPoly& f, std::span<const LaurentPoly> images);

struct UnitSplit {
  LaurentPoly normalized;  // ordinary polynomial, no variable divides it
  Monomial unit;           // f == unit * normalized
};

/// f = unit * f0 with f0 a polynomial not divisible by any variable and with
/// positive leading coefficient. Throws std::invalid_argument on zero.
UnitSplit unit_normalize(const LaurentPoly& f);

/// q with f == q * g in the Laurent ring, if it exists.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

bool is_homogeneous_of_degree(const LaurentPoly& f, int d);

/// Exact value at a rational point; throws std::domain_error at a pole.
Rational evaluate(const LaurentPoly& f, std::span<const Rational> point);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses sums of terms such as `2*x^-1*y - z^2`. Also accepts parentheses,
/// `^(-n)` exponents and implicit multiplication, which covers the strings
/// exported by knot tables. Unknown identifiers raise ParseError.
LaurentPoly parse_laurent(std::string_view text, const VarList& vars);

}  // namespace homfac
