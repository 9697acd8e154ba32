#pragma once

// Exact factorization over the integers and rationals: square-free
// decomposition, square detection over C, Zassenhaus factoring of univariate
// polynomials and Kronecker-substitution factoring of bivariate ones.

#include <utility>
#include <vector>

#include "homfac/laurent_poly.hpp"
#include "homfac/sparse_poly.hpp"
#include "homfac/uni_poly.hpp"

namespace homfac {

/// Homogeneous polynomial in (x0, x1); coeffs[i] multiplies x0^i x1^(degree-i).
struct BinaryForm {
  int degree = 0;
  std::vector<Integer> coeffs;

  /// x1^degree * f(x0/x1). Requires deg f <= degree.
  static BinaryForm homogenize(const UniPoly& f, int degree);
  bool is_zero() const;
  /// Multiplicity of x1 as a factor (degree + 1 for the zero form).
  int x1_multiplicity() const;
  /// F(x, 1).
  UniPoly dehomogenize() const;
};

template <class Poly>
struct Factorization {
  /// Integer unit (content and sign) in front of the factors.
  Integer unit = 1;
  std::vector<std::pair<Poly, int>> factors;

  int factor_count() const {
    int n = 0;
    for (const auto& [p, m] : factors) n += m;
    return n;
  }
};

using UniFactorization = Factorization<UniPoly>;
using BivarFactorization = Factorization<BivarPoly>;

UniPoly expand(const UniFactorization& f);
BivarPoly expand(const BivarFactorization& f);

/// f = unit * prod(f_i^m_i), f_i square-free, primitive, pairwise coprime.
UniFactorization squarefree_decomposition(const UniPoly& f);

/// Every complex root has even multiplicity. Constants and zero count as squares.
bool is_square_over_C(const UniPoly& f);

/// F is the square of a binary form over C.
bool is_square_form(const BinaryForm& form);

/// Complete factorization into irreducibles over the integers.
UniFactorization factor_univariate(const UniPoly& f);

/// Complete factorization of an ordinary bivariate polynomial; the integer
/// content is reported in `unit`, so the factor list is valid over Q.
BivarFactorization kronecker_factor(const BivarPoly& f);

/// Factorization of a nonzero Laurent polynomial in three variables that is
/// homogeneous of degree 0; factors are returned homogeneous of degree 0.
struct LaurentFactorization {
  Monomial unit;
  Integer content = 1;
  std::vector<std::pair<LaurentPoly, int>> factors;

  int factor_count() const {
    int n = 0;
    for (const auto& [p, m] : factors) n += m;
    return n;
  }
  LaurentPoly expand(const VarList& vars) const;
};

/// Sets the last variable to 1 and returns the two-variable Laurent
/// polynomial as (unit monomial exponents, ordinary bivariate part).
std::pair<Monomial, BivarPoly> dehomogenize_last(const LaurentPoly& f);

LaurentFactorization factor_homogeneous_laurent(const LaurentPoly& f);

/// Exactly one non-unit irreducible factor, multiplicity 1 (over Q).
bool is_irreducible_laurent(const LaurentPoly& f);

namespace detail {
/// Zassenhaus on a primitive, square-free polynomial with positive leading
/// coefficient and nonzero constant term.
std::vector<UniPoly> zassenhaus(const UniPoly& f);
}  // namespace detail

}  // namespace homfac
