#include "doctest.h"

#include <algorithm>
#include <random>

#include "homfac/factorization.hpp"
#include "support.hpp"

using namespace homfac;
using testsupport::bivar_from_text;
using testsupport::uni_from_text;

namespace {

struct FrozenCase {
  const char* poly;
  long content;
  std::vector<std::pair<const char*, int>> factors;
};

// Factor lists computed with sympy.factor_list.
const std::vector<FrozenCase> kUnivariate = {
    {"x^12 - 1", 1, {{"x - 1", 1}, {"x + 1", 1}, {"x^2 - x + 1", 1}, {"x^2 + 1", 1}, {"x^2 + x + 1", 1},
                     {"x^4 - x^2 + 1", 1}}},
    {"x^4 - 10*x^2 + 1", 1, {{"x^4 - 10*x^2 + 1", 1}}},
    {"x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576", 1, {{"x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576", 1}}},
    {"3*x^9 - 7*x^8 + x^7 - x^6 - 15*x^5 + 39*x^4 - 21*x^3 + 53*x^2 - 8*x + 20", 1,
     {{"3*x + 5", 1}, {"x - 2", 2}, {"x^2 + 1", 3}}},
    {"x^6 - 3*x^5 + 5*x^4 - 5*x^3 + 5*x^2 - 3*x + 1", 1, {{"x^6 - 3*x^5 + 5*x^4 - 5*x^3 + 5*x^2 - 3*x + 1", 1}}},
    {"2*x^13 + 6*x^12 - x^11 - 4*x^10 - 9*x^9 + 4*x^8 + 45*x^7 + x^6 - 19*x^5 - 39*x^4 + 12*x^3 + 7*x^2 + 2*x - 7",
     1, {{"x - 1", 1}, {"2*x^2 + 2*x + 1", 1}, {"x^5 - 2*x + 7", 1}, {"x^5 + 3*x^4 - x + 1", 1}}},
    {"x^11 - x^9 + 2*x^7 - x^5 + x^3", 1, {{"x", 3}, {"x^4 - x^2 + 1", 1}, {"x^4 + 1", 1}}},
    {"30*x^4 - 30", 30, {{"x - 1", 1}, {"x + 1", 1}, {"x^2 + 1", 1}}},
};

const std::vector<FrozenCase> kBivariate = {
    {"x^2 + 2*x*y + x + y^2 + y", 1, {{"x + y", 1}, {"x + y + 1", 1}}},
    {"x^2 - y^2", 1, {{"x - y", 1}, {"x + y", 1}}},
    {"x^3 + 3*x^2 + 4*x*y + 2*x + y^3 + 3*y^2 + 2*y", 1, {{"x^3 + 3*x^2 + 4*x*y + 2*x + y^3 + 3*y^2 + 2*y", 1}}},
    {"x^4*y^5 + 4*x^4*y^3 + 4*x^4*y - x^3*y^4 + 10*x^3*y^3 + 20*x^3*y + 4*x^3 - 3*x^2*y^7 - 12*x^2*y^5 + "
     "x^2*y^4 - 13*x^2*y^3 + 4*x^2*y^2 + 21*x^2*y + 24*x^2 + 6*x*y^6 - 30*x*y^5 + 12*x*y^4 - 62*x*y^3 + "
     "11*x*y^2 - 14*x*y + 45*x - 3*y^5 + 30*y^4 - 75*y^3 + y^2 - 10*y + 25",
     1, {{"x*y^2 + 2*x - y + 5", 2}, {"x^2*y + x - 3*y^3 + 1", 1}}},
    {"x^7 - x^6*y - x^5*y^2 - 2*x^4*y^3 + x^3*y^4 - x^2*y^5 - x*y^6 - 2*y^7", 1,
     {{"x - 2*y", 1}, {"x^2 + x*y + y^2", 1}, {"x^4 + y^4", 1}}},
    {"x^4 + 4*y^4", 1, {{"x^2 - 2*x*y + 2*y^2", 1}, {"x^2 + 2*x*y + 2*y^2", 1}}},
    {"6*x^4*y + 18*x^3*y^2 + 6*x^3 + 18*x^2*y^3 + 18*x^2*y + 6*x*y^4 + 18*x*y^2 + 6*y^3", 6,
     {{"x*y + 1", 1}, {"x + y", 3}}},
    {"x^6 - y^6", 1, {{"x - y", 1}, {"x + y", 1}, {"x^2 - x*y + y^2", 1}, {"x^2 + x*y + y^2", 1}}},
};

// Sign-normalized so that associates compare equal.
UniPoly canon(UniPoly p) { return p.lc() < 0 ? -p : p; }
BivarPoly canon(BivarPoly p) { return p.leading_term().second < 0 ? -p : p; }

std::string to_string_any(const UniPoly& p) { return p.to_string(); }
std::string to_string_any(const BivarPoly& p) { return to_string(p); }

template <class Poly>
std::vector<std::pair<std::string, int>> as_multiset(const std::vector<std::pair<Poly, int>>& fs) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [p, m] : fs) out.emplace_back(to_string_any(canon(p)), m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("squarefree_decomposition") {
  auto d = squarefree_decomposition(UniPoly{1, 1} * UniPoly{1, 1} * UniPoly{-2, 1});
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0] == std::pair<UniPoly, int>{UniPoly{-2, 1}, 1});
  CHECK(d.factors[1] == std::pair<UniPoly, int>{UniPoly{1, 1}, 2});

  d = squarefree_decomposition(UniPoly{1, 1, 1});
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0].second == 1);

  d = squarefree_decomposition(UniPoly{1, 1, 1, 1});
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0] == std::pair<UniPoly, int>{UniPoly{1, 1, 1, 1}, 1});
  CHECK_THROWS(squarefree_decomposition(UniPoly{}));
}

TEST_CASE("squarefree_decomposition reproduces the input") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    UniPoly a = testsupport::random_uni(rng, 2, 4), b = testsupport::random_uni(rng, 3, 4);
    UniPoly f = a * a * a * b * testsupport::random_uni(rng, 1, 3);
    CHECK(expand(squarefree_decomposition(f)) == f);
  }
}

TEST_CASE("is_square_over_C examples") {
  CHECK(is_square_over_C(UniPoly{1, 2, 1}));
  CHECK_FALSE(is_square_over_C(UniPoly{1, 0, 1}));
  CHECK(is_square_over_C(UniPoly{0, 0, 2}));
  CHECK(is_square_over_C(UniPoly{5}));
  CHECK(is_square_over_C(UniPoly{}));
}

TEST_CASE("is_square_form") {
  // coeffs[i] multiplies x0^i x1^(d-i)
  CHECK(is_square_form(BinaryForm{4, {0, 0, 1, 0, 0}}));    // (x0 x1)^2
  CHECK_FALSE(is_square_form(BinaryForm{3, {0, 0, 1, 0}}));  // x0^2 x1
  // x1 * homogenization of x^2 - 3x + 3, degree 3
  CHECK_FALSE(is_square_form(BinaryForm{3, {0, 3, -3, 1}}));
  CHECK(is_square_form(BinaryForm{2, {1, 2, 1}}));
  CHECK_FALSE(is_square_form(BinaryForm{2, {1, 0, 1}}));
}

TEST_CASE("factor_univariate examples") {
  auto f = factor_univariate(UniPoly{-1, 0, 0, 0, 1});
  CHECK(f.factor_count() == 3);
  CHECK(expand(f) == UniPoly({-1, 0, 0, 0, 1}));
  auto g = factor_univariate(UniPoly{1, 1, 1, 1});
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].first == UniPoly{1, 1});
  CHECK(g.factors[1].first == UniPoly{1, 0, 1});
}

TEST_CASE("factor_univariate matches frozen factor lists") {
  for (const auto& c : kUnivariate) {
    CAPTURE(c.poly);
    UniPoly f = uni_from_text(c.poly);
    auto got = factor_univariate(f);
    std::vector<std::pair<UniPoly, int>> want;
    for (auto [s, m] : c.factors) want.emplace_back(uni_from_text(s), m);
    CHECK(as_multiset(got.factors) == as_multiset(want));
    CHECK(abs(got.unit) == c.content);
    CHECK(expand(got) == f);
  }
}

TEST_CASE("kronecker_factor matches frozen factor lists") {
  for (const auto& c : kBivariate) {
    CAPTURE(c.poly);
    BivarPoly f = bivar_from_text(c.poly);
    auto got = kronecker_factor(f);
    std::vector<std::pair<BivarPoly, int>> want;
    for (auto [s, m] : c.factors) want.emplace_back(bivar_from_text(s), m);
    CHECK(as_multiset(got.factors) == as_multiset(want));
    CHECK(abs(got.unit) == c.content);
    CHECK(expand(got) == f);
  }
}

TEST_CASE("univariate factors have no rational roots unless linear") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    UniPoly f = testsupport::random_uni(rng, 3, 5) * testsupport::random_uni(rng, 4, 5);
    auto fac = factor_univariate(f);
    CHECK(expand(fac) == f);
    for (const auto& [p, m] : fac.factors) {
      if (p.degree() < 2) continue;
      // rational root test: a root r/s has r | p(0) and s | lc
      long c0 = p[0].get_si(), lc = p.lc().get_si();
      if (c0 == 0) {
        FAIL("factor of degree >= 2 divisible by x");
        continue;
      }
      for (long r = 1; r <= std::abs(c0); ++r) {
        if (c0 % r) continue;
        for (long s = 1; s <= std::abs(lc); ++s) {
          if (lc % s) continue;
          Rational q{Integer(r), Integer(s)};
          q.canonicalize();
          CHECK(p.evaluate(q) != 0);
          CHECK(p.evaluate(-q) != 0);
        }
      }
    }
  }
}

TEST_CASE("kronecker_factor expands back on random products") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    BivarPoly f, g;
    std::uniform_int_distribution<int> c(-3, 3), e(0, 3);
    for (int k = 0; k < 4; ++k) f.add_term({e(rng), e(rng)}, c(rng));
    for (int k = 0; k < 3; ++k) g.add_term({e(rng), e(rng)}, c(rng));
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(expand(kronecker_factor(f * g)) == f * g);
  }
}

TEST_CASE("is_irreducible_laurent on dehomogenized forms") {
  VarList v = make_vars({"x", "y", "z"});
  CHECK(is_irreducible_laurent(parse_laurent("z^2*y^-2 - 2*x*y^-1 - x^2*y^-2", v)));
  CHECK_FALSE(is_irreducible_laurent(parse_laurent("(x*z^-1 + y*z^-1)*(x*y^-1 + 1 + z*y^-1)", v)));
  CHECK_FALSE(is_irreducible_laurent(parse_laurent("(x*y^-1 - z^2*y^-2)^2", v)));
  CHECK_THROWS(is_irreducible_laurent(parse_laurent("x + 1", v)));
}

TEST_CASE("factor_homogeneous_laurent reproduces the input up to a unit") {
  VarList v = make_vars({"x", "y", "z"});
  LaurentPoly f = parse_laurent("(x*z^-1 + y*z^-1)^2*(x^2*y^-2 - z*y^-1 + 3)*x^-3*y^3", v);
  auto fac = factor_homogeneous_laurent(f);
  CHECK(fac.factor_count() == 3);
  for (const auto& [p, m] : fac.factors) CHECK(is_homogeneous_of_degree(p, 0));
  CHECK(fac.expand(v) == f);
}
