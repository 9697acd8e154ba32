#pragma once

// HOMFLY polynomials of Jaeger links from Tutte polynomials, the coordinate
// maps relating the two, and the square-restriction irreducibility test.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "homfac/factorization.hpp"
#include "homfac/graph.hpp"
#include "homfac/laurent_poly.hpp"
#include "homfac/rational_function.hpp"
#include "homfac/sparse_poly.hpp"
#include "homfac/uni_poly.hpp"

namespace homfac {

/// Variables (x, y, z) used for HOMFLY polynomials.
const VarList& homfly_vars();

/// (y/z)^(|V|-1) (-z/x)^|E| T_G(-x/y, 1 - (x+y)y/z^2), expanded exactly.
LaurentPoly homfly_from_tutte(const MultiGraph& g);
LaurentPoly homfly_from_tutte(const BivarPoly& t, int vertices, int edges);

/// Polynomial in (x0, x1, y0, y1), bihomogeneous of bidegree (a, b).
class BiHomogPoly {
 public:
  using Poly = SparsePoly<4>;

  /// Throws std::invalid_argument if some term has the wrong bidegree.
  BiHomogPoly(Poly poly, int a, int b);

  const Poly& poly() const { return poly_; }
  int a() const { return a_; }
  int b() const { return b_; }

  /// F(x0, x1, 1, 0) as a form of degree a.
  BinaryForm at_y10() const;
  /// F(x0, x1, 0, 1) as a form of degree a.
  BinaryForm at_y01() const;
  /// F(x, 1, y^2, 1) as an ordinary bivariate polynomial.
  BivarPoly squared_dehomogenized() const;

 private:
  Poly poly_;
  int a_;
  int b_;
};

/// Numerator of T_G(1 - x0/x1, 1 - x1 y0/(x0 y1)); bidegree (|E|, h1).
BiHomogPoly tilde_tutte(const MultiGraph& g);
BiHomogPoly tilde_tutte(const BivarPoly& t, int vertices, int edges);

/// Point of P1 x P1 with rational-function coordinates [x0:x1], [y0:y1].
struct P1P1Point {
  RationalFunction x0, x1, y0, y1;
};

/// Point of the torus (C*)^2.
struct TorusPoint {
  RationalFunction x, y;
};

/// The maps of the simplification identity, injectable so that tests can
/// substitute deliberately wrong versions.
struct SimplMaps {
  std::function<TorusPoint(const P1P1Point&)> xi;
  std::function<TorusPoint(const TorusPoint&)> j0;
  std::function<P1P1Point(const TorusPoint&)> sigma;
  std::function<P1P1Point(const P1P1Point&)> j;

  static SimplMaps standard();
};

/// Whether two points of P1 x P1 agree (componentwise proportional).
bool same_point(const P1P1Point& p, const P1P1Point& q);

/// Symbolic check that J and Sigma o J0 o Xi coincide.
bool verify_simpl(const SimplMaps& maps = SimplMaps::standard());

struct PointCheck {
  int agreed = 0;
  int tried = 0;
  int rejected = 0;
};

/// Check at `count` random rational points; points on indeterminacy loci are
/// rejected and redrawn.
PointCheck verify_simpl_at_points(int count, std::uint64_t seed, const SimplMaps& maps = SimplMaps::standard());

/// Check at one point of P1 x P1 given by integer coordinates.
bool verify_simpl_at(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1,
                     const SimplMaps& maps = SimplMaps::standard());

/// Number of points of P1 in the fibre of [s0:s1] -> [s0^2:s1^2] over [b0:b1].
int j_fibre_size(const Rational& b0, const Rational& b1);

/// (t(1 - x, 1), sum_i t_{i,d} (1 - x)^i) with d the top y-degree of t.
std::pair<UniPoly, UniPoly> res_restrictions(const BivarPoly& t);

struct RiquaConditions {
  bool a_even = false;
  bool sq10 = false;
  bool sq01 = false;

  bool all_hold() const { return a_even && sq10 && sq01; }
};

RiquaConditions riqua_conditions(const BiHomogPoly& f);

/// Number of irreducible factors (with multiplicity, over Q) of
/// F(x0, x1, y0^2, y1^2).
int squared_substitution_factor_count(const BiHomogPoly& f);

enum class Verdict { CertifiedIrreducible, Inconclusive };

std::string to_string(Verdict v);

struct Condition {
  bool holds = false;
  /// true: decides the verdict; false: alternative reading, reported only.
  bool derived = true;
  std::string detail;
};

struct Certificate {
  std::string graph;
  int vertices = 0;
  int edges = 0;
  int h1 = 0;
  Condition edge_parity;
  Condition sq10;
  Condition sq01;
  Condition paper_v_parity;
  Condition paper_tx1_square;
  Verdict verdict = Verdict::CertifiedIrreducible;
};

/// Throws std::invalid_argument when g is not 2-connected.
Certificate irreducibility_certificate(const MultiGraph& g);

struct SearchOptions {
  EnumerationOptions enumeration;
  bool planar_filter = true;
  int jobs = 1;
};

struct SearchSummary {
  long enumerated = 0;
  long nonplanar_skipped = 0;
  long examined = 0;
  long certified = 0;
  long inconclusive = 0;
  /// Graphs where the derived and the paper-stated conditions disagree on
  /// whether all conditions hold.
  long readings_disagree = 0;
};

/// Runs the certificate over every enumerated graph (planar ones only when
/// the filter is on) and reports each Inconclusive certificate, in
/// enumeration order.
SearchSummary search_counterexamples(const SearchOptions& opts, const std::function<void(const Certificate&)>& on_hit);

}  // namespace homfac
