#include "homfac/jaeger.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "homfac/parallel.hpp"
#include "homfac/tutte.hpp"

namespace homfac {

const VarList& homfly_vars() {
  static const VarList vars = make_vars({"x", "y", "z"});
  return vars;
}

LaurentPoly homfly_from_tutte(const BivarPoly& t, int vertices, int edges) {
  const VarList& v = homfly_vars();
  // N = z^2 - x y - y^2, so the second argument is N / z^2.
  LaurentPoly n(v);
  n.add_term({0, 0, 2}, 1);
  n.add_term({1, 1, 0}, -1);
  n.add_term({0, 2, 0}, -1);
  std::vector<LaurentPoly> npow{LaurentPoly::constant(v, 1)};
  LaurentPoly sum(v);
  for (const auto& [e, c] : t.terms()) {
    const int i = e[0], j = e[1];
    while (static_cast<int>(npow.size()) <= j) npow.push_back(npow.back() * n);
    // (-x/y)^i z^(-2j) N^j
    Monomial m{i % 2 == 0 ? 1 : -1, {i, -i, -2 * j}};
    sum += npow[j].times_monomial(m).scaled(c);
  }
  Monomial pre{edges % 2 == 0 ? 1 : -1, {-edges, vertices - 1, edges - vertices + 1}};
  return sum.times_monomial(pre);
}

LaurentPoly homfly_from_tutte(const MultiGraph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("graph without edges");
  return homfly_from_tutte(tutte(g), g.vertex_count(), g.edge_count());
}

BiHomogPoly::BiHomogPoly(Poly poly, int a, int b) : poly_(std::move(poly)), a_(a), b_(b) {
  for (const auto& [e, c] : poly_.terms()) {
    if (e[0] + e[1] != a_ || e[2] + e[3] != b_) throw std::invalid_argument("term of the wrong bidegree");
  }
}

BinaryForm BiHomogPoly::at_y10() const {
  BinaryForm f{a_, std::vector<Integer>(a_ + 1)};
  for (const auto& [e, c] : poly_.terms()) {
    if (e[3] == 0) f.coeffs[e[0]] += c;
  }
  return f;
}

BinaryForm BiHomogPoly::at_y01() const {
  BinaryForm f{a_, std::vector<Integer>(a_ + 1)};
  for (const auto& [e, c] : poly_.terms()) {
    if (e[2] == 0) f.coeffs[e[0]] += c;
  }
  return f;
}

BivarPoly BiHomogPoly::squared_dehomogenized() const {
  BivarPoly r;
  for (const auto& [e, c] : poly_.terms()) r.add_term({e[0], 2 * e[2]}, c);
  return r;
}

BiHomogPoly tilde_tutte(const BivarPoly& t, int vertices, int edges) {
  using P4 = BiHomogPoly::Poly;
  const int dx = vertices - 1;
  const int dy = edges - vertices + 1;
  if (t.degree(0) > dx || t.degree(1) > dy) throw std::logic_error("Tutte polynomial exceeds its expected degrees");
  const P4 x0 = P4::variable(0), x1 = P4::variable(1), y0 = P4::variable(2), y1 = P4::variable(3);
  const P4 u = x1 - x0;            // numerator of 1 - x0/x1
  const P4 w = x0 * y1 - x1 * y0;  // numerator of 1 - x1 y0/(x0 y1)
  std::vector<P4> upow{P4::constant(1)}, wpow{P4::constant(1)};
  P4 f;
  for (const auto& [e, c] : t.terms()) {
    const int i = e[0], j = e[1];
    while (static_cast<int>(upow.size()) <= i) upow.push_back(upow.back() * u);
    while (static_cast<int>(wpow.size()) <= j) wpow.push_back(wpow.back() * w);
    f += (upow[i] * wpow[j]).times_monomial({dy - j, dx - i, 0, dy - j}).scaled(c);
  }
  return BiHomogPoly(std::move(f), edges, dy);
}

BiHomogPoly tilde_tutte(const MultiGraph& g) {
  return tilde_tutte(tutte(g), g.vertex_count(), g.edge_count());
}

// ---------------------------------------------------------------------------
// Coordinate maps

namespace {

RationalFunction one_like(const RationalFunction& f) { return RationalFunction(LaurentPoly::constant(f.num().vars(), 1)); }

bool proportional(const RationalFunction& a0, const RationalFunction& a1, const RationalFunction& b0,
                  const RationalFunction& b1) {
  if ((a0.is_zero() && a1.is_zero()) || (b0.is_zero() && b1.is_zero())) return false;
  return equal(a0 * b1, a1 * b0);
}

}  // namespace

SimplMaps SimplMaps::standard() {
  SimplMaps m;
  m.xi = [](const P1P1Point& p) {
    RationalFunction q = (p.x1 * p.y0) / (p.x0 * p.y1);
    return TorusPoint{p.y0 / p.y1 - q, q};
  };
  m.j0 = [](const TorusPoint& t) {
    RationalFunction one = one_like(t.x);
    return TorusPoint{-(t.x / t.y), one - (t.x + t.y) * t.y};
  };
  m.sigma = [](const TorusPoint& t) {
    RationalFunction one = one_like(t.x);
    return P1P1Point{one - t.x, one, (one - t.x) * (one - t.y), one};
  };
  m.j = [](const P1P1Point& p) { return P1P1Point{p.x0, p.x1, p.y0 * p.y0, p.y1 * p.y1}; };
  return m;
}

bool same_point(const P1P1Point& p, const P1P1Point& q) {
  return proportional(p.x0, p.x1, q.x0, q.x1) && proportional(p.y0, p.y1, q.y0, q.y1);
}

bool verify_simpl(const SimplMaps& maps) {
  VarList v = make_vars({"x0", "x1", "y0", "y1"});
  auto var = [&](const char* name) { return RationalFunction(LaurentPoly::variable(v, name)); };
  P1P1Point p{var("x0"), var("x1"), var("y0"), var("y1")};
  return same_point(maps.sigma(maps.j0(maps.xi(p))), maps.j(p));
}

bool verify_simpl_at(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1,
                     const SimplMaps& maps) {
  VarList v = make_vars({"t"});
  auto c = [&](const Rational& r) { return RationalFunction::constant(v, r); };
  P1P1Point p{c(x0), c(x1), c(y0), c(y1)};
  return same_point(maps.sigma(maps.j0(maps.xi(p))), maps.j(p));
}

PointCheck verify_simpl_at_points(int count, std::uint64_t seed, const SimplMaps& maps) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  PointCheck out;
  while (out.tried < count) {
    Rational x0 = draw(), x1 = draw(), y0 = draw(), y1 = draw();
    x0.canonicalize();
    x1.canonicalize();
    y0.canonicalize();
    y1.canonicalize();
    // Xi is undefined or leaves the torus when a coordinate vanishes.
    if (x0 == 0 || x1 == 0 || y0 == 0 || y1 == 0) {
      ++out.rejected;
      continue;
    }
    bool ok = false;
    try {
      ok = verify_simpl_at(x0, x1, y0, y1, maps);
    } catch (const std::domain_error&) {
      ++out.rejected;
      continue;
    }
    ++out.tried;
    if (ok) ++out.agreed;
  }
  return out;
}

int j_fibre_size(const Rational& b0, const Rational& b1) {
  if (b0 == 0 && b1 == 0) throw std::invalid_argument("[0:0] is not a point of P1");
  return (b0 == 0 || b1 == 0) ? 1 : 2;
}

std::pair<UniPoly, UniPoly> res_restrictions(const BivarPoly& t) {
  if (t.is_zero()) throw std::invalid_argument("restrictions of the zero polynomial");
  const int d = t.degree(1);
  std::vector<Integer> all(t.degree(0) + 1), top(t.degree(0) + 1);
  for (const auto& [e, c] : t.terms()) {
    all[e[0]] += c;
    if (e[1] == d) top[e[0]] += c;
  }
  return {UniPoly(std::move(all)).compose_one_minus_x(), UniPoly(std::move(top)).compose_one_minus_x()};
}

RiquaConditions riqua_conditions(const BiHomogPoly& f) {
  RiquaConditions r;
  r.a_even = f.a() % 2 == 0;
  r.sq10 = is_square_form(f.at_y10());
  r.sq01 = is_square_form(f.at_y01());
  return r;
}

int squared_substitution_factor_count(const BiHomogPoly& f) {
  const auto& p = f.poly();
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  const auto mono = p.monomial_content();
  // x1^k and y1^l in F become x1^k and y1^(2l) after y -> y^2; x0 and y0
  // powers survive dehomogenization and are counted by the factorizer.
  BiHomogPoly stripped(p.divided_by_monomial({0, mono[1], 0, mono[3]}), f.a() - mono[1], f.b() - mono[3]);
  return mono[1] + 2 * mono[3] + kronecker_factor(stripped.squared_dehomogenized()).factor_count();
}

// ---------------------------------------------------------------------------
// Certificates

std::string to_string(Verdict v) {
  return v == Verdict::CertifiedIrreducible ? "CertifiedIrreducible" : "Inconclusive";
}

namespace {

std::string form_to_string(const BinaryForm& f) {
  LaurentPoly p(make_vars({"x0", "x1"}));
  for (int i = 0; i <= f.degree; ++i) p.add_term({i, f.degree - i}, f.coeffs[i]);
  return p.to_string();
}

std::string parity(int n) { return n % 2 == 0 ? "even" : "odd"; }

}  // namespace

Certificate irreducibility_certificate(const MultiGraph& g) {
  if (!is_2connected(g)) throw std::invalid_argument("graph is not 2-connected");
  Certificate c;
  c.graph = g.name().empty() ? g.describe() : g.name();
  c.vertices = g.vertex_count();
  c.edges = g.edge_count();
  c.h1 = cycle_rank(g);

  const BivarPoly t = tutte(g);
  const BiHomogPoly f = tilde_tutte(t, c.vertices, c.edges);
  const RiquaConditions rc = riqua_conditions(f);
  const UniPoly tx1 = tutte_at_y1(t);

  c.edge_parity = {rc.a_even, true, "|E| = " + std::to_string(c.edges) + " " + parity(c.edges)};
  c.sq10 = {rc.sq10, true, "F(x0,x1,1,0) = " + form_to_string(f.at_y10())};
  c.sq01 = {rc.sq01, true,
            "F(x0,x1,0,1) = " + form_to_string(f.at_y01()) + "; h1 = " + std::to_string(c.h1) + " " + parity(c.h1)};
  c.paper_v_parity = {c.vertices % 2 == 0, false, "|V| = " + std::to_string(c.vertices) + " " + parity(c.vertices)};
  bool squarefree = true;
  for (const auto& [q, m] : squarefree_decomposition(tx1).factors) squarefree = squarefree && m == 1;
  c.paper_tx1_square = {is_square_over_C(tx1), false,
                        "T(x,1) = " + tx1.to_string() + (squarefree ? ", square-free" : "")};
  c.verdict = rc.all_hold() ? Verdict::Inconclusive : Verdict::CertifiedIrreducible;
  return c;
}

SearchSummary search_counterexamples(const SearchOptions& opts, const std::function<void(const Certificate&)>& on_hit) {
  SearchSummary s;
  std::vector<MultiGraph> graphs;
  enumerate_2connected(opts.enumeration, [&](const MultiGraph& g) {
    graphs.push_back(g);
    return true;
  });
  s.enumerated = static_cast<long>(graphs.size());

  std::vector<char> keep(graphs.size(), 1);
  if (opts.planar_filter) {
    parallel_for(graphs.size(), opts.jobs, [&](std::size_t i) { keep[i] = is_planar(graphs[i]) ? 1 : 0; });
  }
  std::vector<std::optional<Certificate>> certs(graphs.size());
  parallel_for(graphs.size(), opts.jobs, [&](std::size_t i) {
    if (keep[i]) certs[i] = irreducibility_certificate(graphs[i]);
  });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!keep[i]) {
      ++s.nonplanar_skipped;
      continue;
    }
    const Certificate& c = *certs[i];
    ++s.examined;
    const bool derived_all = c.verdict == Verdict::Inconclusive;
    const bool paper_all = c.edge_parity.holds && c.paper_v_parity.holds && c.paper_tx1_square.holds;
    if (derived_all != paper_all) ++s.readings_disagree;
    if (derived_all) {
      ++s.inconclusive;
      on_hit(c);
    } else {
      ++s.certified;
    }
  }
  return s;
}

}  // namespace homfac
