#pragma once

// Test-side oracles and generators. Nothing here calls the library code it
// is used to check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "homfac/graph.hpp"
#include "homfac/laurent_poly.hpp"
#include "homfac/sparse_poly.hpp"
#include "homfac/uni_poly.hpp"

namespace testsupport {

using homfac::BivarPoly;
using homfac::Integer;
using homfac::MultiGraph;
using homfac::UniPoly;

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

inline int rank_of(const MultiGraph& g, unsigned long mask) {
  Dsu d(g.vertex_count());
  int r = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (mask >> i & 1) r += d.unite(g.edges()[i].first, g.edges()[i].second);
  }
  return r;
}

inline Integer binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Whitney rank expansion, expanding (x-1)^a (y-1)^b by binomials.
inline BivarPoly whitney_tutte(const MultiGraph& g) {
  const int m = g.edge_count();
  const int full = rank_of(g, (1UL << m) - 1);
  // counts[a][b] = number of subsets with corank a, nullity b
  std::vector<std::vector<long>> counts(full + 1, std::vector<long>(m + 1));
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    const int r = rank_of(g, mask);
    counts[full - r][__builtin_popcountl(mask) - r]++;
  }
  BivarPoly t;
  for (int a = 0; a <= full; ++a) {
    for (int b = 0; b <= m; ++b) {
      if (!counts[a][b]) continue;
      for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
          Integer c = binom(a, i) * binom(b, j) * counts[a][b];
          if ((a - i + b - j) % 2) c = -c;
          t.add_term({i, j}, c);
        }
      }
    }
  }
  return t;
}

/// N_k for k = 0..|V|-1 by subset enumeration.
inline std::vector<Integer> brute_forest_counts(const MultiGraph& g) {
  std::vector<Integer> n(g.vertex_count());
  for (unsigned long mask = 0; mask < (1UL << g.edge_count()); ++mask) {
    const int k = __builtin_popcountl(mask);
    if (rank_of(g, mask) == k) n[k] += 1;
  }
  return n;
}

inline bool brute_connected(int n, const std::vector<MultiGraph::Edge>& edges, int skip = -1) {
  Dsu d(n);
  for (auto [u, v] : edges) {
    if (u != skip && v != skip) d.unite(u, v);
  }
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (v == skip) continue;
    if (root < 0) root = d.find(v);
    if (d.find(v) != root) return false;
  }
  return n > 0;
}

/// Loopless, connected, and still connected after deleting any one vertex
/// (2 vertices: at least two parallel edges).
inline bool brute_2connected(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (g.loop_count() > 0 || !brute_connected(n, g.edges())) return false;
  if (n == 2) return g.edge_count() >= 2;
  if (n < 2) return false;
  for (int v = 0; v < n; ++v) {
    if (!brute_connected(n, g.edges(), v)) return false;
  }
  return true;
}

/// Random connected multigraph: a random spanning tree plus random extra edges.
inline MultiGraph random_connected(std::mt19937_64& rng, int n, int m, bool loops = true) {
  if (n == 1 && !loops) m = 0;
  std::vector<MultiGraph::Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(e.size()) < m) {
    int u = pick(rng), v = pick(rng);
    if (u == v && !loops) continue;
    e.emplace_back(u, v);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : e) u = perm[u], v = perm[v];
  return MultiGraph(n, e);
}

/// Random 2-connected loopless graph with at most max_edges edges.
inline MultiGraph random_2connected(std::mt19937_64& rng, int max_edges, bool multi = true) {
  for (;;) {
    int n = std::uniform_int_distribution<int>(3, std::max(3, max_edges - 1))(rng);
    int m = std::uniform_int_distribution<int>(n, max_edges)(rng);
    if (m < n) continue;
    MultiGraph g = random_connected(rng, n, m, false);
    if (!multi && !g.is_simple()) continue;
    if (brute_2connected(g)) return g;
  }
}

/// Random polynomial of the given degree with coefficients in [-b, b] and
/// nonzero leading coefficient.
inline UniPoly random_uni(std::mt19937_64& rng, int degree, int b) {
  std::uniform_int_distribution<int> c(-b, b);
  std::vector<Integer> v(degree + 1);
  for (auto& a : v) a = c(rng);
  while (v.back() == 0) v.back() = c(rng);
  return UniPoly(v);
}

/// Eisenstein at p: monic, p divides the lower coefficients, p^2 does not
/// divide the constant. Irreducible over Q for degree >= 1.
inline UniPoly random_eisenstein(std::mt19937_64& rng, int degree, int p = 2) {
  std::uniform_int_distribution<int> c(-3, 3), s(0, 1);
  std::vector<Integer> v(degree + 1);
  for (int i = 1; i < degree; ++i) v[i] = p * c(rng);
  int k = 0;
  while (k % p == 0) k = c(rng);
  v[0] = p * k;
  v[degree] = 1;
  UniPoly f(v);
  // x -> x + a preserves irreducibility and hides the shape
  return f.taylor_shift(std::uniform_int_distribution<int>(-2, 2)(rng));
}

/// y^n + x*g(x, y) with the y^0 part of x-valuation exactly one: Eisenstein
/// at the prime x of Q[x][y], hence irreducible. Variables are swapped at
/// random.
inline BivarPoly random_bivar_irreducible(std::mt19937_64& rng, int total_degree) {
  std::uniform_int_distribution<int> c(-3, 3), d(1, total_degree);
  const int n = d(rng);
  BivarPoly f = BivarPoly::variable(1, n);
  int k = 0;
  while (k == 0) k = c(rng);
  f.add_term({1, 0}, k);
  for (int j = 0; j < n; ++j) {
    for (int i = 1; i + j <= total_degree; ++i) {
      if (j == 0 && i == 1) continue;
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) f.add_term({i, j}, c(rng));
    }
  }
  if (std::uniform_int_distribution<int>(0, 1)(rng)) {
    BivarPoly g;
    for (const auto& [e, v] : f.terms()) g.add_term({e[1], e[0]}, v);
    f = g;
  }
  return f;
}

inline UniPoly uni_from_text(const std::string& s) {
  auto vars = homfac::make_vars({"x"});
  homfac::LaurentPoly p = homfac::parse_laurent(s, vars);
  std::vector<Integer> c(p.is_zero() ? 0 : p.max_degree(0) + 1);
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return UniPoly(c);
}

inline BivarPoly bivar_from_text(const std::string& s) {
  auto vars = homfac::make_vars({"x", "y"});
  homfac::LaurentPoly p = homfac::parse_laurent(s, vars);
  BivarPoly b;
  for (const auto& [e, v] : p.terms()) b.add_term({e[0], e[1]}, v);
  return b;
}

}  // namespace testsupport
