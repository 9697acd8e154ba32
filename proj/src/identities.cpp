#include "homfac/identities.hpp"

#include <random>
#include <sstream>

#include "homfac/tutte.hpp"

namespace homfac {

namespace {

IdentityRow row(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail)}; }

std::string count_detail(int bad, int total, const std::string& first_bad) {
  std::ostringstream os;
  os << (total - bad) << "/" << total;
  if (bad) os << ", first failure " << first_bad;
  return os.str();
}

// Runs check on every graph; returns the failure count and first failing graph.
template <class F>
IdentityRow over_graphs(std::string name, const std::vector<MultiGraph>& graphs, F&& check) {
  int bad = 0, total = 0;
  std::string first;
  for (const auto& g : graphs) {
    ++total;
    bool ok = false;
    try {
      ok = check(g);
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok && bad++ == 0) first = g.describe();
  }
  return row(std::move(name), bad == 0, count_detail(bad, total, first));
}

}  // namespace

std::vector<IdentityRow> verify_identities(const IdentityOptions& opts) {
  const auto impl = opts.tutte_impl ? opts.tutte_impl : [](const MultiGraph& g) { return tutte(g); };
  std::vector<IdentityRow> rows;

  rows.push_back(row("composite_map_symbolic", verify_simpl(opts.maps), "J = Sigma o J0 o Xi as rational maps"));

  rows.push_back(row("composite_map_at_point", verify_simpl_at(1, 2, 1, 3, opts.maps), "([1:2], [1:3])"));

  {
    PointCheck pc = verify_simpl_at_points(opts.random_points, opts.seed, opts.maps);
    std::ostringstream os;
    os << pc.agreed << "/" << pc.tried << " agree, " << pc.rejected << " rejected, seed " << opts.seed;
    rows.push_back(row("composite_map_random_points", pc.agreed == pc.tried, os.str()));
  }

  {
    // [s0:s1] and [s0:-s1] share an image under J; [1:0] and [0:1] are
    // branch points with a single preimage.
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> d(1, 9);
    VarList v = make_vars({"t"});
    auto c = [&](long k) { return RationalFunction::constant(v, Rational(k)); };
    int bad = 0;
    for (int i = 0; i < 20; ++i) {
      long s0 = d(rng), s1 = d(rng), x0 = d(rng), x1 = d(rng);
      P1P1Point p{c(x0), c(x1), c(s0), c(s1)}, q{c(x0), c(x1), c(s0), c(-s1)};
      bool ok = !same_point(p, q) && same_point(opts.maps.j(p), opts.maps.j(q)) &&
                j_fibre_size(s0 * s0, s1 * s1) == 2;
      if (!ok) ++bad;
    }
    bool branch = j_fibre_size(1, 0) == 1 && j_fibre_size(0, 1) == 1;
    rows.push_back(row("j_fibres", bad == 0 && branch, count_detail(bad, 20, "random pair") +
                                                           (branch ? "" : ", branch points wrong")));
  }

  {
    // Restrictions of t = x + y, x^2 + x + y and y.
    BivarPoly x = BivarPoly::variable(0), y = BivarPoly::variable(1);
    UniPoly one_minus_x{1, -1};
    struct Case {
      BivarPoly t;
      UniPoly all, top;
    };
    std::vector<Case> cases{
        {x + y, UniPoly{2, -1}, UniPoly{1}},
        {x * x + x + y, one_minus_x * one_minus_x + one_minus_x + UniPoly{1}, UniPoly{1}},
        {y, UniPoly{1}, UniPoly{1}},
    };
    int bad = 0;
    for (const auto& cs : cases) {
      auto [all, top] = res_restrictions(cs.t);
      if (all != cs.all || top != cs.top) ++bad;
    }
    rows.push_back(row("restriction_samples", bad == 0, count_detail(bad, 3, "sample")));
  }

  std::vector<MultiGraph> graphs;
  for (auto& g : all_connected_multigraphs(opts.exhaustive_edges)) {
    if (g.edge_count() > 0) graphs.push_back(std::move(g));
  }

  {
    MultiGraph k2(2, {{0, 1}});
    LaurentPoly h = homfly_from_tutte(impl(k2), 2, 1);
    rows.push_back(row("homfly_of_k2", h == LaurentPoly::constant(homfly_vars(), 1), h.to_string()));
  }

  rows.push_back(over_graphs("tutte_vs_whitney", graphs, [&](const MultiGraph& g) {
    return impl(g) == tutte_oracle(g);
  }));

  rows.push_back(over_graphs("homfly_vs_whitney", graphs, [&](const MultiGraph& g) {
    const int n = g.vertex_count(), e = g.edge_count();
    return homfly_from_tutte(impl(g), n, e) == homfly_from_tutte(tutte_oracle(g), n, e);
  }));

  rows.push_back(over_graphs("homfly_degree_zero", graphs, [&](const MultiGraph& g) {
    return is_homogeneous_of_degree(homfly_from_tutte(impl(g), g.vertex_count(), g.edge_count()), 0);
  }));

  rows.push_back(over_graphs("tilde_tutte_bidegree", graphs, [&](const MultiGraph& g) {
    BiHomogPoly f = tilde_tutte(impl(g), g.vertex_count(), g.edge_count());
    return f.a() == g.edge_count() && f.b() == cycle_rank(g);
  }));

  rows.push_back(over_graphs("tx1_degree", graphs, [&](const MultiGraph& g) {
    return tutte_at_y1(impl(g)).degree() == g.vertex_count() - 1;
  }));

  rows.push_back(over_graphs("face_polynomial_forests", graphs, [&](const MultiGraph& g) {
    return tutte_at_y1(impl(g)).compose_one_minus_x() == forest_expansion(forest_counts(g));
  }));

  return rows;
}

}  // namespace homfac
