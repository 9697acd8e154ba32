#include "doctest.h"

#include <map>

#include "homfac/identities.hpp"
#include "homfac/tutte.hpp"

using namespace homfac;

namespace {

std::map<std::string, bool> by_name(const std::vector<IdentityRow>& rows) {
  std::map<std::string, bool> m;
  for (const auto& r : rows) m[r.name] = r.passed;
  return m;
}

}  // namespace

TEST_CASE("all identities hold by default") {
  for (const auto& r : verify_identities()) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("seeded random points pass") {
  IdentityOptions o;
  o.seed = 7;
  auto m = by_name(verify_identities(o));
  CHECK(m.at("composite_map_random_points"));
}

TEST_CASE("a sign error in Sigma is caught") {
  IdentityOptions o;
  o.exhaustive_edges = 3;
  auto sigma = o.maps.sigma;
  o.maps.sigma = [sigma](const TorusPoint& p) {
    P1P1Point q = sigma(p);
    q.y0 = -q.y0;
    return q;
  };
  auto m = by_name(verify_identities(o));
  CHECK_FALSE(m.at("composite_map_symbolic"));
  CHECK_FALSE(m.at("composite_map_at_point"));
  CHECK_FALSE(m.at("composite_map_random_points"));
  CHECK(m.at("tutte_vs_whitney"));
}

TEST_CASE("a broken J is caught by the fibre row") {
  IdentityOptions o;
  o.exhaustive_edges = 3;
  o.maps.j = [](const P1P1Point& p) { return P1P1Point{p.x0, p.x1, p.y0 * p.y0 * p.y0, p.y1 * p.y1 * p.y1}; };
  auto m = by_name(verify_identities(o));
  CHECK_FALSE(m.at("j_fibres"));
  CHECK_FALSE(m.at("composite_map_symbolic"));
}

TEST_CASE("a wrong Tutte implementation is caught") {
  IdentityOptions o;
  o.exhaustive_edges = 4;
  o.tutte_impl = [](const MultiGraph& g) {
    BivarPoly t = tutte(g);
    if (g.edge_count() == 3) t.add_term({0, 1}, 1);
    return t;
  };
  auto m = by_name(verify_identities(o));
  CHECK_FALSE(m.at("tutte_vs_whitney"));
  CHECK_FALSE(m.at("homfly_vs_whitney"));
  CHECK(m.at("composite_map_symbolic"));
}
