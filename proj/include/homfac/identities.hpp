#pragma once

// Batch of exact identity checks behind `homfac verify-identities`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "homfac/graph.hpp"
#include "homfac/jaeger.hpp"
#include "homfac/sparse_poly.hpp"

namespace homfac {

struct IdentityOptions {
  std::uint64_t seed = 1;
  int random_points = 25;
  /// Connected graphs up to this many edges enter the Tutte agreement rows.
  int exhaustive_edges = 6;
  SimplMaps maps = SimplMaps::standard();
  /// Tutte implementation under test; the Whitney expansion is the oracle.
  std::function<BivarPoly(const MultiGraph&)> tutte_impl;
};

struct IdentityRow {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<IdentityRow> verify_identities(const IdentityOptions& opts = {});

}  // namespace homfac
