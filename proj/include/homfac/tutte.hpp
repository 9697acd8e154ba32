#pragma once

#include <vector>

#include "homfac/graph.hpp"
#include "homfac/integer.hpp"
#include "homfac/sparse_poly.hpp"
#include "homfac/uni_poly.hpp"

namespace homfac {

/// Tutte polynomial T_G(x, y) by deletion-contraction on parallel classes,
/// memoized on a refined relabeling of each minor. Throws
/// std::invalid_argument on disconnected input; no edges gives 1.
BivarPoly tutte(const MultiGraph& g);

/// Whitney rank expansion over all edge subsets. Independent of tutte().
/// Throws std::length_error when |E| exceeds max_edges.
BivarPoly tutte_oracle(const MultiGraph& g, int max_edges = 16);

/// N_k = number of k-edge acyclic edge subsets, k = 0..|V|-1, counted by
/// direct search over forests.
std::vector<Integer> forest_counts(const MultiGraph& g);

/// T_G(1 - x, 1).
UniPoly face_polynomial(const MultiGraph& g);

/// sum_k N_k (-x)^(r - k) with r = |V| - 1.
UniPoly forest_expansion(const std::vector<Integer>& counts);

/// T(x, 1) as a univariate polynomial.
UniPoly tutte_at_y1(const BivarPoly& t);

/// Number of spanning trees by the matrix-tree theorem (exact, Bareiss).
Integer spanning_tree_count(const MultiGraph& g);

}  // namespace homfac
