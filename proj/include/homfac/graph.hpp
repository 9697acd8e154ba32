#pragma once

// Finite undirected multigraphs with loops, connectivity tests, a canonical
// form for isomorph rejection, planarity and enumeration of small
// 2-connected graphs.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homfac {

class MultiGraph {
 public:
  using Edge = std::pair<int, int>;

  MultiGraph() = default;
  /// Endpoints are stored as (min, max) and the edge list is kept sorted, so
  /// equality ignores input order. Throws std::out_of_range on bad endpoints.
  MultiGraph(int vertex_count, std::vector<Edge> edges, std::string name = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int loop_count() const;
  bool is_simple() const;
  /// Weighted adjacency matrix; loops sit on the diagonal.
  std::vector<std::vector<int>> adjacency() const;
  /// "n:u-v,u-v,..." for logs and default names.
  std::string describe() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::string name_;
};

MultiGraph cycle_graph(int n);
MultiGraph complete_graph(int n);
MultiGraph complete_bipartite(int a, int b);
MultiGraph path_graph(int n);
MultiGraph dipole(int edges);

/// Empty graph is disconnected; a single vertex is connected.
bool is_connected(const MultiGraph& g);

struct TwoConnectivityPolicy {
  /// A 2-vertex graph counts as 2-connected iff it has at least two
  /// parallel edges.
  bool two_vertex_multiedge = true;
};

/// Connected, no cut vertex, no loops, and at least 3 vertices (or the
/// 2-vertex multi-edge case allowed by the policy).
bool is_2connected(const MultiGraph& g, TwoConnectivityPolicy policy = {});

/// |E| - |V| + 1; throws std::invalid_argument on disconnected input.
int cycle_rank(const MultiGraph& g);

/// Isomorphism-invariant code: equal codes iff the multigraphs are isomorphic.
std::vector<std::uint8_t> canonical_code(const MultiGraph& g);

/// Graph with vertices relabeled into canonical order.
MultiGraph canonical_form(const MultiGraph& g);

/// Whether g has a plane embedding. Loops and parallel edges are ignored.
bool is_planar(const MultiGraph& g);

struct EnumerationOptions {
  int max_vertices = 3;
  int max_edges = 3;
  bool simple_only = true;
  /// Drop isomorphic duplicates among multigraphs (simple skeletons are
  /// always deduplicated).
  bool dedupe = false;
  /// Include the 2-vertex dipoles when multigraphs are allowed.
  bool include_dipoles = true;
  /// Maximum multiplicity of a parallel class.
  int max_multiplicity = 3;
};

/// Every 2-connected loopless graph within the bounds, in order of vertex
/// count, edge count, then edge list. The visitor returns false to stop.
void enumerate_2connected(const EnumerationOptions& opts, const std::function<bool(const MultiGraph&)>& visit);

std::vector<MultiGraph> enumerate_2connected(const EnumerationOptions& opts);

/// Simple 2-connected graphs on exactly n vertices with at most max_edges
/// edges, one per isomorphism class, in canonical labeling and sorted order.
std::vector<MultiGraph> simple_2connected_skeletons(int n, int max_edges);

/// Every connected graph (loops and parallel edges allowed) with at most
/// max_edges edges, one per isomorphism class, including the single vertex.
/// Meant for exhaustive small-case checks.
std::vector<MultiGraph> all_connected_multigraphs(int max_edges);

}  // namespace homfac
