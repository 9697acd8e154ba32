#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "homfac/graph.hpp"

namespace homfac {

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges, std::string name)
    : n_(vertex_count), edges_(std::move(edges)), name_(std::move(name)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

int MultiGraph::loop_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; }));
}

bool MultiGraph::is_simple() const {
  if (loop_count() > 0) return false;
  return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

std::vector<std::vector<int>> MultiGraph::adjacency() const {
  std::vector<std::vector<int>> m(n_, std::vector<int>(n_, 0));
  for (const auto& [u, v] : edges_) {
    ++m[u][v];
    if (u != v) ++m[v][u];
  }
  return m;
}

std::string MultiGraph::describe() const {
  std::ostringstream out;
  out << n_ << ':';
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out << ',';
    out << edges_[i].first << '-' << edges_[i].second;
  }
  return out.str();
}

MultiGraph cycle_graph(int n) {
  std::vector<MultiGraph::Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return MultiGraph(n, e, "C" + std::to_string(n));
}

MultiGraph complete_graph(int n) {
  std::vector<MultiGraph::Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return MultiGraph(n, e, "K" + std::to_string(n));
}

MultiGraph complete_bipartite(int a, int b) {
  std::vector<MultiGraph::Edge> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return MultiGraph(a + b, e, "K" + std::to_string(a) + "," + std::to_string(b));
}

MultiGraph path_graph(int n) {
  std::vector<MultiGraph::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return MultiGraph(n, e, "P" + std::to_string(n));
}

MultiGraph dipole(int edges) {
  return MultiGraph(2, std::vector<MultiGraph::Edge>(edges, {0, 1}), "D" + std::to_string(edges));
}

namespace {

// Number of components among vertices not in `removed` (-1 for none).
int count_components(const MultiGraph& g, int removed) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    if (u == removed || v == removed) continue;
    parent[find(u)] = find(v);
  }
  int c = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v != removed && find(v) == v) ++c;
  }
  return c;
}

}  // namespace

bool is_connected(const MultiGraph& g) { return g.vertex_count() > 0 && count_components(g, -1) == 1; }

bool is_2connected(const MultiGraph& g, TwoConnectivityPolicy policy) {
  if (!is_connected(g) || g.loop_count() > 0) return false;
  if (g.vertex_count() == 2) return policy.two_vertex_multiedge && g.edge_count() >= 2;
  if (g.vertex_count() < 3) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (count_components(g, v) != 1) return false;
  }
  return true;
}

int cycle_rank(const MultiGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("cycle rank of a disconnected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

}  // namespace homfac
