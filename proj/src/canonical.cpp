// Canonical labeling by colour refinement plus individualization. The search
// keeps the lexicographically smallest adjacency code over all leaves; no
// automorphism pruning, which is fine for the graph sizes used here.

#include <algorithm>
#include <map>
#include <stdexcept>

#include "homfac/graph.hpp"

namespace homfac {

namespace {

using Matrix = std::vector<std::vector<int>>;
using Colors = std::vector<int>;

int compress(Colors& colors, const std::vector<std::vector<int>>& sig) {
  std::map<std::vector<int>, int> rank;
  for (const auto& s : sig) rank.emplace(s, 0);
  int r = 0;
  for (auto& [s, v] : rank) v = r++;
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = rank[sig[i]];
  return r;
}

int count_colors(const Colors& c) {
  std::vector<int> s(c);
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

// Refine to an equitable partition. Colours stay ordered by invariant data,
// so the result commutes with relabeling.
void refine(const Matrix& m, Colors& colors) {
  const int n = static_cast<int>(m.size());
  int k = count_colors(colors);
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int w = 0; w < n; ++w) {
        if (w != v && m[v][w] > 0) nb.emplace_back(colors[w], m[v][w]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].push_back(colors[v]);
      sig[v].push_back(m[v][v]);
      for (const auto& [c, mult] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(mult);
      }
    }
    int k2 = compress(colors, sig);
    if (k2 == k) return;
    k = k2;
  }
}

std::vector<std::uint8_t> leaf_code(const Matrix& m, const Colors& colors) {
  const int n = static_cast<int>(m.size());
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[colors[v]] = v;
  std::vector<std::uint8_t> code;
  code.reserve(1 + n * (n + 1) / 2);
  code.push_back(static_cast<std::uint8_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) code.push_back(static_cast<std::uint8_t>(m[inv[i]][inv[j]]));
  }
  return code;
}

void search(const Matrix& m, Colors colors, std::vector<std::uint8_t>& best, Colors& best_colors) {
  refine(m, colors);
  const int n = static_cast<int>(m.size());
  if (count_colors(colors) == n) {
    auto code = leaf_code(m, colors);
    if (best.empty() || code < best) {
      best = std::move(code);
      best_colors = colors;
    }
    return;
  }
  // First colour class with more than one vertex.
  std::vector<int> size(n, 0);
  for (int c : colors) ++size[c];
  int target = 0;
  while (size[target] < 2) ++target;
  for (int v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    Colors next(n);
    for (int u = 0; u < n; ++u) next[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
    std::vector<std::vector<int>> sig(n);
    for (int u = 0; u < n; ++u) sig[u] = {next[u]};
    compress(next, sig);
    search(m, std::move(next), best, best_colors);
  }
}

std::pair<std::vector<std::uint8_t>, Colors> canonical_labeling(const MultiGraph& g) {
  Matrix m = g.adjacency();
  for (const auto& row : m) {
    for (int x : row) {
      if (x > 255) throw std::overflow_error("edge multiplicity too large for canonical code");
    }
  }
  std::vector<std::uint8_t> best;
  Colors best_colors;
  search(m, Colors(g.vertex_count(), 0), best, best_colors);
  if (best.empty()) best.push_back(0);
  return {best, best_colors};
}

}  // namespace

std::vector<std::uint8_t> canonical_code(const MultiGraph& g) { return canonical_labeling(g).first; }

MultiGraph canonical_form(const MultiGraph& g) {
  auto [code, colors] = canonical_labeling(g);
  std::vector<MultiGraph::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(colors[u], colors[v]);
  return MultiGraph(g.vertex_count(), std::move(edges), g.name());
}

}  // namespace homfac
