// Small-graph generation. Simple 2-connected skeletons come from open ear
// augmentation of cycles (every 2-connected graph has an open ear
// decomposition), with isomorph rejection by canonical code. Multigraphs are
// obtained by assigning multiplicities to skeleton edges.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "homfac/graph.hpp"

namespace homfac {

namespace {

bool order_less(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return a.edges() < b.edges();
}

std::vector<MultiGraph> skeletons_up_to(int max_vertices, int max_edges) {
  std::map<std::vector<std::uint8_t>, MultiGraph> seen;
  std::vector<MultiGraph> queue;
  auto offer = [&](const MultiGraph& g) {
    MultiGraph c = canonical_form(g);
    auto code = canonical_code(c);
    if (seen.emplace(code, c).second) queue.push_back(c);
  };
  for (int k = 3; k <= std::min(max_vertices, max_edges); ++k) offer(cycle_graph(k));
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const MultiGraph g = queue[qi];
    const int n = g.vertex_count();
    std::set<MultiGraph::Edge> present(g.edges().begin(), g.edges().end());
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        for (int t = 0; n + t <= max_vertices && g.edge_count() + t + 1 <= max_edges; ++t) {
          if (t == 0 && present.count({u, v})) continue;
          std::vector<MultiGraph::Edge> edges = g.edges();
          int prev = u;
          for (int i = 0; i < t; ++i) {
            edges.emplace_back(prev, n + i);
            prev = n + i;
          }
          edges.emplace_back(prev, v);
          offer(MultiGraph(n + t, std::move(edges)));
        }
      }
    }
  }
  std::vector<MultiGraph> out;
  for (auto& [code, g] : seen) out.push_back(g);
  std::sort(out.begin(), out.end(), order_less);
  return out;
}

// Multiplicity vectors over `s` edges with entries in [1, cap] summing to total.
void compositions(int s, int total, int cap, std::vector<int>& cur, const std::function<void()>& emit) {
  const int i = static_cast<int>(cur.size());
  if (i == s) {
    if (total == 0) emit();
    return;
  }
  const int rest = s - i - 1;
  for (int m = 1; m <= cap; ++m) {
    const int left = total - m;
    if (left < rest || left > rest * cap) continue;
    cur.push_back(m);
    compositions(s, left, cap, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiGraph> simple_2connected_skeletons(int n, int max_edges) {
  std::vector<MultiGraph> out;
  for (auto& g : skeletons_up_to(n, max_edges)) {
    if (g.vertex_count() == n) out.push_back(std::move(g));
  }
  return out;
}

void enumerate_2connected(const EnumerationOptions& opts, const std::function<bool(const MultiGraph&)>& visit) {
  if (!opts.simple_only && opts.include_dipoles && opts.max_vertices >= 2) {
    for (int k = 2; k <= std::min(opts.max_edges, opts.max_multiplicity); ++k) {
      if (!visit(dipole(k))) return;
    }
  }
  if (opts.max_vertices < 3) return;
  const auto skeletons = skeletons_up_to(opts.max_vertices, opts.max_edges);
  for (int n = 3; n <= opts.max_vertices; ++n) {
    for (int total = n; total <= opts.max_edges; ++total) {
      std::vector<MultiGraph> bucket;
      std::set<std::vector<std::uint8_t>> codes;
      for (const auto& sk : skeletons) {
        if (sk.vertex_count() != n || sk.edge_count() > total) continue;
        if (opts.simple_only) {
          if (sk.edge_count() == total) bucket.push_back(sk);
          continue;
        }
        std::vector<int> mult;
        compositions(sk.edge_count(), total, opts.max_multiplicity, mult, [&] {
          std::vector<MultiGraph::Edge> edges;
          for (std::size_t i = 0; i < mult.size(); ++i) {
            for (int k = 0; k < mult[i]; ++k) edges.push_back(sk.edges()[i]);
          }
          MultiGraph g(n, std::move(edges));
          if (opts.dedupe && !codes.insert(canonical_code(g)).second) return;
          bucket.push_back(std::move(g));
        });
      }
      std::sort(bucket.begin(), bucket.end(), order_less);
      for (const auto& g : bucket) {
        if (!visit(g)) return;
      }
    }
  }
}

std::vector<MultiGraph> enumerate_2connected(const EnumerationOptions& opts) {
  std::vector<MultiGraph> out;
  enumerate_2connected(opts, [&](const MultiGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::vector<MultiGraph> all_connected_multigraphs(int max_edges) {
  std::map<std::vector<std::uint8_t>, MultiGraph> seen;
  std::vector<MultiGraph> frontier{MultiGraph(1, {})};
  seen.emplace(canonical_code(frontier[0]), frontier[0]);
  for (int e = 0; e < max_edges; ++e) {
    std::vector<MultiGraph> next;
    for (const auto& g : frontier) {
      const int n = g.vertex_count();
      auto offer = [&](MultiGraph h) {
        MultiGraph c = canonical_form(h);
        if (seen.emplace(canonical_code(c), c).second) next.push_back(c);
      };
      for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
          auto edges = g.edges();
          edges.emplace_back(u, v);
          offer(MultiGraph(n, std::move(edges)));
        }
        auto edges = g.edges();
        edges.emplace_back(u, n);
        offer(MultiGraph(n + 1, std::move(edges)));
      }
    }
    frontier = std::move(next);
  }
  std::vector<MultiGraph> out;
  for (auto& [code, g] : seen) out.push_back(g);
  std::sort(out.begin(), out.end(), order_less);
  return out;
}

}  // namespace homfac
