// Planarity via the Demoucron-Malgrange-Pertuiset face-insertion algorithm
// run on each biconnected block of the underlying simple graph.

#include <algorithm>
#include <functional>
#include <set>

#include "homfac/graph.hpp"

namespace homfac {

namespace {

using Adj = std::vector<std::vector<int>>;
using Face = std::vector<int>;  // cyclic vertex sequence

// Biconnected blocks as edge lists (Hopcroft-Tarjan with an edge stack).
std::vector<std::vector<std::pair<int, int>>> blocks(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<std::pair<int, int>>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : adj[v]) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<std::pair<int, int>> blk;
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            blk.push_back(e);
            if (e == std::make_pair(v, w)) break;
          }
          out.push_back(std::move(blk));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] == -1) dfs(v, -1);
  }
  return out;
}

// Any cycle of a 2-connected simple graph, found by DFS back edge.
Face find_cycle(const Adj& adj, int start) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> parent(n, -2), depth(n, 0);
  Face cycle;
  std::function<bool(int)> dfs = [&](int v) {
    for (int w : adj[v]) {
      if (w == parent[v]) continue;
      if (parent[w] == -2) {
        parent[w] = v;
        depth[w] = depth[v] + 1;
        if (dfs(w)) return true;
      } else if (depth[w] < depth[v]) {
        for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
        cycle.push_back(w);
        return true;
      }
    }
    return false;
  };
  parent[start] = -1;
  dfs(start);
  return cycle;
}

struct Fragment {
  std::vector<int> attachments;  // embedded vertices
  std::vector<int> inner;        // non-embedded vertices (empty for a chord)
};

bool face_contains_all(const Face& f, const std::vector<int>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](int v) { return std::find(f.begin(), f.end(), v) != f.end(); });
}

bool dmp_block(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  int m = 0;
  for (const auto& a : adj) m += static_cast<int>(a.size());
  m /= 2;
  int start = 0;
  while (start < n && adj[start].empty()) ++start;
  if (start == n) return true;
  int nv = 0;
  for (const auto& a : adj) nv += a.empty() ? 0 : 1;
  if (nv <= 4) return true;
  if (m > 3 * nv - 6) return false;

  Face cycle = find_cycle(adj, start);
  std::vector<char> embedded(n, 0);
  std::set<std::pair<int, int>> used;
  auto mark_edge = [&](int a, int b) { used.emplace(std::min(a, b), std::max(a, b)); };
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    embedded[cycle[i]] = 1;
    mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
  std::vector<Face> faces{cycle, Face(cycle.rbegin(), cycle.rend())};

  while (static_cast<int>(used.size()) < m) {
    // Fragments relative to the embedded subgraph.
    std::vector<Fragment> frags;
    for (int u = 0; u < n; ++u) {
      if (!embedded[u]) continue;
      for (int w : adj[u]) {
        if (embedded[w] && u < w && !used.count({u, w})) frags.push_back({{u, w}, {}});
      }
    }
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (embedded[s] || seen[s] || adj[s].empty()) continue;
      Fragment f;
      std::vector<int> queue{s};
      seen[s] = 1;
      std::set<int> att;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        f.inner.push_back(v);
        for (int w : adj[v]) {
          if (embedded[w]) {
            att.insert(w);
          } else if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
      f.attachments.assign(att.begin(), att.end());
      frags.push_back(std::move(f));
    }

    // Pick a fragment with the fewest admissible faces.
    int best = -1;
    std::size_t best_face = 0;
    int best_count = 0;
    for (std::size_t i = 0; i < frags.size(); ++i) {
      int count = 0;
      std::size_t first = 0;
      for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        if (face_contains_all(faces[fi], frags[i].attachments)) {
          if (count == 0) first = fi;
          ++count;
        }
      }
      if (count == 0) return false;
      if (best == -1 || count < best_count) {
        best = static_cast<int>(i);
        best_face = first;
        best_count = count;
      }
      if (count == 1) break;
    }

    // A path through the fragment joining two distinct attachments.
    const Fragment& f = frags[best];
    std::vector<int> path;
    if (f.inner.empty()) {
      path = f.attachments;
    } else {
      int a = f.attachments.front();
      std::vector<int> prev(n, -1);
      std::vector<char> in_frag(n, 0);
      for (int v : f.inner) in_frag[v] = 1;
      std::vector<int> queue;
      for (int w : adj[a]) {
        if (in_frag[w] && prev[w] == -1) {
          prev[w] = a;
          queue.push_back(w);
        }
      }
      int end = -1, last = -1;
      for (std::size_t qi = 0; qi < queue.size() && end == -1; ++qi) {
        int v = queue[qi];
        for (int w : adj[v]) {
          if (embedded[w] && w != a) {
            end = w;
            last = v;
            break;
          }
          if (in_frag[w] && prev[w] == -1) {
            prev[w] = v;
            queue.push_back(w);
          }
        }
      }
      if (end == -1) return false;  // cannot happen in a 2-connected block
      path.push_back(end);
      for (int v = last; v != a; v = prev[v]) path.push_back(v);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }

    // Embed the path into the chosen face, splitting it in two.
    for (std::size_t i = 0; i < path.size(); ++i) {
      embedded[path[i]] = 1;
      if (i + 1 < path.size()) mark_edge(path[i], path[i + 1]);
    }
    Face face = faces[best_face];
    const int a = path.front();
    const int b = path.back();
    const auto ia = static_cast<std::size_t>(std::find(face.begin(), face.end(), a) - face.begin());
    const auto ib = static_cast<std::size_t>(std::find(face.begin(), face.end(), b) - face.begin());
    const std::size_t len = face.size();
    Face f1, f2;
    for (std::size_t k = ia; k != ib; k = (k + 1) % len) f1.push_back(face[k]);
    f1.push_back(b);
    for (std::size_t k = path.size() - 1; k-- > 1;) f1.push_back(path[k]);
    for (std::size_t k = ib; k != ia; k = (k + 1) % len) f2.push_back(face[k]);
    f2.push_back(a);
    for (std::size_t k = 1; k + 1 < path.size(); ++k) f2.push_back(path[k]);
    faces[best_face] = std::move(f1);
    faces.push_back(std::move(f2));
  }
  return true;
}

}  // namespace

bool is_planar(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::set<std::pair<int, int>> simple;
  for (const auto& [u, v] : g.edges()) {
    if (u != v) simple.emplace(u, v);
  }
  if (n >= 3 && static_cast<int>(simple.size()) > 3 * n - 6) return false;
  Adj adj(n);
  for (const auto& [u, v] : simple) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (const auto& blk : blocks(adj)) {
    if (blk.size() < 9) continue;  // fewer than 9 edges: no Kuratowski subgraph
    Adj sub(n);
    for (const auto& [u, v] : blk) {
      sub[u].push_back(v);
      sub[v].push_back(u);
    }
    if (!dmp_block(sub)) return false;
  }
  return true;
}

}  // namespace homfac
