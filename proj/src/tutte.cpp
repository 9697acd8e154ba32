#include "homfac/tutte.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace homfac {

namespace {

// Loopless weighted graph: m[i*n + j] parallel edges between i and j.
struct Minor {
  int n = 0;
  std::vector<int> m;

  int& at(int i, int j) { return m[i * n + j]; }
  int at(int i, int j) const { return m[i * n + j]; }

  bool connected_without(int a, int b) const {
    // Connectivity after removing every a-b edge.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (seen[w] || at(v, w) == 0) continue;
        if ((v == a && w == b) || (v == b && w == a)) continue;
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
    return count == n;
  }

  Minor deleted(int a, int b) const {
    Minor r = *this;
    r.at(a, b) = r.at(b, a) = 0;
    return r;
  }

  // Merge b into a; the a-b class disappears (its edges would be loops).
  Minor contracted(int a, int b) const {
    Minor r;
    r.n = n - 1;
    r.m.assign(r.n * r.n, 0);
    auto map = [&](int v) { return v == b ? a - (a > b ? 1 : 0) : v - (v > b ? 1 : 0); };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if ((i == a && j == b) || (i == b && j == a) || i == j) continue;
        int mi = map(i), mj = map(j);
        if (mi != mj) r.at(mi, mj) += at(i, j);
      }
    }
    return r;
  }

  // Adjacency after sorting vertices by a degree signature. Equal keys mean
  // isomorphic minors, which is all the memo needs.
  std::vector<int> key() const {
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) deg[i] += at(i, j);
    }
    std::vector<std::vector<int>> sig(n);
    for (int i = 0; i < n; ++i) {
      sig[i].push_back(deg[i]);
      for (int j = 0; j < n; ++j) {
        if (at(i, j)) sig[i].push_back(deg[j] * 64 + at(i, j));
      }
      std::sort(sig[i].begin() + 1, sig[i].end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] < sig[y]; });
    std::vector<int> k;
    k.reserve(1 + n * (n - 1) / 2);
    k.push_back(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) k.push_back(at(order[i], order[j]));
    }
    return k;
  }
};

BivarPoly y_series(int from, int to) {
  // y^from + ... + y^to
  BivarPoly r;
  for (int i = from; i <= to; ++i) r.add_term({0, i}, 1);
  return r;
}

class TutteSolver {
 public:
  BivarPoly solve(const Minor& g) {
    if (g.n <= 1) return BivarPoly::constant(1);
    auto k = g.key();
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;

    // Edge class at a vertex of minimum positive degree.
    int best = -1, best_deg = 0;
    for (int i = 0; i < g.n; ++i) {
      int d = 0;
      for (int j = 0; j < g.n; ++j) d += g.at(i, j);
      if (d > 0 && (best == -1 || d < best_deg)) {
        best = i;
        best_deg = d;
      }
    }
    int other = -1;
    for (int j = 0; j < g.n; ++j) {
      if (g.at(best, j) > 0 && (other == -1 || g.at(best, j) > g.at(best, other))) other = j;
    }
    const int mult = g.at(best, other);
    BivarPoly result;
    if (!g.connected_without(best, other)) {
      // Bridge class: (x + y + ... + y^(k-1)) T(G/P).
      result = (BivarPoly::variable(0) + y_series(1, mult - 1)) * solve(g.contracted(best, other));
    } else {
      result = solve(g.deleted(best, other)) + y_series(0, mult - 1) * solve(g.contracted(best, other));
    }
    memo_.emplace(std::move(k), result);
    return result;
  }

 private:
  std::map<std::vector<int>, BivarPoly> memo_;
};

}  // namespace

BivarPoly tutte(const MultiGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("Tutte polynomial of a disconnected graph");
  Minor m;
  m.n = g.vertex_count();
  m.m.assign(m.n * m.n, 0);
  int loops = 0;
  for (const auto& [u, v] : g.edges()) {
    if (u == v) {
      ++loops;
    } else {
      ++m.at(u, v);
      ++m.at(v, u);
    }
  }
  TutteSolver solver;
  return solver.solve(m) * BivarPoly::variable(1, loops);
}

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

BivarPoly tutte_oracle(const MultiGraph& g, int max_edges) {
  const int e = g.edge_count();
  if (e > max_edges) throw std::length_error("too many edges for subset expansion");
  if (!is_connected(g)) throw std::invalid_argument("Tutte polynomial of a disconnected graph");
  const int n = g.vertex_count();
  const int rank_e = n - 1;
  // counts[(corank, nullity)]
  std::map<std::pair<int, int>, long long> counts;
  std::vector<int> parent(n);
  for (unsigned long mask = 0; mask < (1UL << e); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int rank = 0, size = 0;
    for (int i = 0; i < e; ++i) {
      if (!(mask >> i & 1UL)) continue;
      ++size;
      int a = find_root(parent, g.edges()[i].first);
      int b = find_root(parent, g.edges()[i].second);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    }
    ++counts[{rank_e - rank, size - rank}];
  }
  BivarPoly xm1 = BivarPoly::variable(0) - BivarPoly::constant(1);
  BivarPoly ym1 = BivarPoly::variable(1) - BivarPoly::constant(1);
  BivarPoly t;
  for (const auto& [key, c] : counts) {
    t += (xm1.pow(key.first) * ym1.pow(key.second)).scaled(Integer(static_cast<long>(c)));
  }
  return t;
}

std::vector<Integer> forest_counts(const MultiGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("forest counts of a disconnected graph");
  const int n = g.vertex_count();
  std::vector<Integer> counts(n, 0);
  const auto& edges = g.edges();
  // Branch on each edge in turn: skip it, or take it when it joins two trees.
  std::function<void(std::size_t, std::vector<int>&, int)> go = [&](std::size_t i, std::vector<int>& comp, int k) {
    if (i == edges.size()) {
      counts[k] += 1;
      return;
    }
    go(i + 1, comp, k);
    int a = comp[edges[i].first], b = comp[edges[i].second];
    if (a == b) return;
    std::vector<int> next(comp);
    for (int& c : next) {
      if (c == b) c = a;
    }
    go(i + 1, next, k + 1);
  };
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  go(0, comp, 0);
  return counts;
}

UniPoly tutte_at_y1(const BivarPoly& t) {
  std::vector<Integer> c(std::max(0, t.degree(0) + 1));
  for (const auto& [e, v] : t.terms()) c[e[0]] += v;
  return UniPoly(std::move(c));
}

UniPoly face_polynomial(const MultiGraph& g) { return tutte_at_y1(tutte(g)).compose_one_minus_x(); }

UniPoly forest_expansion(const std::vector<Integer>& counts) {
  const int r = static_cast<int>(counts.size()) - 1;
  std::vector<Integer> c(counts.size());
  for (int k = 0; k <= r; ++k) c[r - k] = (r - k) % 2 == 0 ? counts[k] : Integer(-counts[k]);
  return UniPoly(std::move(c));
}

Integer spanning_tree_count(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return 1;
  // Reduced Laplacian (drop the last row and column), Bareiss elimination.
  const int k = n - 1;
  std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k, 0));
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    if (u < k) a[u][u] += 1;
    if (v < k) a[v][v] += 1;
    if (u < k && v < k) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  Integer prev = 1;
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    if (a[i][i] == 0) {
      int p = i + 1;
      while (p < k && a[p][i] == 0) ++p;
      if (p == k) return 0;
      std::swap(a[i], a[p]);
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r) {
      for (int c = i + 1; c < k; ++c) {
        a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
      }
      a[r][i] = 0;
    }
    prev = a[i][i];
  }
  return sign * a[k - 1][k - 1];
}

}  // namespace homfac
