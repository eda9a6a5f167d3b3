#pragma once

// Brute-force oracles and graph enumeration shared by the unit tests and the
// acceptance runner. Everything here is deliberately naive.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "framegraph/frames.hpp"
#include "framegraph/graph.hpp"

namespace fgtest {

using framegraph::Edge;
using framegraph::Graph;

inline Graph from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline std::uint64_t to_mask(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::uint64_t mask = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (g.adjacent(perm[i], perm[j])) mask |= std::uint64_t{1} << bit;
  return mask;
}

/// Canonical adjacency mask: maximum over relabelings that list vertices by
/// non-increasing degree (degree classes are permuted exhaustively).
inline std::uint64_t canonical_mask(const Graph& g) {
  const int n = g.order();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<int, int>> classes;  // [begin, end) in `order`
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : classes) std::sort(order.begin() + b, order.begin() + e);
  std::uint64_t best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      best = std::max(best, to_mask(g, order));
      return;
    }
    auto [b, e] = classes[c];
    do {
      rec(c + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(0);
  return best;
}

/// One representative per isomorphism class of graphs on n vertices.
inline std::vector<Graph> graphs_up_to_iso(int n) {
  if (n <= 1) return {Graph(std::max(n, 0))};
  std::vector<Graph> out;
  std::set<std::uint64_t> seen;
  for (const Graph& base : graphs_up_to_iso(n - 1)) {
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << (n - 1)); ++sub) {
      std::vector<Edge> edges = base.edges();
      for (int v = 0; v < n - 1; ++v)
        if (sub >> v & 1) edges.emplace_back(v, n - 1);
      Graph g(n, edges);
      if (seen.insert(canonical_mask(g)).second) out.push_back(g);
    }
  }
  return out;
}

inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<Graph> out;
  for (auto& g : graphs_up_to_iso(n))
    if (framegraph::is_connected(g)) out.push_back(g);
  return out;
}

/// All labeled trees on n >= 2 vertices via Pruefer sequences.
inline std::vector<Graph> labeled_trees(int n) {
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::vector<Graph> out;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      --degree[leaf];
      --degree[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          edges.emplace_back(u, v);
        }
      }
    out.emplace_back(n, edges);
    int k = n - 3;
    while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
    if (k < 0) break;
    ++seq[k];
  }
  return out;
}

// ---- oracles -----------------------------------------------------------------

inline bool subset_connected_after_removal(const Graph& g, std::uint32_t removed) {
  const int n = g.order();
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!(removed >> v & 1)) keep.push_back(v);
  if (keep.size() <= 1) return false;  // single vertex counts as "cut"
  std::vector<bool> seen(n, false);
  std::vector<int> stack{keep[0]};
  seen[keep[0]] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!(removed >> w & 1) && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == static_cast<int>(keep.size());
}

/// Smallest S with G - S disconnected or a single vertex.
inline int brute_connectivity(const Graph& g) {
  const int n = g.order();
  int best = n - 1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size < best && !subset_connected_after_removal(g, s)) best = size;
  }
  return best;
}

inline int brute_independence(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((s >> i & 1) && (s >> j & 1) && g.adjacent(i, j)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

/// Direct reading of the OS-vertex-set definition for one extension step.
inline bool os_step_ok(const Graph& g, const std::vector<int>& prefix, int v, int w) {
  if (!g.adjacent(v, w)) return false;
  std::vector<int> chosen = prefix;
  chosen.push_back(v);
  if (std::find(chosen.begin(), chosen.end(), w) != chosen.end()) return false;
  // Component of v in the induced subgraph on `chosen`.
  std::set<int> in(chosen.begin(), chosen.end());
  std::set<int> comp{v};
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x))
      if (in.count(y) && !comp.count(y)) {
        comp.insert(y);
        stack.push_back(y);
      }
  }
  for (int u : comp)
    if (u != v && g.adjacent(u, w)) return false;
  return true;
}

/// Maximum OS-vertex set size by exhaustive search over ordered sequences.
inline int brute_os_number(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> prefix;
  std::vector<bool> used(n, false);
  std::function<void()> dfs = [&] {
    best = std::max(best, static_cast<int>(prefix.size()));
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool any = false;
      for (int w = 0; w < n && !any; ++w) any = os_step_ok(g, prefix, v, w);
      if (!any) continue;
      used[v] = true;
      prefix.push_back(v);
      dfs();
      prefix.pop_back();
      used[v] = false;
    }
  };
  dfs();
  return best;
}

/// cc via edge colouring: two edges share a colour only if their four
/// endpoints form a clique; a colour class of pairwise-compatible edges spans
/// a clique. Isolated vertices add one each.
inline int brute_clique_cover(const Graph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  int isolated = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) ++isolated;
  if (m == 0) return isolated;
  auto compatible = [&](const Edge& a, const Edge& b) {
    std::set<int> s{a.first, a.second, b.first, b.second};
    for (int x : s)
      for (int y : s)
        if (x < y && !g.adjacent(x, y)) return false;
    return true;
  };
  std::vector<std::vector<bool>> conflict(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) conflict[i][j] = i != j && !compatible(edges[i], edges[j]);
  std::vector<int> colour(m, -1);
  // Colours are interchangeable, so edge e may open at most one new colour.
  std::function<bool(int, int, int)> colourable = [&](int e, int k, int used) {
    if (e == m) return true;
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = true;
      for (int f = 0; f < e && ok; ++f)
        if (conflict[e][f] && colour[f] == c) ok = false;
      if (!ok) continue;
      colour[e] = c;
      if (colourable(e + 1, k, std::max(used, c + 1))) return true;
    }
    colour[e] = -1;
    return false;
  };
  for (int k = 1;; ++k)
    if (colourable(0, k, 0)) return k + isolated;
}

inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  while (true) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (u(rng) < p) edges.emplace_back(i, j);
    Graph g(n, edges);
    if (framegraph::is_connected(g)) return g;
  }
}

/// Sparse {-1, 0, 1} coordinates, so the frame graph has exact orthogonalities.
inline framegraph::Frame random_int_frame(std::mt19937_64& rng, int dim, int count,
                                          bool complex) {
  std::uniform_int_distribution<int> coef(-1, 1);
  framegraph::Frame f;
  f.field = complex ? framegraph::Field::complex : framegraph::Field::real;
  while (true) {
    f.vectors = framegraph::CMatrix::Zero(dim, count);
    for (int c = 0; c < count; ++c) {
      do {
        for (int r = 0; r < dim; ++r)
          f.vectors(r, c) = framegraph::Scalar(coef(rng), complex ? coef(rng) : 0);
      } while (f.vectors.col(c).norm() == 0.0);
    }
    if (framegraph::is_frame(f)) return f;
  }
}

}  // namespace fgtest
