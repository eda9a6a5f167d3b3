#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <deque>
#include <functional>
#include <vector>

#include "framegraph/bounds.hpp"
#include "framegraph/error.hpp"

namespace framegraph {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// The OS subset search keeps two bytes per subset.
constexpr int kOsHardLimit = 26;

Mask component_of(const Graph& g, Mask within, int start) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const Mask fresh = g.neighbor_mask(v) & within & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

// Smallest companion w for appending v to the chosen set S, or -1.
int companion_for(const Graph& g, Mask chosen, int v) {
  const Mask with_v = chosen | bit(v);
  const Mask others = component_of(g, with_v, v) & ~bit(v);
  Mask pool = g.neighbor_mask(v) & ~with_v;
  while (pool) {
    const int w = std::countr_zero(pool);
    pool &= pool - 1;
    if ((g.neighbor_mask(w) & others) == 0) return w;
  }
  return -1;
}

}  // namespace

bool verify_os_set(const Graph& g, const OSWitness& w) {
  if (w.ordered.size() != w.companions.size()) {
    throw ParameterError("OS witness: " + std::to_string(w.ordered.size()) +
                         " ordered vertices but " + std::to_string(w.companions.size()) +
                         " companions");
  }
  const int n = g.order();
  for (std::size_t k = 0; k < w.ordered.size(); ++k) {
    for (int id : {w.ordered[k], w.companions[k]}) {
      if (id < 0 || id >= n) {
        throw ParameterError("OS witness: vertex id " + std::to_string(id) + " out of range");
      }
    }
  }
  std::vector<char> chosen(n, 0);
  for (std::size_t k = 0; k < w.ordered.size(); ++k) {
    const int v = w.ordered[k];
    const int c = w.companions[k];
    if (chosen[v]) return false;
    chosen[v] = 1;
    if (chosen[c] || !g.adjacent(v, c)) return false;
    // Component of v inside the chosen prefix.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x != v && g.adjacent(c, x)) return false;
      for (int y : g.neighbors(x)) {
        if (chosen[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return true;
}

OSResult os_number(const Graph& g, int cap) {
  const int n = g.order();
  if (n < 2) throw DomainError("OS-number is not defined for a single vertex");
  if (!is_connected(g)) throw DomainError("OS-number requires a connected graph");
  if (n > cap) throw CapacityError("OS-number", n, cap, "--os-cap");
  if (n > kOsHardLimit) throw CapacityError("OS-number", n, kOsHardLimit, "a smaller graph");

  const std::size_t subsets = std::size_t{1} << n;
  // reach[S]: S is the vertex set of some OS-vertex set.
  std::vector<std::uint8_t> reach(subsets, 0);
  reach[0] = 1;
  for (std::size_t s = 0; s < subsets; ++s) {
    if (!reach[s]) continue;
    for (int v = 0; v < n; ++v) {
      const Mask next = s | bit(v);
      if (next == s || reach[next]) continue;
      if (companion_for(g, s, v) >= 0) reach[next] = 1;
    }
  }
  // best[S]: largest size of an OS-vertex set extending S.
  std::vector<std::uint8_t> best(subsets, 0);
  for (std::size_t s = subsets; s-- > 0;) {
    if (!reach[s]) continue;
    int value = std::popcount(static_cast<Mask>(s));
    for (int v = 0; v < n; ++v) {
      const Mask next = s | bit(v);
      if (next == s || !reach[next]) continue;
      if (best[next] > value && companion_for(g, s, v) >= 0) value = best[next];
    }
    best[s] = static_cast<std::uint8_t>(value);
  }
  OSResult out;
  out.value = best[0];
  Mask s = 0;
  while (std::popcount(s) < out.value) {
    int picked = -1;
    int companion = -1;
    for (int v = 0; v < n && picked < 0; ++v) {
      const Mask next = s | bit(v);
      if (next == s || !reach[next] || best[next] != out.value) continue;
      companion = companion_for(g, s, v);
      if (companion >= 0) picked = v;
    }
    if (picked < 0) throw InternalError("OS search: witness reconstruction failed");
    out.witness.ordered.push_back(picked);
    out.witness.companions.push_back(companion);
    s |= bit(picked);
  }
  if (!verify_os_set(g, out.witness)) throw InternalError("OS search produced an invalid witness");
  return out;
}

std::vector<int> path_order(const Graph& path) {
  if (!is_tree(path) || path.order() < 1) throw ParameterError("path_order: not a path");
  int start = -1;
  for (int v = 0; v < path.order(); ++v) {
    if (path.degree(v) > 2) throw ParameterError("path_order: not a path");
    if (start < 0 && path.degree(v) <= 1) start = v;
  }
  std::vector<int> order{start};
  int prev = -1;
  int cur = start;
  while (static_cast<int>(order.size()) < path.order()) {
    int next = -1;
    for (int w : path.neighbors(cur))
      if (w != prev) next = w;
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

OSWitness os_witness_for_product(ProductKind kind, const Graph& g, const Graph& h,
                                 const OSWitness& gw, const OSWitness& hw) {
  if (!verify_os_set(g, gw) || !verify_os_set(h, hw)) {
    throw ParameterError("os_witness_for_product: operand witness does not verify");
  }
  const int n = g.order();
  const int m = h.order();
  OSWitness out;
  Graph target;
  switch (kind) {
    case ProductKind::strong: {
      if (n < 2 || m < 2) throw ParameterError("strong witness requires paths on >= 2 vertices");
      const auto s = path_order(g);
      const auto t = path_order(h);
      for (int i = 0; i + 1 < n; ++i) {
        for (int j = 0; j + 1 < m; ++j) {
          out.ordered.push_back(pair_id(s[i], t[j], m));
          out.companions.push_back(pair_id(s[i + 1], t[j + 1], m));
        }
      }
      target = strong(g, h);
      break;
    }
    case ProductKind::cartesian: {
      // Position k of the operand witness is placed in every copy before
      // position k + 1 is placed anywhere; copy-by-copy order can put a
      // companion next to a chosen vertex of a neighbouring copy.
      if (n * hw.size() >= m * gw.size()) {
        for (int k = 0; k < hw.size(); ++k) {
          for (int u = 0; u < n; ++u) {
            out.ordered.push_back(pair_id(u, hw.ordered[k], m));
            out.companions.push_back(pair_id(u, hw.companions[k], m));
          }
        }
      } else {
        for (int k = 0; k < gw.size(); ++k) {
          for (int v = 0; v < m; ++v) {
            out.ordered.push_back(pair_id(gw.ordered[k], v, m));
            out.companions.push_back(pair_id(gw.companions[k], v, m));
          }
        }
      }
      target = cartesian(g, h);
      break;
    }
    case ProductKind::corona: {
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < hw.size(); ++k) {
          out.ordered.push_back(corona_copy_id(i, hw.ordered[k], n, m));
          out.companions.push_back(corona_copy_id(i, hw.companions[k], n, m));
        }
      }
      out.ordered.insert(out.ordered.end(), gw.ordered.begin(), gw.ordered.end());
      out.companions.insert(out.companions.end(), gw.companions.begin(), gw.companions.end());
      target = corona(g, h);
      break;
    }
    default:
      throw ParameterError("os_witness_for_product supports strong, cartesian and corona");
  }
  if (!verify_os_set(target, out)) {
    throw InternalError("os_witness_for_product: assembled witness failed verification");
  }
  return out;
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  if (g.order() > 64) throw CapacityError("maximal cliques", g.order(), 64, "a smaller graph");
  std::vector<std::vector<int>> out;
  const int n = g.order();
  std::function<void(Mask, Mask, Mask)> expand = [&](Mask r, Mask p, Mask x) {
    if (p == 0 && x == 0) {
      std::vector<int> clique;
      for (int v = 0; v < n; ++v)
        if (r & bit(v)) clique.push_back(v);
      out.push_back(std::move(clique));
      return;
    }
    // Pivot with the most neighbours in p.
    const Mask px = p | x;
    int pivot = std::countr_zero(px);
    int most = -1;
    for (Mask scan = px; scan; scan &= scan - 1) {
      const int u = std::countr_zero(scan);
      const int c = std::popcount(p & g.neighbor_mask(u));
      if (c > most) {
        most = c;
        pivot = u;
      }
    }
    for (Mask cand = p & ~g.neighbor_mask(pivot); cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      expand(r | bit(v), p & g.neighbor_mask(v), x & g.neighbor_mask(v));
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  if (n > 0) expand(0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_clique_cover(const Graph& g, const std::vector<std::vector<int>>& cliques) {
  const int n = g.order();
  std::vector<char> vertex(n, 0);
  std::vector<char> edge(static_cast<std::size_t>(n) * n, 0);
  for (const auto& c : cliques) {
    if (c.empty()) return false;
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a] < 0 || c[a] >= n) return false;
      vertex[c[a]] = 1;
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (c[b] < 0 || c[b] >= n || c[a] == c[b] || !g.adjacent(c[a], c[b])) return false;
        edge[static_cast<std::size_t>(c[a]) * n + c[b]] = 1;
        edge[static_cast<std::size_t>(c[b]) * n + c[a]] = 1;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (!vertex[v]) return false;
  for (auto [u, v] : g.edges())
    if (!edge[static_cast<std::size_t>(u) * n + v]) return false;
  return true;
}

namespace {

// Elements to cover: every edge, plus every isolated vertex.
struct CoverInstance {
  std::vector<std::vector<int>> cliques;
  std::vector<std::vector<int>> covering;   // element -> cliques containing it
  std::vector<std::vector<int>> contains;   // clique -> elements
  std::vector<Mask> element_span;           // vertex set of each element
  int elements = 0;

  explicit CoverInstance(const Graph& g) : cliques(maximal_cliques(g)) {
    std::vector<int> index(static_cast<std::size_t>(g.order()) * g.order(), -1);
    for (auto [u, v] : g.edges()) {
      index[static_cast<std::size_t>(u) * g.order() + v] = elements++;
      element_span.push_back(bit(u) | bit(v));
    }
    std::vector<int> isolated(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0) {
        isolated[v] = elements++;
        element_span.push_back(bit(v));
      }
    }
    covering.assign(elements, {});
    contains.assign(cliques.size(), {});
    for (int c = 0; c < static_cast<int>(cliques.size()); ++c) {
      const auto& q = cliques[c];
      if (q.size() == 1 && isolated[q[0]] >= 0) {
        contains[c].push_back(isolated[q[0]]);
      }
      for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = a + 1; b < q.size(); ++b)
          contains[c].push_back(index[static_cast<std::size_t>(q[a]) * g.order() + q[b]]);
      for (int e : contains[c]) covering[e].push_back(c);
    }
  }
};

class CoverSearch {
 public:
  CoverSearch(const Graph& g, const CoverInstance& inst) : g_(g), inst_(inst) {}

  std::vector<int> run(std::vector<int> incumbent) {
    best_ = std::move(incumbent);
    std::vector<int> covered(inst_.elements, 0);
    std::vector<int> chosen;
    search(covered, inst_.elements, chosen);
    return best_;
  }

 private:
  bool co_coverable(int a, int b) const {
    const Mask span = inst_.element_span[a] | inst_.element_span[b];
    for (Mask scan = span; scan; scan &= scan - 1) {
      const int v = std::countr_zero(scan);
      if ((span & ~bit(v) & ~g_.neighbor_mask(v)) != 0) return false;
    }
    return true;
  }

  // Uncovered elements no two of which fit in a common clique.
  int packing_bound(const std::vector<int>& covered) const {
    std::vector<int> picked;
    for (int e = 0; e < inst_.elements; ++e) {
      if (covered[e]) continue;
      bool independent = true;
      for (int p : picked) {
        if (co_coverable(e, p)) {
          independent = false;
          break;
        }
      }
      if (independent) picked.push_back(e);
    }
    return static_cast<int>(picked.size());
  }

  void search(std::vector<int>& covered, int uncovered, std::vector<int>& chosen) {
    if (uncovered == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;
    if (static_cast<int>(chosen.size()) + packing_bound(covered) >=
        static_cast<int>(best_.size())) {
      return;
    }
    int pick = -1;
    for (int e = 0; e < inst_.elements; ++e) {
      if (covered[e]) continue;
      if (pick < 0 || inst_.covering[e].size() < inst_.covering[pick].size()) pick = e;
    }
    std::vector<int> options = inst_.covering[pick];
    auto gain = [&](int c) {
      int k = 0;
      for (int e : inst_.contains[c]) k += covered[e] == 0;
      return k;
    };
    std::stable_sort(options.begin(), options.end(),
                     [&](int a, int b) { return gain(a) > gain(b); });
    for (int c : options) {
      int fresh = 0;
      for (int e : inst_.contains[c]) fresh += covered[e]++ == 0;
      chosen.push_back(c);
      search(covered, uncovered - fresh, chosen);
      chosen.pop_back();
      for (int e : inst_.contains[c]) --covered[e];
    }
  }

  const Graph& g_;
  const CoverInstance& inst_;
  std::vector<int> best_;
};

std::vector<int> greedy_cover_indices(const CoverInstance& inst) {
  std::vector<int> covered(inst.elements, 0);
  int remaining = inst.elements;
  std::vector<int> chosen;
  while (remaining > 0) {
    int best = -1;
    int best_gain = 0;
    for (int c = 0; c < static_cast<int>(inst.cliques.size()); ++c) {
      int k = 0;
      for (int e : inst.contains[c]) k += covered[e] == 0;
      if (k > best_gain) {
        best_gain = k;
        best = c;
      }
    }
    for (int e : inst.contains[best]) remaining -= covered[e]++ == 0;
    chosen.push_back(best);
  }
  return chosen;
}

CliqueCover to_cover(const CoverInstance& inst, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  CliqueCover out;
  for (int c : indices) out.cliques.push_back(inst.cliques[c]);
  out.value = static_cast<int>(out.cliques.size());
  return out;
}

}  // namespace

CliqueCover greedy_clique_cover(const Graph& g) {
  const CoverInstance inst(g);
  return to_cover(inst, greedy_cover_indices(inst));
}

CliqueCover clique_cover_number(const Graph& g, int cap) {
  if (g.order() > cap) throw CapacityError("clique cover number", g.order(), cap, "--cc-cap");
  const CoverInstance inst(g);
  auto greedy = greedy_cover_indices(inst);
  CliqueCover out = to_cover(inst, CoverSearch(g, inst).run(std::move(greedy)));
  if (!verify_clique_cover(g, out.cliques)) throw InternalError("clique cover search is invalid");
  return out;
}

CliqueCover strong_path_clique_cover(const Graph& path_g, const Graph& path_h) {
  const int n = path_g.order();
  const int m = path_h.order();
  if (n < 2 || m < 2) throw ParameterError("strong path cover requires paths on >= 2 vertices");
  const auto s = path_order(path_g);
  const auto t = path_order(path_h);
  CliqueCover out;
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < m; ++j) {
      std::vector<int> block{pair_id(s[i], t[j], m), pair_id(s[i], t[j + 1], m),
                             pair_id(s[i + 1], t[j], m), pair_id(s[i + 1], t[j + 1], m)};
      std::sort(block.begin(), block.end());
      out.cliques.push_back(std::move(block));
    }
  }
  out.value = static_cast<int>(out.cliques.size());
  return out;
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent),
// by unit-capacity augmenting paths on the split-vertex network.
int local_connectivity(const Graph& g, int s, int t) {
  const int n = g.order();
  // in(v) = 2v, out(v) = 2v + 1.
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj(2 * n);
  auto add = [&](int a, int b, int cap) {
    adj[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    adj[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = n + 1;
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (auto [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, big);
    add(2 * v + 1, 2 * u, big);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  for (;;) {
    std::vector<int> via(2 * n, -1);
    std::deque<int> queue{source};
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      const int x = queue.front();
      queue.pop_front();
      for (int a : adj[x]) {
        if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
          via[arcs[a].to] = a;
          queue.push_back(arcs[a].to);
        }
      }
    }
    if (via[sink] == -1) break;
    for (int x = sink; x != source;) {
      const int a = via[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  if (!is_connected(g)) throw DomainError("vertex connectivity requires a connected graph");
  const int n = g.order();
  if (is_complete(g)) return n - 1;
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

}  // namespace framegraph
