#include "framegraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "framegraph/error.hpp"

namespace framegraph {

Graph::Graph(int order) : Graph(order, {}) {}

Graph::Graph(int order, const std::vector<Edge>& edges,
             std::vector<std::string> labels)
    : order_(order), labels_(std::move(labels)) {
  if (order < 0) throw ParameterError("graph order must be nonnegative");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != order) {
    throw ParameterError("label count does not match graph order");
  }
  adjacency_.assign(static_cast<std::size_t>(order) * order, 0);
  neighbors_.assign(order, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw ParameterError("edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "} has an endpoint >= order " +
                           std::to_string(order));
    }
    if (u == v) {
      throw ParameterError("self-loop at vertex " + std::to_string(u));
    }
    auto& cell = adjacency_[static_cast<std::size_t>(u) * order + v];
    if (cell) continue;
    cell = 1;
    adjacency_[static_cast<std::size_t>(v) * order + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
  if (order <= 64) {
    masks_.assign(order, 0);
    for (int v = 0; v < order; ++v) {
      for (int w : neighbors_[v]) masks_[v] |= std::uint64_t{1} << w;
    }
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order_; ++u) {
    for (int v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(int v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[v];
}

std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "kbip";
    case Family::star: return "star";
    case Family::empty: return "empty";
    case Family::h_regular: return "hreg";
    case Family::tree_from_edges: return "tree";
    case Family::complete_minus_edge: return "kminus";
  }
  return "?";
}

namespace {

void require(bool ok, const std::string& family, const std::string& what) {
  if (!ok) throw ParameterError(family + ": " + what);
}

}  // namespace

Graph make_path(int n) {
  require(n >= 1, "path", "requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle", "requires n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph make_complete(int n) {
  require(n >= 1, "complete", "requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph make_complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "kbip", "requires both parts >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
  return Graph(m + n, e);
}

Graph make_star(int n) {
  require(n >= 1, "star", "requires n >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, e);
}

Graph make_empty(int n) {
  require(n >= 1, "empty", "requires n >= 1");
  return Graph(n);
}

Graph make_h_regular(int n) {
  require(n >= 4 && n % 2 == 0, "hreg",
          "requires even n >= 4 (an (n-2)-regular graph on n vertices is the "
          "complement of a perfect matching)");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i % 2 == 0 && j == i + 1)) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph make_tree(const std::vector<Edge>& edges) {
  int order = 1;
  for (auto [u, v] : edges) {
    require(u >= 0 && v >= 0, "tree", "vertex ids must be nonnegative");
    order = std::max({order, u + 1, v + 1});
  }
  Graph g(order, edges);
  require(g.edge_count() == edges.size(), "tree", "edge list repeats an edge");
  require(is_tree(g), "tree", "edge list must be acyclic and connected");
  return g;
}

Graph make_complete_minus_edge(int n) {
  require(n >= 3, "kminus", "requires n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph make_named(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto want = [&](std::size_t count) {
    if (p.size() != count) {
      throw ParameterError(family_name(spec.family) + ": expected " +
                           std::to_string(count) + " parameter(s), got " +
                           std::to_string(p.size()));
    }
  };
  switch (spec.family) {
    case Family::path: want(1); return make_path(p[0]);
    case Family::cycle: want(1); return make_cycle(p[0]);
    case Family::complete: want(1); return make_complete(p[0]);
    case Family::complete_bipartite:
      want(2);
      return make_complete_bipartite(p[0], p[1]);
    case Family::star: want(1); return make_star(p[0]);
    case Family::empty: want(1); return make_empty(p[0]);
    case Family::h_regular: want(1); return make_h_regular(p[0]);
    case Family::tree_from_edges: return make_tree(spec.edges);
    case Family::complete_minus_edge: want(1); return make_complete_minus_edge(p[0]);
  }
  throw ParameterError("unknown family");
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) e.emplace_back(i, j);
  return Graph(g.order(), e, g.labels());
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> seen(g.order(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) {
      throw ParameterError("induced_subgraph: vertex " + std::to_string(v) +
                           " out of range");
    }
    if (seen[v]++) {
      throw ParameterError("induced_subgraph: duplicate vertex " +
                           std::to_string(v));
    }
  }
  const int k = static_cast<int>(vertices.size());
  std::vector<Edge> e;
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (int v : vertices) labels.push_back(g.label(v));
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.adjacent(vertices[a], vertices[b])) e.emplace_back(a, b);
  return Graph(k, e, std::move(labels));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() >= 1 && connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
  return is_connected(g) &&
         g.edge_count() == static_cast<std::size_t>(g.order() - 1);
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.order() >= 1 && g.edge_count() == n * (n - 1) / 2;
}

bool is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0), visit_index(n, -1), order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (visit_index[v] >= 0) continue;
      if (pick < 0 || weight[v] > weight[pick]) pick = v;
    }
    visit_index[pick] = step;
    order.push_back(pick);
    for (int w : g.neighbors(pick))
      if (visit_index[w] < 0) ++weight[w];
  }
  // The reverse visit order is a perfect elimination ordering iff g is
  // chordal. For each v, its earlier-visited neighbours minus the most
  // recently visited one must all be adjacent to that one.
  for (int v : order) {
    int parent = -1;
    for (int w : g.neighbors(v)) {
      if (visit_index[w] < visit_index[v] &&
          (parent < 0 || visit_index[w] > visit_index[parent])) {
        parent = w;
      }
    }
    if (parent < 0) continue;
    for (int w : g.neighbors(v)) {
      if (w != parent && visit_index[w] < visit_index[v] &&
          !g.adjacent(w, parent)) {
        return false;
      }
    }
  }
  return true;
}

bool is_chordal_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw CapacityError("brute-force chordality", n, 20, "a smaller graph");
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) < 4) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1u) vs.push_back(v);
    if (is_cycle(induced_subgraph(g, vs))) return false;
  }
  return true;
}

namespace {

// Maximum independent set by branch and bound. The bound partitions the
// candidate set greedily into cliques of g; an independent set meets each
// clique at most once.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  std::uint64_t run() {
    const std::uint64_t all =
        g_.order() == 64 ? ~std::uint64_t{0}
                         : (std::uint64_t{1} << g_.order()) - 1;
    expand(all, 0, 0);
    return best_set_;
  }

 private:
  void expand(std::uint64_t candidates, std::uint64_t current, int size) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_set_ = current;
      }
      return;
    }
    std::vector<int> verts;
    std::vector<int> bound;
    clique_partition(candidates, verts, bound);
    for (int idx = static_cast<int>(verts.size()) - 1; idx >= 0; --idx) {
      if (size + bound[idx] <= best_size_) return;
      const int v = verts[idx];
      const std::uint64_t bit = std::uint64_t{1} << v;
      expand(candidates & ~g_.neighbor_mask(v) & ~bit, current | bit, size + 1);
      candidates &= ~bit;
    }
  }

  // Orders candidates by clique class; bound[i] = class count up to verts[i].
  void clique_partition(std::uint64_t candidates, std::vector<int>& verts,
                        std::vector<int>& bound) const {
    int classes = 0;
    std::uint64_t remaining = candidates;
    while (remaining) {
      ++classes;
      std::uint64_t pool = remaining;
      while (pool) {
        const int v = std::countr_zero(pool);
        const std::uint64_t bit = std::uint64_t{1} << v;
        verts.push_back(v);
        bound.push_back(classes);
        remaining &= ~bit;
        pool &= g_.neighbor_mask(v) & ~bit;
      }
    }
  }

  const Graph& g_;
  int best_size_ = -1;
  std::uint64_t best_set_ = 0;
};

}  // namespace

std::vector<int> maximum_independent_set(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw CapacityError("independence number", g.order(), cap, "--alpha-cap");
  }
  if (g.order() > 64) {
    throw CapacityError("independence number", g.order(), 64, "a smaller graph");
  }
  if (g.order() == 0) return {};
  const std::uint64_t set = IndependentSetSearch(g).run();
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (set >> v & 1u) out.push_back(v);
  return out;
}

int independence_number(const Graph& g, int cap) {
  return static_cast<int>(maximum_independent_set(g, cap).size());
}

int min_degree(const Graph& g) {
  if (g.order() < 1) throw DomainError("min_degree of an empty vertex set");
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("edge list: missing header \"n m\"", 1);
  std::istringstream header(line);
  long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw ParseError("edge list line " + std::to_string(line_no) +
                         ": expected \"n m\"",
                     line_no);
  }
  std::vector<Edge> edges;
  for (long k = 0; k < m; ++k) {
    if (!next_line()) {
      throw ParseError("edge list: expected " + std::to_string(m) +
                           " edges, found " + std::to_string(k),
                       line_no + 1);
    }
    std::istringstream row(line);
    long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                           ": expected \"u v\"",
                       line_no);
    }
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                           ": invalid edge " + std::to_string(u) + " " +
                           std::to_string(v),
                       line_no);
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace framegraph
