#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace framegraph {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..order-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  /// Throws ParameterError on self-loops or out-of-range endpoints.
  /// Repeated edges are merged.
  Graph(int order, const std::vector<Edge>& edges,
        std::vector<std::string> labels = {});

  int order() const { return order_; }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(int u, int v) const {
    return adjacency_[static_cast<std::size_t>(u) * order_ + v] != 0;
  }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Neighborhood as a bitmask; only valid for order <= 64.
  std::uint64_t neighbor_mask(int v) const { return masks_[v]; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;

  /// Structural equality: same order and edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adjacency_ == b.adjacency_;
  }

 private:
  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::string> labels_;
};

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  empty,
  h_regular,
  tree_from_edges,
  complete_minus_edge,
};

struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;
  std::vector<Edge> edges;  // tree_from_edges only
};

std::string family_name(Family f);

/// Canonical labeled member of a family. Vertex numbering:
///  path/cycle: consecutive ids along the path/cycle;
///  complete_bipartite(m, n): first part 0..m-1, second part m..m+n-1;
///  star(n): center 0, leaves 1..n-1;
///  h_regular(n): complement of the matching {2k, 2k+1};
///  complete_minus_edge(n): missing edge {0, 1}.
Graph make_named(const FamilySpec& spec);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int m, int n);
Graph make_star(int n);
Graph make_empty(int n);
Graph make_h_regular(int n);
Graph make_tree(const std::vector<Edge>& edges);
Graph make_complete_minus_edge(int n);

Graph complement(const Graph& g);
/// Vertices are renumbered by their position in `vertices`.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
/// Components sorted by smallest vertex; vertices inside each sorted.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_cycle(const Graph& g);
bool is_complete(const Graph& g);

/// Perfect-elimination-ordering test via maximum cardinality search.
bool is_chordal(const Graph& g);
/// Exhaustive induced-cycle search; intended for order <= 8.
bool is_chordal_bruteforce(const Graph& g);

constexpr int kDefaultAlphaCap = 24;
/// Exact independence number by branch and bound with a greedy-coloring bound.
int independence_number(const Graph& g, int cap = kDefaultAlphaCap);
/// A maximum independent set (sorted).
std::vector<int> maximum_independent_set(const Graph& g,
                                         int cap = kDefaultAlphaCap);

int min_degree(const Graph& g);

/// Edge-list text: "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace framegraph
