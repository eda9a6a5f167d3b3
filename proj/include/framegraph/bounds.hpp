#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framegraph/dsl.hpp"
#include "framegraph/frames.hpp"
#include "framegraph/graph.hpp"
#include "framegraph/products.hpp"

namespace framegraph {

constexpr int kDefaultOsCap = 14;
constexpr int kDefaultCcCap = 14;

/// Ordered vertices v_1..v_m with companions w_1..w_m. For each k, w_k lies
/// outside {v_1..v_k}, is adjacent to v_k, and is adjacent to no other vertex
/// of the component H_k of G[v_1..v_k] that contains v_k.
struct OSWitness {
  std::vector<int> ordered;
  std::vector<int> companions;

  int size() const { return static_cast<int>(ordered.size()); }
  friend bool operator==(const OSWitness&, const OSWitness&) = default;
};

/// Throws ParameterError on length mismatch or out-of-range ids.
bool verify_os_set(const Graph& g, const OSWitness& w);

struct OSResult {
  int value = 0;
  OSWitness witness;
};

/// Exact OS-number with the lexicographically least maximum witness.
/// Validity of appending v to a prefix depends only on the prefix's vertex
/// set, so the search is a memoized walk over subsets.
OSResult os_number(const Graph& g, int cap = kDefaultOsCap);

/// Witness on product(kind, g, h) assembled from operand witnesses:
///  strong (paths only): v_ij = (s_i, t_j), w_ij = (s_i+1, t_j+1);
///  cartesian: the larger of |g| * |hw| and |h| * |gw|, one copy per vertex
///             of the other factor, interleaved position by position;
///  corona: every copy of h carries hw, followed by gw on the roots.
OSWitness os_witness_for_product(ProductKind kind, const Graph& g, const Graph& h,
                                 const OSWitness& gw, const OSWitness& hw);

/// Vertex order along a path graph, starting from its smaller endpoint.
std::vector<int> path_order(const Graph& path);

struct CliqueCover {
  int value = 0;
  std::vector<std::vector<int>> cliques;
};

/// Maximal cliques (each sorted), in lexicographic order.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);
/// Every edge and every vertex lies in some listed clique.
bool verify_clique_cover(const Graph& g, const std::vector<std::vector<int>>& cliques);
/// Exact cc(g): fewest cliques covering all edges and vertices.
CliqueCover clique_cover_number(const Graph& g, int cap = kDefaultCcCap);
/// Valid (not necessarily minimum) cover chosen greedily from maximal cliques.
CliqueCover greedy_clique_cover(const Graph& g);
/// The (n-1)(m-1) K_4 blocks of strong(P_n, P_m) in product numbering.
/// Both operands must be paths on at least two vertices.
CliqueCover strong_path_clique_cover(const Graph& path_g, const Graph& path_h);

/// Exact vertex connectivity; kappa(K_n) = n - 1. Requires connected g.
int vertex_connectivity(const Graph& g);

struct FormulaNote {
  std::string name;
  std::optional<int> value;  // exact closed form
  std::optional<int> min;    // interval forms
  std::optional<int> max;
  bool literature_lower = false;
  std::string citation;
};

/// Closed forms that structurally match g (via its construction tree when
/// available, otherwise by direct recognition of a few families).
std::vector<FormulaNote> match_formulas(const Graph& g, const GraphExpr* expr, Field field);

struct BoundsOptions {
  Field field = Field::real;
  int os_cap = kDefaultOsCap;
  int cc_cap = kDefaultCcCap;
  int alpha_cap = kDefaultAlphaCap;
  double zero_tol = kDefaultZeroTol;
  std::uint64_t seed = 1;
  /// Attach constructive realizations as upper-bound certificates.
  bool realize = true;
};

struct CertifiedBound {
  int value = 0;
  std::string cert;
};

struct BoundsReport {
  std::string graph;
  int order = 0;
  Field field = Field::real;
  CertifiedBound lower;
  CertifiedBound upper;
  bool lower_literature_sourced = false;

  std::optional<OSWitness> os_witness;
  bool os_exact = false;
  std::optional<int> independence;
  std::optional<CliqueCover> clique_cover;
  bool clique_cover_exact = false;
  std::optional<int> connectivity;
  std::optional<Frame> realization;
  std::string realization_method;

  std::vector<FormulaNote> formula_notes;
  /// Frame-graph dimension range [mr+, order] when the bounds meet.
  std::optional<std::pair<int, int>> dims;
};

BoundsReport bounds_report(const Graph& g, const BoundsOptions& opts,
                           const GraphExpr* expr = nullptr);

struct OSCertificate {
  OSWitness witness;
  bool exact = false;
};
/// OS witness for a connected g on >= 2 vertices: exact when g fits the cap,
/// otherwise assembled from the construction tree; CapacityError if neither applies.
OSCertificate best_os_witness(const Graph& g, const GraphExpr* expr, int os_cap);

/// Lowest-rank verified frame among the constructions that apply to g.
struct RealizationCandidate {
  Frame frame;
  std::string method;
};
std::optional<RealizationCandidate> constructive_realization(const Graph& g,
                                                             const GraphExpr* expr,
                                                             const BoundsOptions& opts);

}  // namespace framegraph
