#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "framegraph/graph.hpp"

namespace framegraph {

enum class Field { real, complex };

std::string field_name(Field f);
Field parse_field(const std::string& text);

using Scalar = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

constexpr double kDefaultZeroTol = 1e-9;

/// Ordered list of vectors f_1..f_k in R^dim or C^dim, stored as the columns
/// of a dim x k matrix. Real frames keep zero imaginary parts.
struct Frame {
  Field field = Field::real;
  CMatrix vectors;
  double zero_tol = kDefaultZeroTol;

  int dim() const { return static_cast<int>(vectors.rows()); }
  int count() const { return static_cast<int>(vectors.cols()); }

  static Frame from_real(const Eigen::MatrixXd& columns,
                         double zero_tol = kDefaultZeroTol);
};

/// Conjugate-symmetric PSD matrix; entries(i, j) = <f_j, f_i>.
struct GramMatrix {
  Field field = Field::real;
  CMatrix entries;
  double zero_tol = kDefaultZeroTol;

  int size() const { return static_cast<int>(entries.rows()); }
};

/// Scale-free zero test used by every pattern classification:
/// |x_ij| <= tol * sqrt(|x_ii| |x_jj|).
bool is_negligible(Scalar value, double diag_i, double diag_j, double tol);

/// Edge {i, j} iff the normalized inner product exceeds zero_tol.
/// Throws DomainError if some vector is zero.
Graph frame_graph(const Frame& f);
/// Zero/nonzero off-diagonal pattern of a matrix (the graph of A).
Graph pattern_graph(const GramMatrix& m);

int numerical_rank(const CMatrix& m, double tol);
bool is_frame(const Frame& f);
/// Smallest and largest eigenvalues of the frame operator sum f_i f_i^*.
std::pair<double, double> frame_constants(const Frame& f);

GramMatrix gram(const Frame& f);
/// Checks conjugate symmetry and PSD; throws DomainError otherwise.
void validate_gram(const GramMatrix& m);
/// Frame of dimension rank(m) whose Gram matrix reproduces m.
Frame factor_psd(const GramMatrix& m);

/// Adds one coordinate, set to 1 on a vector outside a spanning subset and
/// 0 elsewhere; the frame graph is unchanged and the dimension grows by one.
/// If `special` cannot be removed without losing the span another index is
/// chosen.
Frame lift(const Frame& f, int special);
/// Index lift() will actually use for the requested `special`.
int lift_index(const Frame& f, int special);

enum class NamedFrame { complete, complete_minus_edge, complete_bipartite, tree };

struct ConstructionParams {
  int n = 0;
  int m = 0;
  std::vector<Edge> edges;  // tree
};

/// Closed-form minimum-dimension frames. Vertex order matches make_named():
///  complete(n):              n copies of e_1 in dimension 1;
///  complete_minus_edge(n):   {e1+e2, e1-e2, e1, ..., e1} in dimension 2;
///  complete_bipartite(m, n): e_1..e_m then u_1..u_n, u_i = sum_{k != i} e_k
///                            + (2-m)/2 e_i, in dimension m (m >= n, m != 2);
///  tree(edges):              signed vertex-edge incidence vectors, dimension
///                            = number of edges.
Frame construct_frame(NamedFrame which, const ConstructionParams& params);
Frame tree_frame(const Graph& tree);

/// Gram matrix of the Cartesian product pattern: A (x) I_m + I_n (x) B.
struct KroneckerRealization {
  GramMatrix matrix;
  Frame frame;
  int rank = 0;
};
KroneckerRealization kronecker_sum_realization(const Graph& g, const GramMatrix& a,
                                               const Graph& h, const GramMatrix& b);

/// Appends a vector in the span of h that is non-orthogonal to each h vector.
/// Realizes H joined with one new vertex (index h.count()) at the same rank.
Frame cone_realization(const Frame& h, std::uint64_t seed);

struct CoverPart {
  std::vector<int> vertices;
  Frame frame;  // frame graph must equal induced_subgraph(g, vertices)
};

/// Sums the parts' Gram matrices (embedded by vertex list) with random
/// positive weights and factors the result. Rank <= sum of part ranks.
Frame cover_sum_realization(const Graph& g, const std::vector<CoverPart>& parts,
                            std::uint64_t seed);

/// Cover of g o h by the cones H v root_i and the root copy of g.
Frame corona_realization(const Graph& g, const Frame& fg, const Graph& h,
                         const Frame& fh, std::uint64_t seed);

/// Rank-1 clique parts summed; rank <= number of cliques.
Frame clique_cover_realization(const Graph& g,
                               const std::vector<std::vector<int>>& cliques,
                               std::uint64_t seed);

/// Sequential generic orthogonal representation in dimension `dim`: vertex
/// v receives a random vector orthogonal to its earlier non-neighbours.
/// Succeeds generically when dim >= order - vertex_connectivity.
Frame orthogonal_representation(const Graph& g, int dim, std::uint64_t seed);

/// True iff f is a frame of dimension `dim` whose frame graph is g.
bool verifies(const Frame& f, const Graph& g);

/// CSV: header "# field=real|complex dim=<d>", then one vector per row.
void write_frame_csv(std::ostream& out, const Frame& f);
Frame read_frame_csv(std::istream& in, double zero_tol = kDefaultZeroTol);
void write_gram_csv(std::ostream& out, const GramMatrix& m);
GramMatrix read_gram_csv(std::istream& in, Field field,
                         double zero_tol = kDefaultZeroTol);

}  // namespace framegraph
