#include "framegraph/frames.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "framegraph/error.hpp"
#include "framegraph/products.hpp"

namespace framegraph {

std::string field_name(Field f) { return f == Field::real ? "real" : "complex"; }

Field parse_field(const std::string& text) {
  if (text == "real") return Field::real;
  if (text == "complex") return Field::complex;
  throw ParameterError("field must be real or complex, got \"" + text + "\"");
}

Frame Frame::from_real(const Eigen::MatrixXd& columns, double zero_tol) {
  Frame f;
  f.field = Field::real;
  f.vectors = columns.cast<Scalar>();
  f.zero_tol = zero_tol;
  return f;
}

bool is_negligible(Scalar value, double diag_i, double diag_j, double tol) {
  return std::abs(value) <= tol * std::sqrt(std::abs(diag_i) * std::abs(diag_j));
}

namespace {

Graph pattern_of(const CMatrix& m, double tol) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_negligible(m(i, j), m(i, i).real(), m(j, j).real(), tol))
        edges.emplace_back(i, j);
  return Graph(n, edges);
}

// Eigenvalues ascending; real path when the field is real so eigenvectors
// stay real.
void hermitian_eigen(const CMatrix& m, Field field, Eigen::VectorXd& values,
                     CMatrix& vectors) {
  if (field == Field::real) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real());
    values = solver.eigenvalues();
    vectors = solver.eigenvectors().cast<Scalar>();
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    values = solver.eigenvalues();
    vectors = solver.eigenvectors();
  }
}

int psd_rank_from_values(const Eigen::VectorXd& values, double tol) {
  if (values.size() == 0) return 0;
  const double scale = std::max(std::abs(values.maxCoeff()), std::abs(values.minCoeff()));
  if (scale == 0.0) return 0;
  int rank = 0;
  for (double v : values)
    if (v > tol * scale) ++rank;
  return rank;
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

constexpr int kMaxRetries = 32;

// Normalized inner products below this are treated as accidental
// cancellation by the randomized constructions.
double nonzero_margin(double zero_tol) { return std::max(1e3 * zero_tol, 1e-6); }

}  // namespace

Graph frame_graph(const Frame& f) {
  const Eigen::VectorXd norms = f.vectors.colwise().norm();
  const double largest = norms.size() ? norms.maxCoeff() : 0.0;
  for (int i = 0; i < f.count(); ++i) {
    if (norms(i) == 0.0 || norms(i) <= f.zero_tol * largest) {
      throw DomainError("frame vector " + std::to_string(i) + " is zero");
    }
  }
  return pattern_of(f.vectors.adjoint() * f.vectors, f.zero_tol);
}

Graph pattern_graph(const GramMatrix& m) { return pattern_of(m.entries, m.zero_tol); }

int numerical_rank(const CMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++rank;
  return rank;
}

bool is_frame(const Frame& f) {
  return f.dim() >= 1 && f.count() >= f.dim() &&
         numerical_rank(f.vectors, f.zero_tol) == f.dim();
}

std::pair<double, double> frame_constants(const Frame& f) {
  if (!is_frame(f)) {
    throw DomainError("frame_constants: vectors do not span the space (lower frame bound is 0)");
  }
  Eigen::VectorXd values;
  CMatrix vecs;
  hermitian_eigen(f.vectors * f.vectors.adjoint(), f.field, values, vecs);
  return {values.minCoeff(), values.maxCoeff()};
}

GramMatrix gram(const Frame& f) {
  GramMatrix m;
  m.field = f.field;
  m.entries = f.vectors.adjoint() * f.vectors;
  m.zero_tol = f.zero_tol;
  return m;
}

void validate_gram(const GramMatrix& m) {
  if (m.entries.rows() != m.entries.cols()) throw DomainError("Gram matrix is not square");
  const double scale = std::max(1.0, m.entries.cwiseAbs().maxCoeff());
  if ((m.entries - m.entries.adjoint()).cwiseAbs().maxCoeff() > m.zero_tol * scale) {
    throw DomainError("Gram matrix is not conjugate-symmetric");
  }
  if (m.field == Field::real && m.entries.imag().cwiseAbs().maxCoeff() > m.zero_tol * scale) {
    throw DomainError("real Gram matrix has imaginary entries");
  }
  Eigen::VectorXd values;
  CMatrix vecs;
  hermitian_eigen(m.entries, m.field, values, vecs);
  const double spread = std::max(std::abs(values.maxCoeff()), std::abs(values.minCoeff()));
  if (values.size() && values.minCoeff() < -m.zero_tol * std::max(spread, 1.0)) {
    std::ostringstream msg;
    msg << "matrix is not positive semidefinite: most negative eigenvalue "
        << values.minCoeff();
    throw DomainError(msg.str());
  }
}

Frame factor_psd(const GramMatrix& m) {
  validate_gram(m);
  Eigen::VectorXd values;
  CMatrix vecs;
  hermitian_eigen(m.entries, m.field, values, vecs);
  const int n = m.size();
  const int rank = psd_rank_from_values(values, m.zero_tol);
  if (rank == 0) throw DomainError("factor_psd: zero matrix has no frame");
  Frame f;
  f.field = m.field;
  f.zero_tol = m.zero_tol;
  f.vectors.resize(rank, n);
  // Keep the `rank` largest eigenpairs: row k is sqrt(lambda) v^*.
  for (int k = 0; k < rank; ++k) {
    const int idx = n - 1 - k;
    f.vectors.row(k) = std::sqrt(values(idx)) * vecs.col(idx).adjoint();
  }
  if (m.field == Field::real) f.vectors = f.vectors.real().cast<Scalar>();
  return f;
}

int lift_index(const Frame& f, int special) {
  if (!is_frame(f)) throw DomainError("lift: input is not a frame");
  if (f.count() <= f.dim()) {
    throw DomainError("lift: " + std::to_string(f.count()) + " vectors in dimension " +
                      std::to_string(f.dim()) + " leave no room to lift");
  }
  if (special < 0 || special >= f.count()) {
    throw ParameterError("lift: special index out of range");
  }
  auto rank_without = [&](int skip) {
    CMatrix rest(f.dim(), f.count() - 1);
    for (int j = 0, c = 0; j < f.count(); ++j)
      if (j != skip) rest.col(c++) = f.vectors.col(j);
    return numerical_rank(rest, f.zero_tol);
  };
  if (rank_without(special) == f.dim()) return special;
  for (int j = f.count() - 1; j >= 0; --j)
    if (rank_without(j) == f.dim()) return j;
  throw InternalError("lift: no removable vector in a redundant frame");
}

Frame lift(const Frame& f, int special) {
  const int chosen = lift_index(f, special);
  Frame out = f;
  out.vectors = CMatrix::Zero(f.dim() + 1, f.count());
  out.vectors.topRows(f.dim()) = f.vectors;
  out.vectors(f.dim(), chosen) = 1.0;
  return out;
}

Frame tree_frame(const Graph& tree) {
  if (!is_tree(tree) || tree.order() < 2) {
    throw ParameterError("tree frame requires a tree with at least two vertices");
  }
  const auto edges = tree.edges();
  Eigen::MatrixXd cols = Eigen::MatrixXd::Zero(static_cast<int>(edges.size()), tree.order());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    cols(e, edges[e].first) = 1.0;
    cols(e, edges[e].second) = -1.0;
  }
  return Frame::from_real(cols);
}

Frame construct_frame(NamedFrame which, const ConstructionParams& params) {
  Frame f;
  Graph target;
  switch (which) {
    case NamedFrame::complete: {
      if (params.n < 1) throw ParameterError("complete frame requires n >= 1");
      f = Frame::from_real(Eigen::MatrixXd::Ones(1, params.n));
      target = make_complete(params.n);
      break;
    }
    case NamedFrame::complete_minus_edge: {
      const int n = params.n;
      if (n < 3) throw ParameterError("complete_minus_edge frame requires n >= 3");
      Eigen::MatrixXd cols = Eigen::MatrixXd::Zero(2, n);
      cols.col(0) << 1.0, 1.0;
      cols.col(1) << 1.0, -1.0;
      for (int i = 2; i < n; ++i) cols(0, i) = 1.0;
      f = Frame::from_real(cols);
      target = make_complete_minus_edge(n);
      break;
    }
    case NamedFrame::complete_bipartite: {
      const int m = params.m;
      const int n = params.n;
      if (!(m >= n && n >= 1)) {
        throw ParameterError("complete_bipartite frame requires parts m >= n >= 1");
      }
      if (m == 2) {
        throw ParameterError("complete_bipartite frame requires m != 2 (the diagonal "
                             "coefficient (2-m)/2 vanishes)");
      }
      Eigen::MatrixXd cols = Eigen::MatrixXd::Zero(m, m + n);
      cols.leftCols(m).setIdentity();
      for (int i = 0; i < n; ++i) {
        cols.col(m + i).setOnes();
        cols(i, m + i) = (2.0 - m) / 2.0;
      }
      f = Frame::from_real(cols);
      target = make_complete_bipartite(m, n);
      break;
    }
    case NamedFrame::tree: {
      target = make_tree(params.edges);
      f = tree_frame(target);
      break;
    }
  }
  if (!verifies(f, target)) {
    throw InternalError("construct_frame: closed-form frame failed pattern verification");
  }
  return f;
}

KroneckerRealization kronecker_sum_realization(const Graph& g, const GramMatrix& a,
                                               const Graph& h, const GramMatrix& b) {
  validate_gram(a);
  validate_gram(b);
  if (a.size() != g.order() || b.size() != h.order()) {
    throw DomainError("kronecker_sum_realization: matrix size does not match graph order");
  }
  if (!(pattern_graph(a) == g) || !(pattern_graph(b) == h)) {
    throw DomainError("kronecker_sum_realization: input pattern does not match its graph");
  }
  const int n = g.order();
  const int m = h.order();
  KroneckerRealization out;
  out.matrix.field = (a.field == Field::complex || b.field == Field::complex) ? Field::complex
                                                                               : Field::real;
  out.matrix.zero_tol = std::max(a.zero_tol, b.zero_tol);
  out.matrix.entries = CMatrix::Zero(n * m, n * m);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < m; ++j) {
        out.matrix.entries(pair_id(i, j, m), pair_id(k, j, m)) += a.entries(i, k);
      }
    }
    out.matrix.entries.block(i * m, i * m, m, m) += b.entries;
  }
  if (!(pattern_graph(out.matrix) == cartesian(g, h))) {
    throw InternalError("Kronecker sum pattern differs from the Cartesian product");
  }
  out.frame = factor_psd(out.matrix);
  out.rank = out.frame.dim();
  return out;
}

Frame cone_realization(const Frame& h, std::uint64_t seed) {
  if (!is_frame(h)) throw DomainError("cone_realization: input is not a frame");
  const double margin = nonzero_margin(h.zero_tol);
  const Eigen::VectorXd norms = h.vectors.colwise().norm();
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    auto rng = make_rng(seed, 0xC0E0000u + attempt);
    std::normal_distribution<double> normal;
    Eigen::VectorXcd coeff(h.count());
    for (int j = 0; j < h.count(); ++j) {
      coeff(j) = h.field == Field::real ? Scalar(normal(rng), 0.0)
                                        : Scalar(normal(rng), normal(rng));
    }
    const Eigen::VectorXcd v = h.vectors * coeff;
    const double vnorm = v.norm();
    if (vnorm == 0.0) continue;
    bool ok = true;
    for (int j = 0; j < h.count() && ok; ++j) {
      ok = std::abs(h.vectors.col(j).dot(v)) > margin * vnorm * norms(j);
    }
    if (!ok) continue;
    Frame out = h;
    out.vectors.conservativeResize(Eigen::NoChange, h.count() + 1);
    out.vectors.col(h.count()) = v / vnorm;
    return out;
  }
  throw RealizationError("cone_realization: every random apex was orthogonal to some vector");
}

Frame cover_sum_realization(const Graph& g, const std::vector<CoverPart>& parts,
                            std::uint64_t seed) {
  const int n = g.order();
  std::vector<int> vertex_hits(n, 0);
  std::vector<std::uint8_t> edge_hit(static_cast<std::size_t>(n) * n, 0);
  Field field = Field::real;
  double tol = kDefaultZeroTol;
  std::vector<GramMatrix> grams;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    if (part.frame.count() != static_cast<int>(part.vertices.size())) {
      throw ParameterError("cover part " + std::to_string(p) +
                           ": frame size differs from vertex list");
    }
    const Graph piece = induced_subgraph(g, part.vertices);
    if (!(frame_graph(part.frame) == piece)) {
      throw ParameterError("cover part " + std::to_string(p) +
                           ": frame graph differs from the induced subgraph");
    }
    for (std::size_t a = 0; a < part.vertices.size(); ++a) {
      ++vertex_hits[part.vertices[a]];
      for (std::size_t b = 0; b < part.vertices.size(); ++b)
        edge_hit[static_cast<std::size_t>(part.vertices[a]) * n + part.vertices[b]] = 1;
    }
    if (part.frame.field == Field::complex) field = Field::complex;
    tol = std::max(tol, part.frame.zero_tol);
    grams.push_back(gram(part.frame));
  }
  for (int v = 0; v < n; ++v)
    if (!vertex_hits[v]) throw ParameterError("cover misses vertex " + std::to_string(v));
  for (auto [u, v] : g.edges()) {
    if (!edge_hit[static_cast<std::size_t>(u) * n + v]) {
      throw ParameterError("cover misses edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "}");
    }
  }
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    auto rng = make_rng(seed, 0x5E000000u + attempt);
    std::uniform_real_distribution<double> weight(0.5, 2.0);
    GramMatrix sum;
    sum.field = field;
    sum.zero_tol = tol;
    sum.entries = CMatrix::Zero(n, n);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const double w = weight(rng);
      const auto& vs = parts[p].vertices;
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = 0; b < vs.size(); ++b)
          sum.entries(vs[a], vs[b]) += w * grams[p].entries(a, b);
    }
    // Weighted parts can cancel on a shared edge; check against a margin
    // well above the zero tolerance.
    bool ok = true;
    const double margin = nonzero_margin(tol);
    for (auto [u, v] : g.edges()) {
      if (is_negligible(sum.entries(u, v), sum.entries(u, u).real(),
                        sum.entries(v, v).real(), margin)) {
        ok = false;
        break;
      }
    }
    if (!ok || !(pattern_graph(sum) == g)) continue;
    Frame f = factor_psd(sum);
    if (verifies(f, g)) return f;
  }
  throw RealizationError("cover_sum_realization: cancellation persisted after retries");
}

Frame corona_realization(const Graph& g, const Frame& fg, const Graph& h, const Frame& fh,
                         std::uint64_t seed) {
  if (!verifies(fg, g)) throw ParameterError("corona_realization: fg does not realize g");
  if (!verifies(fh, h)) throw ParameterError("corona_realization: fh does not realize h");
  const int n = g.order();
  const int m = h.order();
  const Graph target = corona(g, h);
  std::vector<CoverPart> parts;
  for (int i = 0; i < n; ++i) {
    CoverPart cone;
    for (int v = 0; v < m; ++v) cone.vertices.push_back(corona_copy_id(i, v, n, m));
    cone.vertices.push_back(i);
    cone.frame = cone_realization(fh, seed * 1000003u + static_cast<std::uint64_t>(i));
    parts.push_back(std::move(cone));
  }
  CoverPart base;
  for (int i = 0; i < n; ++i) base.vertices.push_back(i);
  base.frame = fg;
  parts.push_back(std::move(base));
  return cover_sum_realization(target, parts, seed);
}

Frame clique_cover_realization(const Graph& g, const std::vector<std::vector<int>>& cliques,
                               std::uint64_t seed) {
  std::vector<CoverPart> parts;
  for (const auto& clique : cliques) {
    CoverPart p;
    p.vertices = clique;
    p.frame = construct_frame(NamedFrame::complete,
                              {static_cast<int>(clique.size()), 0, {}});
    parts.push_back(std::move(p));
  }
  return cover_sum_realization(g, parts, seed);
}

Frame orthogonal_representation(const Graph& g, int dim, std::uint64_t seed) {
  const int n = g.order();
  if (dim < 1 || dim > n) {
    throw ParameterError("orthogonal_representation: dimension must be in [1, order]");
  }
  const double margin = nonzero_margin(kDefaultZeroTol);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    auto rng = make_rng(seed, 0x0A000000u + attempt);
    std::normal_distribution<double> normal;
    Eigen::MatrixXd vecs = Eigen::MatrixXd::Zero(dim, n);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      std::vector<int> blockers;
      for (int u = 0; u < v; ++u)
        if (!g.adjacent(u, v)) blockers.push_back(u);
      Eigen::MatrixXd basis;
      if (blockers.empty()) {
        basis = Eigen::MatrixXd::Identity(dim, dim);
      } else {
        Eigen::MatrixXd rows(static_cast<int>(blockers.size()), dim);
        for (int k = 0; k < static_cast<int>(blockers.size()); ++k)
          rows.row(k) = vecs.col(blockers[k]).transpose();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
        const auto& s = svd.singularValues();
        int r = 0;
        for (int k = 0; k < s.size(); ++k)
          if (s(k) > 1e-10 * s(0)) ++r;
        if (r >= dim) {
          ok = false;
          break;
        }
        basis = svd.matrixV().rightCols(dim - r);
      }
      Eigen::VectorXd c(basis.cols());
      for (int k = 0; k < c.size(); ++k) c(k) = normal(rng);
      Eigen::VectorXd x = basis * c;
      x.normalize();
      for (int u = 0; u < v && ok; ++u) {
        if (g.adjacent(u, v)) ok = std::abs(x.dot(vecs.col(u))) > margin;
      }
      vecs.col(v) = x;
    }
    if (!ok) continue;
    Frame f = Frame::from_real(vecs);
    if (verifies(f, g)) return f;
  }
  throw RealizationError("orthogonal_representation: no faithful spanning representation of " +
                         std::to_string(n) + " vertices found in dimension " +
                         std::to_string(dim));
}

bool verifies(const Frame& f, const Graph& g) {
  if (f.count() != g.order() || !is_frame(f)) return false;
  try {
    return frame_graph(f) == g;
  } catch (const DomainError&) {
    return false;
  }
}

namespace {

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_scalar(Scalar z, Field field) {
  if (field == Field::real) return format_double(z.real());
  std::string im = format_double(std::abs(z.imag()));
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + im + "i";
}

Scalar parse_scalar(const std::string& cell, std::size_t line) {
  auto bad = [&]() -> ParseError {
    return ParseError("line " + std::to_string(line) + ": cannot parse number \"" + cell + "\"",
                      line);
  };
  std::string s;
  for (char c : cell)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw bad();
  const char* begin = s.c_str();
  char* end = nullptr;
  if (s.back() != 'i') {
    const double re = std::strtod(begin, &end);
    if (end != begin + s.size()) throw bad();
    return {re, 0.0};
  }
  // a+bi, a-bi, bi, i
  std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto parse_part = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    char* e = nullptr;
    const double v = std::strtod(part.c_str(), &e);
    if (e != part.c_str() + part.size()) throw bad();
    return v;
  };
  if (split == std::string::npos) return {0.0, parse_part(body)};
  const std::string re_part = body.substr(0, split);
  char* e = nullptr;
  const double re = std::strtod(re_part.c_str(), &e);
  if (e != re_part.c_str() + re_part.size()) throw bad();
  return {re, parse_part(body.substr(split))};
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

void write_frame_csv(std::ostream& out, const Frame& f) {
  out << "# field=" << field_name(f.field) << " dim=" << f.dim() << '\n';
  for (int j = 0; j < f.count(); ++j) {
    for (int k = 0; k < f.dim(); ++k) {
      if (k) out << ',';
      out << format_scalar(f.vectors(k, j), f.field);
    }
    out << '\n';
  }
}

Frame read_frame_csv(std::istream& in, double zero_tol) {
  std::string line;
  std::size_t line_no = 0;
  Field field = Field::real;
  int dim = -1;
  bool header = false;
  std::vector<std::vector<Scalar>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    if (line[line.find_first_not_of(" \t")] == '#') {
      if (header) continue;
      std::istringstream hs(line.substr(line.find('#') + 1));
      std::string token;
      while (hs >> token) {
        if (token.rfind("field=", 0) == 0) {
          try {
            field = parse_field(token.substr(6));
          } catch (const ParameterError&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad field \"" +
                                 token.substr(6) + "\"",
                             line_no);
          }
        } else if (token.rfind("dim=", 0) == 0) {
          char* e = nullptr;
          const std::string v = token.substr(4);
          dim = static_cast<int>(std::strtol(v.c_str(), &e, 10));
          if (v.empty() || *e != '\0' || dim < 1) {
            throw ParseError("line " + std::to_string(line_no) + ": bad dim \"" + v + "\"",
                             line_no);
          }
        }
      }
      header = true;
      continue;
    }
    if (!header) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": missing header \"# field=real|complex dim=<d>\"",
                       line_no);
    }
    std::vector<Scalar> row;
    for (const auto& cell : split_csv(line)) row.push_back(parse_scalar(cell, line_no));
    if (dim < 0) dim = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != dim) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                           " entries, found " + std::to_string(row.size()),
                       line_no);
    }
    if (field == Field::real) {
      for (const auto& z : row) {
        if (z.imag() != 0.0) {
          throw ParseError("line " + std::to_string(line_no) +
                               ": complex entry in a real frame",
                           line_no);
        }
      }
    }
    rows.push_back(std::move(row));
  }
  if (!header) throw ParseError("frame file: missing header", line_no + 1);
  if (rows.empty()) throw ParseError("frame file: no vectors", line_no + 1);
  Frame f;
  f.field = field;
  f.zero_tol = zero_tol;
  f.vectors.resize(dim, static_cast<int>(rows.size()));
  for (int j = 0; j < static_cast<int>(rows.size()); ++j)
    for (int k = 0; k < dim; ++k) f.vectors(k, j) = rows[j][k];
  return f;
}

void write_gram_csv(std::ostream& out, const GramMatrix& m) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j) out << ',';
      out << format_scalar(m.entries(i, j), m.field);
    }
    out << '\n';
  }
}

GramMatrix read_gram_csv(std::istream& in, Field field, double zero_tol) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::vector<Scalar>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<Scalar> row;
    for (const auto& cell : split_csv(line)) row.push_back(parse_scalar(cell, line_no));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": ragged Gram row", line_no);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.size() != rows.front().size()) {
    throw ParseError("Gram file: matrix is not square", line_no);
  }
  GramMatrix m;
  m.field = field;
  m.zero_tol = zero_tol;
  const int n = static_cast<int>(rows.size());
  m.entries.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.entries(i, j) = rows[i][j];
  return m;
}

}  // namespace framegraph
