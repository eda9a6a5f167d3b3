#include "framegraph/ranksearch.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "framegraph/error.hpp"

namespace framegraph {

namespace {

struct Pair {
  int i;
  int j;
};

// Vectors live in R^p, p = d (real) or 2d (complex, as [Re; Im]).
class Problem {
 public:
  Problem(const Graph& g, int d, const RealizationConfig& cfg)
      : d_(d), n_(g.order()), complex_(cfg.field == Field::complex), cfg_(cfg) {
    p_ = complex_ ? 2 * d : d;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) (g.adjacent(i, j) ? edges_ : zeros_).push_back({i, j});
    target_edge_ = 1.25 * cfg.nonzero_floor;
    target_span_ = cfg.span_floor * std::sqrt(static_cast<double>(n_) / d_);
  }

  int rows() const { return p_; }

  // Real and imaginary parts of the inner product of columns i and j.
  std::pair<double, double> inner(const Eigen::MatrixXd& y, int i, int j) const {
    const double re = y.col(i).dot(y.col(j));
    if (!complex_) return {re, 0.0};
    const double im = y.col(i).head(d_).dot(y.col(j).tail(d_)) -
                      y.col(i).tail(d_).dot(y.col(j).head(d_));
    return {re, im};
  }

  CMatrix as_complex(const Eigen::MatrixXd& y) const {
    if (!complex_) return y.cast<Scalar>();
    CMatrix c(d_, n_);
    c.real() = y.topRows(d_);
    c.imag() = y.bottomRows(d_);
    return c;
  }

  // Loss value; fills grad when non-null.
  double loss(const Eigen::MatrixXd& y, Eigen::MatrixXd* grad) const {
    double total = 0.0;
    if (grad) grad->setZero(p_, n_);
    auto push = [&](int i, int j, double cre, double cim) {
      // Adds cre * dRe + cim * dIm to the gradient.
      grad->col(i) += cre * y.col(j);
      grad->col(j) += cre * y.col(i);
      if (complex_ && cim != 0.0) {
        // dIm/dy_i = J y_j, dIm/dy_j = -J y_i with J = [[0, I], [-I, 0]].
        grad->col(i).head(d_) += cim * y.col(j).tail(d_);
        grad->col(i).tail(d_) -= cim * y.col(j).head(d_);
        grad->col(j).head(d_) -= cim * y.col(i).tail(d_);
        grad->col(j).tail(d_) += cim * y.col(i).head(d_);
      }
    };
    for (const auto& [i, j] : zeros_) {
      const auto [re, im] = inner(y, i, j);
      total += re * re + im * im;
      if (grad) push(i, j, 2.0 * re, 2.0 * im);
    }
    for (const auto& [i, j] : edges_) {
      const auto [re, im] = inner(y, i, j);
      const double mod = std::hypot(re, im);
      const double gap = target_edge_ - mod;
      if (gap <= 0.0) continue;
      total += gap * gap;
      if (grad && mod > 1e-300) push(i, j, -2.0 * gap * re / mod, -2.0 * gap * im / mod);
    }
    if (d_ <= n_) {
      const CMatrix c = as_complex(y);
      Eigen::JacobiSVD<CMatrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const double sigma = svd.singularValues()(d_ - 1);
      const double gap = target_span_ - sigma;
      if (gap > 0.0) {
        total += gap * gap;
        if (grad) {
          const CMatrix m = svd.matrixU().col(d_ - 1) * svd.matrixV().col(d_ - 1).adjoint();
          if (complex_) {
            grad->topRows(d_) -= 2.0 * gap * m.real();
            grad->bottomRows(d_) -= 2.0 * gap * m.imag();
          } else {
            *grad -= 2.0 * gap * m.real();
          }
        }
      }
    }
    return total;
  }

  double max_zero(const Eigen::MatrixXd& y) const {
    double worst = 0.0;
    for (const auto& [i, j] : zeros_) {
      const auto [re, im] = inner(y, i, j);
      worst = std::max(worst, std::hypot(re, im));
    }
    return worst;
  }

  double min_edge(const Eigen::MatrixXd& y) const {
    double least = 1.0;
    for (const auto& [i, j] : edges_) {
      const auto [re, im] = inner(y, i, j);
      least = std::min(least, std::hypot(re, im));
    }
    return least;
  }

  // Gauss-Newton with minimum-norm steps on the exact orthogonality and
  // unit-norm equations.
  void polish(Eigen::MatrixXd& y) const {
    const int eq_per = complex_ ? 2 : 1;
    const int m = static_cast<int>(zeros_.size()) * eq_per + n_;
    const int vars = p_ * n_;
    for (int it = 0; it < 30; ++it) {
      Eigen::VectorXd f(m);
      Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m, vars);
      int row = 0;
      for (const auto& [i, j] : zeros_) {
        const auto [re, im] = inner(y, i, j);
        f(row) = re;
        jac.block(row, i * p_, 1, p_) = y.col(j).transpose();
        jac.block(row, j * p_, 1, p_) = y.col(i).transpose();
        ++row;
        if (complex_) {
          f(row) = im;
          jac.block(row, i * p_, 1, d_) = y.col(j).tail(d_).transpose();
          jac.block(row, i * p_ + d_, 1, d_) = -y.col(j).head(d_).transpose();
          jac.block(row, j * p_, 1, d_) = -y.col(i).tail(d_).transpose();
          jac.block(row, j * p_ + d_, 1, d_) = y.col(i).head(d_).transpose();
          ++row;
        }
      }
      for (int i = 0; i < n_; ++i) {
        f(row) = 0.5 * (y.col(i).squaredNorm() - 1.0);
        jac.block(row, i * p_, 1, p_) = y.col(i).transpose();
        ++row;
      }
      if (f.cwiseAbs().maxCoeff() < 1e-15) break;
      const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-f);
      y += Eigen::Map<const Eigen::MatrixXd>(step.data(), p_, n_);
    }
    y.colwise().normalize();
  }

  Frame to_frame(const Eigen::MatrixXd& y) const {
    Frame f;
    f.field = cfg_.field;
    f.vectors = as_complex(y);
    f.zero_tol = cfg_.zero_tol;
    return f;
  }

 private:
  int d_;
  int n_;
  int p_ = 0;
  bool complex_;
  const RealizationConfig& cfg_;
  std::vector<Pair> edges_;
  std::vector<Pair> zeros_;
  double target_edge_ = 0.0;
  double target_span_ = 0.0;
};

void tangent(const Eigen::MatrixXd& y, Eigen::MatrixXd& grad) {
  for (int i = 0; i < y.cols(); ++i) grad.col(i) -= grad.col(i).dot(y.col(i)) * y.col(i);
}

std::optional<Frame> run_restart(const Graph& g, int d, const RealizationConfig& cfg,
                                 int restart) {
  Problem prob(g, d, cfg);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(d),
                    static_cast<std::uint32_t>(g.order()),
                    static_cast<std::uint32_t>(cfg.field == Field::complex)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd y(prob.rows(), g.order());
  for (int c = 0; c < y.cols(); ++c)
    for (int r = 0; r < y.rows(); ++r) y(r, c) = normal(rng);
  y.colwise().normalize();

  auto accept = [&](Eigen::MatrixXd cand) -> std::optional<Frame> {
    prob.polish(cand);
    if (prob.max_zero(cand) > cfg.zero_ceiling || prob.min_edge(cand) < cfg.nonzero_floor) {
      return std::nullopt;
    }
    Frame f = prob.to_frame(cand);
    if (f.dim() != d || !verifies(f, g)) return std::nullopt;
    return f;
  };

  Eigen::MatrixXd grad;
  double value = prob.loss(y, &grad);
  tangent(y, grad);
  double step = cfg.initial_step;
  // A failed polish tightens the threshold before the next attempt.
  double polish_at = 1e-4;
  for (int it = 0; it < cfg.max_iters; ++it) {
    if (prob.max_zero(y) < polish_at && prob.min_edge(y) >= cfg.nonzero_floor) {
      if (auto f = accept(y)) return f;
      polish_at *= 1e-2;
      if (polish_at < 1e-14) return std::nullopt;
    }
    const double slope = grad.squaredNorm();
    if (slope < 1e-30) break;
    bool moved = false;
    for (int b = 0; b < cfg.max_backtracks; ++b) {
      Eigen::MatrixXd trial = y - step * grad;
      trial.colwise().normalize();
      const double next = prob.loss(trial, nullptr);
      if (next <= value - cfg.armijo * step * slope) {
        y = std::move(trial);
        value = prob.loss(y, &grad);
        tangent(y, grad);
        step = std::min(step * 2.0, 64.0);
        moved = true;
        break;
      }
      step *= cfg.backtrack;
    }
    if (!moved) break;
  }
  if (prob.max_zero(y) < std::min(polish_at, 1e-3) && prob.min_edge(y) >= cfg.nonzero_floor) {
    return accept(y);
  }
  return std::nullopt;
}

}  // namespace

void validate_config(const RealizationConfig& cfg) {
  if (!(cfg.zero_ceiling > 0.0) || !(cfg.nonzero_floor > cfg.zero_ceiling)) {
    throw ParameterError("realization config requires nonzero_floor > zero_ceiling > 0");
  }
  if (cfg.nonzero_floor >= 0.8) throw ParameterError("nonzero_floor must be below 0.8");
  if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.workers < 1 || cfg.max_backtracks < 1) {
    throw ParameterError("restarts, max_iters, workers and max_backtracks must be positive");
  }
  if (!(cfg.initial_step > 0.0) || !(cfg.backtrack > 0.0 && cfg.backtrack < 1.0) ||
      !(cfg.armijo > 0.0 && cfg.armijo < 1.0) || !(cfg.span_floor > 0.0)) {
    throw ParameterError("invalid step or line-search parameters");
  }
  if (!(cfg.zero_tol > 0.0)) throw ParameterError("zero_tol must be positive");
}

CertifiedLower certified_lower_bound(const Graph& g, const RealizationConfig& cfg) {
  if (!is_connected(g)) throw DomainError("rank search requires a connected graph");
  if (g.order() == 1) return {1, "os_witness"};
  // Above the cap a single edge is still an OS-vertex set.
  CertifiedLower out{1, "os_witness"};
  try {
    out.value = best_os_witness(g, nullptr, cfg.os_cap).witness.size();
  } catch (const CapacityError&) {
  }
  if (min_degree(g) >= 1 && g.order() <= cfg.alpha_cap) {
    const int alpha = independence_number(g, cfg.alpha_cap);
    if (alpha > out.value) out = {alpha, "independence"};
  }
  return out;
}

std::optional<Frame> find_realization(const Graph& g, int d, const RealizationConfig& cfg) {
  validate_config(cfg);
  if (!is_connected(g)) throw DomainError("find_realization requires a connected graph");
  if (d < 1 || d > g.order()) {
    throw ParameterError("rank must lie in [1, " + std::to_string(g.order()) + "]");
  }
  const CertifiedLower lower = certified_lower_bound(g, cfg);
  if (d < lower.value) throw InfeasibleRankError(d, lower.value, lower.cert);

  const int batch = std::max(1, cfg.workers);
  for (int start = 0; start < cfg.restarts; start += batch) {
    const int count = std::min(batch, cfg.restarts - start);
    std::vector<std::optional<Frame>> results(count);
    if (count == 1) {
      results[0] = run_restart(g, d, cfg, start);
    } else {
      std::vector<std::thread> pool;
      for (int k = 0; k < count; ++k)
        pool.emplace_back([&, k] { results[k] = run_restart(g, d, cfg, start + k); });
      for (auto& t : pool) t.join();
    }
    for (int k = 0; k < count; ++k) {
      if (results[k]) {
        if (cfg.progress) {
          cfg.progress("rank " + std::to_string(d) + ": restart " + std::to_string(start + k) +
                       " succeeded");
        }
        return results[k];
      }
    }
    if (cfg.progress) {
      cfg.progress("rank " + std::to_string(d) + ": restarts " + std::to_string(start) + ".." +
                   std::to_string(start + count - 1) + " failed");
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> complete_cartesian_params(const GraphExpr* expr) {
  if (!expr || expr->is_family() || expr->product != ProductKind::cartesian) return std::nullopt;
  if (!expr->left().is_family(Family::complete) || !expr->right().is_family(Family::complete)) {
    return std::nullopt;
  }
  return std::pair{expr->left().family.params.at(0), expr->right().family.params.at(0)};
}

RankSearchResult min_rank_search(const Graph& g, const RealizationConfig& cfg,
                                 const GraphExpr* expr) {
  validate_config(cfg);
  const CertifiedLower lower = certified_lower_bound(g, cfg);
  RankSearchResult out;
  out.certified_lower = lower.value;
  out.lower_cert = lower.cert;

  std::optional<RealizationCandidate> fallback;
  if (g.order() == 1) {
    fallback = RealizationCandidate{construct_frame(NamedFrame::complete, {1, 0, {}}), "complete"};
  } else {
    BoundsOptions opts;
    opts.field = cfg.field;
    opts.os_cap = cfg.os_cap;
    opts.alpha_cap = cfg.alpha_cap;
    opts.zero_tol = cfg.zero_tol;
    opts.seed = cfg.seed;
    fallback = constructive_realization(g, expr, opts);
  }
  if (!fallback) throw InternalError("no constructive realization available");
  fallback->frame.field = cfg.field;
  fallback->frame.zero_tol = cfg.zero_tol;
  const int upper = fallback->frame.dim();

  std::optional<Frame> found;
  for (int d = lower.value; d < upper; ++d) {
    found = find_realization(g, d, cfg);
    out.probes.push_back({d, found.has_value()});
    if (found) break;
  }
  if (found) {
    out.frame = *found;
    out.method = "search";
  } else {
    out.frame = fallback->frame;
    out.method = "constructive:" + fallback->method;
  }
  out.best_realized = out.frame.dim();

  if (auto kk = complete_cartesian_params(expr)) {
    const int open = kk->first + kk->second - 2;
    const bool seen = std::any_of(out.probes.begin(), out.probes.end(),
                                  [&](const RankProbe& p) { return p.rank == open; });
    if (!seen && open >= lower.value && open >= 1) {
      if (open >= out.best_realized) {
        out.probes.push_back({open, true});
      } else {
        out.probes.push_back({open, find_realization(g, open, cfg).has_value()});
      }
    }
  }

  out.exact = out.best_realized == out.certified_lower;
  if (out.exact) out.dims = std::pair{out.best_realized, g.order()};
  return out;
}

}  // namespace framegraph
