#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "framegraph/bounds.hpp"
#include "framegraph/dsl.hpp"
#include "framegraph/frames.hpp"
#include "framegraph/graph.hpp"

namespace framegraph {

/// Numerical search for a rank-d PSD matrix with a prescribed zero pattern,
/// carried out on unit-norm vector configurations. Successes are verified
/// frames; failures carry no information about feasibility.
struct RealizationConfig {
  Field field = Field::real;
  int restarts = 64;
  int max_iters = 2000;
  double nonzero_floor = 0.05;  // minimum normalized |<x_i, x_j>| on edges
  double zero_ceiling = 1e-7;   // maximum normalized |<x_i, x_j>| on non-edges
  std::uint64_t seed = 1;

  double initial_step = 0.5;
  double armijo = 1e-4;
  double backtrack = 0.5;
  int max_backtracks = 40;
  /// Hinge target for the d-th singular value, relative to sqrt(n / d).
  double span_floor = 0.05;

  /// Restarts run in batches of this size; the lowest successful restart
  /// index wins, so results do not depend on the worker count.
  int workers = 1;
  double zero_tol = kDefaultZeroTol;
  int os_cap = kDefaultOsCap;
  int alpha_cap = kDefaultAlphaCap;

  /// Called once per finished restart batch when set.
  std::function<void(const std::string&)> progress;
};

/// Throws ParameterError unless nonzero_floor > zero_ceiling > 0 and the
/// counts and step parameters are positive.
void validate_config(const RealizationConfig& cfg);

struct CertifiedLower {
  int value = 1;
  std::string cert;  // os_witness | independence
};

/// max(OS witness size, alpha when min degree >= 1) for connected g.
CertifiedLower certified_lower_bound(const Graph& g, const RealizationConfig& cfg);

/// Throws InfeasibleRankError when d is below the certified lower bound,
/// DomainError for disconnected g, ParameterError unless 1 <= d <= |g|.
std::optional<Frame> find_realization(const Graph& g, int d, const RealizationConfig& cfg);

struct RankProbe {
  int rank = 0;
  bool success = false;
};

struct RankSearchResult {
  int certified_lower = 0;
  std::string lower_cert;
  int best_realized = 0;
  Frame frame;
  std::string method;  // search | constructive:<name>
  /// best_realized == certified_lower.
  bool exact = false;
  /// [best_realized, |g|] when exact.
  std::optional<std::pair<int, int>> dims;
  std::vector<RankProbe> probes;
};

/// Scans d upward from the lower bound until the search succeeds, falling
/// back to the best constructive realization. `expr` enables structured
/// constructions; for K_n x K_m Cartesian products rank n+m-2 is probed and
/// recorded even when the scan does not reach it.
RankSearchResult min_rank_search(const Graph& g, const RealizationConfig& cfg,
                                 const GraphExpr* expr = nullptr);

/// Some (n, m) when expr is cartesian(complete:n, complete:m).
std::optional<std::pair<int, int>> complete_cartesian_params(const GraphExpr* expr);

}  // namespace framegraph
