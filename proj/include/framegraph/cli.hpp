#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "framegraph/bounds.hpp"
#include "framegraph/dsl.hpp"
#include "framegraph/frames.hpp"
#include "framegraph/ranksearch.hpp"

namespace framegraph {

using Json = nlohmann::ordered_json;

// ---- product table harness ------------------------------------------------

struct Table1Options {
  int n_min = 2;
  int n_max = 4;
  int m_min = 2;
  int m_max = 4;
  std::vector<Family> trees{Family::path, Family::star};
  Field field = Field::real;
  std::uint64_t seed = 1;
  int os_cap = kDefaultOsCap;
  int cc_cap = kDefaultCcCap;
  double zero_tol = kDefaultZeroTol;
  /// Search for a rank n+m-2 frame on K_n x K_m rows and record the outcome.
  bool probe = true;
  int probe_restarts = 8;
  int jobs = 1;
};

struct Table1Instance {
  std::string row;  // closed-form name, e.g. "C_n ∘ K_m"
  GraphExpr expr;
  std::vector<std::pair<std::string, int>> params;
  int expected = 0;  // exact value, or upper end for interval rows
  std::optional<int> expected_min;
  bool interval() const { return expected_min.has_value(); }
};

struct HarnessRow {
  int index = 0;
  Table1Instance instance;
  std::optional<BoundsReport> report;
  int realized = 0;
  bool realization_verified = false;
  bool os_verified = false;
  bool cover_verified = false;
  std::optional<int> kronecker_rank;  // interval rows
  std::optional<RankProbe> probe;
  std::string probe_note;
  bool exact = false;
  bool pass = false;
  std::string error;
};

/// Every product-table row over the parameter ranges, in fixed order.
std::vector<Table1Instance> table1_instances(const Table1Options& opts);
HarnessRow evaluate_row(const Table1Instance& inst, int index, const Table1Options& opts);
/// Rows may run on `jobs` threads; output order is the instance order.
std::vector<HarnessRow> run_table1(const Table1Options& opts);

// ---- Serialization ---------------------------------------------------------

Json witness_json(const OSWitness& w);
Json frame_json(const Frame& f);
Json bounds_json(const BoundsReport& r);
Json row_json(const HarnessRow& row);
std::string bounds_csv(const BoundsReport& r);
std::string table1_csv(const std::vector<HarnessRow>& rows);

// ---- Command line ----------------------------------------------------------

enum ExitCode : int { kExitOk = 0, kExitVerify = 1, kExitUsage = 2, kExitCapacity = 3 };

/// Graph descriptor: an existing file path is read as an edge list,
/// anything else is parsed as DSL. `expr` is set for DSL input.
Graph load_graph(const std::string& descriptor, std::optional<GraphExpr>& expr);

/// Full CLI; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framegraph
