#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "framegraph/cli.hpp"
#include "framegraph/error.hpp"

namespace framegraph {

Graph load_graph(const std::string& descriptor, std::optional<GraphExpr>& expr) {
  expr.reset();
  std::error_code ec;
  if (std::filesystem::is_regular_file(descriptor, ec)) {
    std::ifstream in(descriptor);
    if (!in) throw ParameterError("cannot open graph file " + descriptor);
    return read_edge_list(in);
  }
  expr = parse_graph_expr(descriptor);
  return expr->build();
}

namespace {

struct Globals {
  std::string field = "real";
  std::uint64_t seed = 1;
  double tol = kDefaultZeroTol;
  int os_cap = kDefaultOsCap;
  int cc_cap = kDefaultCcCap;
  std::string format = "json";
  std::string out_path;
};

class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}
  void emit(const std::string& text) {
    if (g_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(g_.out_path);
    if (!f) throw ParameterError("cannot write " + g_.out_path);
    f << text;
  }
  void emit(const Json& j) { emit(j.dump(2) + "\n"); }

 private:
  const Globals& g_;
  std::ostream& out_;
};

Json invocation(const std::vector<std::string>& args) {
  Json j = Json::array({"framegraph"});
  for (const auto& a : args) j.push_back(a);
  return j;
}

Json edges_json(const std::vector<Edge>& edges) {
  Json j = Json::array();
  for (const auto& [u, v] : edges) j.push_back(Json::array({u, v}));
  return j;
}

ProductKind parse_product_kind(const std::string& s) {
  for (ProductKind k : {ProductKind::join, ProductKind::vertex_sum, ProductKind::cartesian,
                        ProductKind::strong, ProductKind::corona}) {
    if (product_name(k) == s) return k;
  }
  throw ParameterError("unknown product kind \"" + s +
                       "\" (expected join, vsum, cartesian, strong or corona)");
}

BoundsOptions bounds_options(const Globals& g) {
  BoundsOptions o;
  o.field = parse_field(g.field);
  o.seed = g.seed;
  o.zero_tol = g.tol;
  o.os_cap = g.os_cap;
  o.cc_cap = g.cc_cap;
  return o;
}

int cmd_bounds(const Globals& g, const std::vector<std::string>& args, const std::string& graph,
               Emitter& em) {
  std::optional<GraphExpr> expr;
  const Graph gr = load_graph(graph, expr);
  const BoundsReport r = bounds_report(gr, bounds_options(g), expr ? &*expr : nullptr);
  if (g.format == "csv") {
    em.emit(bounds_csv(r));
    return kExitOk;
  }
  Json j;
  j["invocation"] = invocation(args);
  j["command"] = "bounds";
  j["input"] = graph;
  const Json body = bounds_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  em.emit(j);
  return kExitOk;
}

struct RealizeArgs {
  std::string graph;
  std::optional<int> rank;
  std::string frame_out;
  int restarts = 64;
  int max_iters = 2000;
  int workers = 1;
  bool progress = false;
};

int cmd_realize(const Globals& g, const std::vector<std::string>& args, const RealizeArgs& ra,
                Emitter& em, std::ostream& err) {
  std::optional<GraphExpr> expr;
  const Graph gr = load_graph(ra.graph, expr);
  RealizationConfig cfg;
  cfg.field = parse_field(g.field);
  cfg.seed = g.seed;
  cfg.zero_tol = g.tol;
  cfg.os_cap = g.os_cap;
  cfg.restarts = ra.restarts;
  cfg.max_iters = ra.max_iters;
  cfg.workers = ra.workers;
  if (ra.progress) cfg.progress = [&err](const std::string& line) { err << line << "\n"; };

  Json j;
  j["invocation"] = invocation(args);
  j["command"] = "realize";
  j["graph"] = expr ? expr->to_string() : ra.graph;
  j["order"] = gr.order();
  j["field"] = g.field;
  std::optional<Frame> frame;
  if (ra.rank) {
    j["mode"] = "fixed";
    j["rank"] = *ra.rank;
    frame = find_realization(gr, *ra.rank, cfg);
    const CertifiedLower lower = certified_lower_bound(gr, cfg);
    j["certified_lower"] = {{"value", lower.value}, {"cert", lower.cert}};
    j["found"] = frame.has_value();
  } else {
    j["mode"] = "search";
    const RankSearchResult res = min_rank_search(gr, cfg, expr ? &*expr : nullptr);
    j["certified_lower"] = {{"value", res.certified_lower}, {"cert", res.lower_cert}};
    j["best_realized"] = res.best_realized;
    j["method"] = res.method;
    j["exact"] = res.exact;
    if (res.dims) j["dims"] = {{"min", res.dims->first}, {"max", res.dims->second}};
    Json probes = Json::array();
    for (const auto& p : res.probes) probes.push_back({{"rank", p.rank}, {"success", p.success}});
    j["probes"] = probes;
    frame = res.frame;
  }
  bool verified = false;
  if (frame) {
    verified = verifies(*frame, gr);
    j["verified"] = verified;
    j["rank"] = frame->dim();
    if (!ra.frame_out.empty()) {
      std::ofstream f(ra.frame_out);
      if (!f) throw ParameterError("cannot write " + ra.frame_out);
      write_frame_csv(f, *frame);
      j["frame_file"] = ra.frame_out;
    } else {
      j["frame"] = frame_json(*frame);
    }
  }
  if (g.format == "csv") {
    std::ostringstream s;
    s << "graph,order,field,rank,found,verified\n"
      << j["graph"].get<std::string>() << ',' << gr.order() << ',' << g.field << ','
      << (frame ? std::to_string(frame->dim()) : "") << ',' << (frame ? "true" : "false") << ','
      << (verified ? "true" : "false") << '\n';
    em.emit(s.str());
  } else {
    em.emit(j);
  }
  return frame && verified ? kExitOk : kExitVerify;
}

int cmd_verify_frame(const Globals& g, const std::vector<std::string>& args,
                     const std::string& frame_path, const std::string& graph, Emitter& em) {
  std::ifstream in(frame_path);
  if (!in) throw ParameterError("cannot open frame file " + frame_path);
  const Frame f = read_frame_csv(in, g.tol);
  std::optional<GraphExpr> expr;
  const Graph gr = load_graph(graph, expr);

  const int rank = numerical_rank(f.vectors, f.zero_tol);
  const bool frame_ok = is_frame(f);
  bool zero_vector = false;
  std::optional<Graph> fg;
  try {
    fg = frame_graph(f);
  } catch (const DomainError&) {
    zero_vector = true;
  }
  const bool count_ok = f.count() == gr.order();
  std::vector<Edge> missing;
  std::vector<Edge> extra;
  if (fg && count_ok) {
    for (const auto& e : gr.edges())
      if (!fg->adjacent(e.first, e.second)) missing.push_back(e);
    for (const auto& e : fg->edges())
      if (!gr.adjacent(e.first, e.second)) extra.push_back(e);
  }
  const bool match = fg && count_ok && missing.empty() && extra.empty();

  Json j;
  j["invocation"] = invocation(args);
  j["command"] = "verify-frame";
  j["frame_file"] = frame_path;
  j["graph"] = expr ? expr->to_string() : graph;
  j["field"] = field_name(f.field);
  j["dim"] = f.dim();
  j["count"] = f.count();
  j["rank"] = rank;
  j["is_frame"] = frame_ok;
  j["frame_graph_matches"] = match;
  if (zero_vector) j["zero_vector"] = true;
  if (!count_ok) j["count_mismatch"] = {{"vectors", f.count()}, {"vertices", gr.order()}};
  if (fg) {
    j["frame_graph_edges"] = edges_json(fg->edges());
    j["missing_edges"] = edges_json(missing);
    j["extra_edges"] = edges_json(extra);
  }
  std::optional<std::pair<double, double>> constants;
  if (frame_ok) {
    constants = frame_constants(f);
    j["frame_constants"] = {{"A", constants->first}, {"B", constants->second}};
  }
  j["status"] = match && frame_ok ? "match" : "mismatch";
  if (g.format == "csv") {
    std::ostringstream s;
    s.precision(17);
    s << "frame_file,graph,dim,count,rank,is_frame,matches,A,B\n"
      << frame_path << ',' << j["graph"].get<std::string>() << ',' << f.dim() << ','
      << f.count() << ',' << rank << ',' << (frame_ok ? "true" : "false") << ','
      << (match ? "true" : "false") << ',';
    if (constants) s << constants->first << ',' << constants->second;
    else s << ',';
    s << '\n';
    em.emit(s.str());
  } else {
    em.emit(j);
  }
  return match && frame_ok ? kExitOk : kExitVerify;
}

int cmd_product(const std::vector<std::string>& operands, const std::string& attach,
                Emitter& em) {
  GraphExpr e;
  if (operands.size() == 1) {
    e = parse_graph_expr(operands[0]);
  } else if (operands.size() == 3) {
    const ProductKind kind = parse_product_kind(operands[0]);
    e = GraphExpr::make_product(kind, parse_graph_expr(operands[1]),
                                parse_graph_expr(operands[2]));
    if (!attach.empty()) {
      if (kind != ProductKind::vertex_sum) throw ParameterError("--attach applies to vsum only");
      int a = 0;
      int b = 0;
      char comma = 0;
      std::istringstream s(attach);
      if (!(s >> a >> comma >> b) || comma != ',' || !s.eof()) {
        throw ParameterError("--attach expects two vertex ids \"a,b\"");
      }
      e.attach = {a, b};
    } else if (kind == ProductKind::vertex_sum) {
      throw ParameterError("vsum needs --attach a,b");
    }
  } else {
    throw ParameterError("product expects one DSL expression or KIND LEFT RIGHT");
  }
  std::ostringstream s;
  write_edge_list(s, e.build());
  em.emit(s.str());
  return kExitOk;
}

Family parse_tree_family(const std::string& s) {
  if (s == "path") return Family::path;
  if (s == "star") return Family::star;
  throw ParameterError("tree family must be path or star, got \"" + s + "\"");
}

struct Table1Args {
  int n_min = 2, n_max = 4, m_min = 2, m_max = 4;
  std::vector<std::string> trees{"path", "star"};
  bool no_probe = false;
  int probe_restarts = 8;
  int jobs = 1;
};

int cmd_table1(const Globals& g, const std::vector<std::string>& args, const Table1Args& ta,
               Emitter& em) {
  Table1Options o;
  o.n_min = ta.n_min;
  o.n_max = ta.n_max;
  o.m_min = ta.m_min;
  o.m_max = ta.m_max;
  o.trees.clear();
  for (const auto& t : ta.trees) o.trees.push_back(parse_tree_family(t));
  o.field = parse_field(g.field);
  o.seed = g.seed;
  o.os_cap = g.os_cap;
  o.cc_cap = g.cc_cap;
  o.zero_tol = g.tol;
  o.probe = !ta.no_probe;
  o.probe_restarts = ta.probe_restarts;
  o.jobs = ta.jobs;
  const auto rows = run_table1(o);
  const auto passed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
  if (g.format == "csv") {
    em.emit(table1_csv(rows));
  } else {
    Json j;
    j["invocation"] = invocation(args);
    j["command"] = "table1";
    j["field"] = g.field;
    j["seed"] = g.seed;
    j["ranges"] = {{"n", {o.n_min, o.n_max}}, {"m", {o.m_min, o.m_max}}, {"trees", ta.trees}};
    Json list = Json::array();
    for (const auto& r : rows) list.push_back(row_json(r));
    j["rows"] = list;
    j["summary"] = {{"rows", rows.size()}, {"pass", passed},
                    {"fail", static_cast<long>(rows.size()) - passed}};
    em.emit(j);
  }
  return passed == static_cast<long>(rows.size()) ? kExitOk : kExitVerify;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frame graphs: bounds and realizations for minimum PSD rank", "framegraph"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "real or complex")
      ->check(CLI::IsMember({"real", "complex"}));
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--tol", g.tol, "zero tolerance for inner products")
      ->check(CLI::PositiveNumber);
  app.add_option("--os-cap", g.os_cap, "largest order for the exact OS search")
      ->check(CLI::Range(1, 26));
  app.add_option("--cc-cap", g.cc_cap, "largest order for the exact clique cover")
      ->check(CLI::Range(1, 64));
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out_path, "write the report here instead of stdout");

  std::string bounds_graph;
  auto* bounds = app.add_subcommand("bounds", "certified bounds on mr+");
  bounds->add_option("graph", bounds_graph, "DSL expression or edge-list file")->required();

  RealizeArgs ra;
  auto* realize = app.add_subcommand("realize", "search for a low-rank frame");
  realize->add_option("graph", ra.graph, "DSL expression or edge-list file")->required();
  realize->add_option("--rank", ra.rank, "fixed rank instead of a minimum search")
      ->check(CLI::PositiveNumber);
  realize->add_option("--frame-out", ra.frame_out, "write the frame as CSV");
  realize->add_option("--restarts", ra.restarts, "random restarts per rank")
      ->check(CLI::PositiveNumber);
  realize->add_option("--max-iters", ra.max_iters, "iterations per restart")
      ->check(CLI::PositiveNumber);
  realize->add_option("--workers", ra.workers, "restarts run concurrently")
      ->check(CLI::PositiveNumber);
  realize->add_flag("--progress", ra.progress, "progress lines on stderr");

  std::string vf_frame, vf_graph;
  auto* verify = app.add_subcommand("verify-frame", "check a frame file against a graph");
  verify->add_option("frame", vf_frame, "frame CSV file")->required();
  verify->add_option("graph", vf_graph, "DSL expression or edge-list file")->required();

  Table1Args ta;
  auto* table1 = app.add_subcommand("table1", "reproduce the closed-form product table");
  table1->add_option("--n-min", ta.n_min)->check(CLI::Range(2, 8));
  table1->add_option("--n-max", ta.n_max)->check(CLI::Range(2, 8));
  table1->add_option("--m-min", ta.m_min)->check(CLI::Range(2, 8));
  table1->add_option("--m-max", ta.m_max)->check(CLI::Range(2, 8));
  table1->add_option("--trees", ta.trees, "tree families (path, star)")->delimiter(',');
  table1->add_flag("--no-probe", ta.no_probe, "skip the rank n+m-2 search on K_n x K_m rows");
  table1->add_option("--probe-restarts", ta.probe_restarts)->check(CLI::PositiveNumber);
  table1->add_option("--jobs", ta.jobs, "rows evaluated concurrently")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> prod_args;
  std::string attach;
  auto* prod = app.add_subcommand("product", "emit the edge list of a graph expression");
  prod->add_option("operands", prod_args, "DSL expression, or KIND LEFT RIGHT")->required();
  prod->add_option("--attach", attach, "vsum attachment vertices a,b");

  for (auto* sub : {bounds, realize, verify, table1, prod}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Emitter em(g, out);
  try {
    if (*bounds) return cmd_bounds(g, args, bounds_graph, em);
    if (*realize) return cmd_realize(g, args, ra, em, err);
    if (*verify) return cmd_verify_frame(g, args, vf_frame, vf_graph, em);
    if (*table1) return cmd_table1(g, args, ta, em);
    if (*prod) return cmd_product(prod_args, attach, em);
  } catch (const ParseError& e) {
    err << "parse error at " << e.position() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InfeasibleRankError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitVerify;
  } catch (const RealizationError& e) {
    err << "realization error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace framegraph
