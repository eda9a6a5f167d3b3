#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "framegraph/bounds.hpp"
#include "framegraph/error.hpp"

namespace framegraph {

namespace {

// What the formula registry knows about one operand or a whole graph.
struct Shape {
  int order = 0;
  bool tree = false;
  bool path = false;
  bool cycle = false;
  bool complete = false;
  bool kminus = false;
  bool hreg = false;
  std::optional<std::pair<int, int>> kbip;  // part sizes, larger first
  char letter = 'G';                        // T, C, K, H or G

  std::optional<int> mr() const {
    if (complete) return 1;
    if (tree && order >= 2) return order - 1;
    if (cycle) return order - 2;
    if (kbip) return kbip->first;
    if (kminus || hreg) return 2;
    return std::nullopt;
  }
  // Graphs whose OS-number equals mr+.
  bool os_tight() const { return complete || (tree && order >= 2) || cycle || hreg; }
};

std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
  if (!is_connected(g) || g.order() < 2) return std::nullopt;
  std::vector<int> side(g.order(), -1);
  side[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  const int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
  const int b = g.order() - a;
  if (g.edge_count() != static_cast<std::size_t>(a) * b) return std::nullopt;
  return std::pair{std::max(a, b), std::min(a, b)};
}

bool complement_is_perfect_matching(const Graph& g) {
  const int n = g.order();
  if (n < 4 || n % 2) return false;
  const Graph c = complement(g);
  for (int v = 0; v < n; ++v)
    if (c.degree(v) != 1) return false;
  return true;
}

Shape classify(const Graph& g, const GraphExpr* expr) {
  Shape s;
  s.order = g.order();
  s.tree = is_tree(g);
  s.complete = is_complete(g);
  s.cycle = is_cycle(g);
  if (s.tree) {
    s.path = true;
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) > 2) s.path = false;
  }
  s.kbip = complete_bipartite_parts(g);
  s.kminus = g.order() >= 3 && complement(g).edge_count() == 1;
  s.hreg = complement_is_perfect_matching(g);
  if (expr && expr->is_family()) {
    switch (expr->family.family) {
      case Family::path:
      case Family::star:
      case Family::tree_from_edges: s.letter = 'T'; break;
      case Family::cycle: s.letter = 'C'; break;
      case Family::complete: s.letter = 'K'; break;
      case Family::h_regular: s.letter = 'H'; break;
      default: break;
    }
  } else if (s.tree && s.order >= 2 && !s.complete) {
    s.letter = 'T';
  } else if (s.complete) {
    s.letter = 'K';
  } else if (s.cycle) {
    s.letter = 'C';
  } else if (s.hreg) {
    s.letter = 'H';
  }
  return s;
}

std::string corona_name(char a, char b) {
  auto sym = [](char c, bool second) -> std::string {
    switch (c) {
      case 'T': return second ? "T'" : "T";
      case 'K': return second ? "K_m" : "K_n";
      case 'C': return second ? "C_m" : "C_n";
      case 'H': return second ? "H_m" : "H_n";
      default: return second ? "H" : "G";
    }
  };
  // Keep the letter conventions of the published table.
  if (a == 'T' && b == 'K') return "T ∘ K_n";
  if (a == 'K' && b == 'T') return "K_n ∘ T";
  if (a == 'C' && b == 'T') return "C_n ∘ T";
  if (a == 'T' && b == 'C') return "T ∘ C_n";
  if (a == 'K' && b == 'C') return "K_m ∘ C_n";
  return sym(a, false) + " ∘ " + sym(b, true);
}

FormulaNote exact(std::string name, int value, std::string citation) {
  FormulaNote note;
  note.name = std::move(name);
  note.value = value;
  note.citation = std::move(citation);
  return note;
}

}  // namespace

std::vector<FormulaNote> match_formulas(const Graph& g, const GraphExpr* expr, Field field) {
  std::vector<FormulaNote> notes;
  const Shape whole = classify(g, nullptr);
  const int n = g.order();
  if (whole.tree && n >= 2) {
    notes.push_back(exact("tree", n - 1, "mr+ = n-1 exactly for trees"));
  }
  if (whole.cycle) notes.push_back(exact("C_n", n - 2, "mr+(C_n) = n-2"));
  if (whole.complete) notes.push_back(exact("K_n", 1, "mr+(K_n) = 1"));
  if (whole.kbip && !whole.tree && !whole.cycle) {
    notes.push_back(exact("K_{m,n}", whole.kbip->first,
                          "independence bound met by the explicit dimension-m frame"));
  }
  if (whole.kminus && !whole.complete) {
    notes.push_back(exact("K_n minus an edge", 2, "explicit frame in dimension 2"));
  }
  if (whole.hreg && !whole.cycle) {
    notes.push_back(exact("H_n", 2, "mr+ of the (n-2)-regular graph on n vertices"));
  }
  if (!expr || expr->is_family()) return notes;

  const Graph ga = expr->left().build();
  const Graph hb = expr->right().build();
  const Shape a = classify(ga, &expr->left());
  const Shape b = classify(hb, &expr->right());
  const int p = a.order;
  const int q = b.order;
  switch (expr->product) {
    case ProductKind::strong:
      if (a.path && b.path && p >= 2 && q >= 2) {
        notes.push_back(exact("P_n ⊠ P_m", (p - 1) * (q - 1),
                              "clique cover by K_4 blocks meets a grid OS-vertex set"));
      }
      break;
    case ProductKind::cartesian: {
      auto tree_by_complete = [&](const Shape& t, const Shape& k) {
        if (t.tree && t.order >= 2 && k.complete) {
          notes.push_back(exact("T □ K_n", t.order * k.order - k.order,
                                "copied tree witnesses meet n - kappa"));
        }
      };
      tree_by_complete(a, b);
      if (!(a.tree && b.tree)) tree_by_complete(b, a);
      auto triangle_by_path = [&](const GraphExpr& c, const Shape& t) {
        if (c.is_family(Family::cycle) && c.family.params == std::vector<int>{3} && t.path &&
            t.order >= 2) {
          notes.push_back(exact("C_3 □ P_n", 3 * t.order - 3, "T □ K_n with T a path, n = 3"));
        }
      };
      triangle_by_path(expr->left(), b);
      triangle_by_path(expr->right(), a);
      if (a.complete && b.complete && p >= 2 && q >= 2) {
        FormulaNote note;
        note.name = "K_n □ K_m";
        note.max = p + q - 1;
        if (field == Field::real) {
          note.min = p + q - 2;
          note.literature_lower = true;
          note.citation =
              "upper end from the Kronecker sum of rank-1 blocks; lower end is the "
              "literature value of the symmetric minimum rank";
        } else {
          note.citation = "upper end from the Kronecker sum of rank-1 blocks";
        }
        notes.push_back(note);
      }
      break;
    }
    case ProductKind::corona:
      if (a.os_tight() && b.os_tight() && p >= 2 && q >= 2 && is_connected(ga) &&
          is_connected(hb)) {
        notes.push_back(exact(corona_name(a.letter, b.letter), p * *b.mr() + *a.mr(),
                              "corona rank n*mr+(H) + mr+(G) for operands with OS = mr+"));
      }
      break;
    case ProductKind::join:
      if (field == Field::complex && a.mr() && b.mr() && p >= 2 && q >= 2 &&
          is_connected(ga) && is_connected(hb)) {
        FormulaNote note = exact("G ∨ H", std::max(*a.mr(), *b.mr()),
                                 "join keeps the larger complex mr+ of its operands");
        notes.push_back(note);
      }
      break;
    case ProductKind::vertex_sum:
      if (field == Field::complex && a.mr() && b.mr() && p >= 2 && q >= 2 &&
          is_connected(ga) && is_connected(hb)) {
        notes.push_back(exact("G . H", *a.mr() + *b.mr(),
                              "complex mr+ is additive over a cut vertex"));
      }
      break;
  }
  return notes;
}

// Non-root vertices deepest first, each paired with its parent.
static OSWitness tree_os_witness(const Graph& t) {
  const int n = t.order();
  std::vector<int> parent(n, -1), order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : t.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
  OSWitness w;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it == 0) continue;
    w.ordered.push_back(*it);
    w.companions.push_back(parent[*it]);
  }
  return w;
}

OSCertificate best_os_witness(const Graph& g, const GraphExpr* expr, int os_cap) {
  if (g.order() < 2 || !is_connected(g)) {
    throw DomainError("OS-number requires a connected graph on at least two vertices");
  }
  if (g.order() <= os_cap) return {os_number(g, os_cap).witness, true};
  if (is_tree(g)) return {tree_os_witness(g), false};
  if (expr && !expr->is_family()) {
    const Graph ga = expr->left().build();
    const Graph hb = expr->right().build();
    auto operand = [&](const Graph& x, const GraphExpr& e) -> std::optional<OSWitness> {
      if (x.order() == 1) return OSWitness{};
      if (!is_connected(x)) return std::nullopt;
      return best_os_witness(x, &e, os_cap).witness;
    };
    switch (expr->product) {
      case ProductKind::strong: {
        const Shape a = classify(ga, nullptr);
        const Shape b = classify(hb, nullptr);
        if (a.path && b.path && ga.order() >= 2 && hb.order() >= 2) {
          return {os_witness_for_product(ProductKind::strong, ga, hb, {}, {}), false};
        }
        break;
      }
      case ProductKind::cartesian:
      case ProductKind::corona: {
        auto wa = operand(ga, expr->left());
        auto wb = operand(hb, expr->right());
        if (wa && wb) return {os_witness_for_product(expr->product, ga, hb, *wa, *wb), false};
        break;
      }
      default: break;
    }
  }
  throw CapacityError("exact OS-number search", g.order(), os_cap, "--os-cap");
}

namespace {

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t k) {
  return seed * 6364136223846793005ULL + 1442695040888963407ULL * (k + 1);
}

CliqueCover upper_cover(const Graph& g, const GraphExpr* expr, int cc_cap, bool& exact) {
  exact = false;
  if (g.order() <= cc_cap) {
    exact = true;
    return clique_cover_number(g, cc_cap);
  }
  if (expr && !expr->is_family() && expr->product == ProductKind::strong) {
    const Graph ga = expr->left().build();
    const Graph hb = expr->right().build();
    if (classify(ga, nullptr).path && classify(hb, nullptr).path && ga.order() >= 2 &&
        hb.order() >= 2) {
      return strong_path_clique_cover(ga, hb);
    }
  }
  return greedy_clique_cover(g);
}

std::optional<Frame> structured(const Graph& g, const GraphExpr& e, const BoundsOptions& opts);

std::optional<Frame> operand_frame(const Graph& g, const GraphExpr& e,
                                   const BoundsOptions& opts) {
  if (g.order() == 1) return construct_frame(NamedFrame::complete, {1, 0, {}});
  auto best = constructive_realization(g, &e, opts);
  if (!best) return std::nullopt;
  return best->frame;
}

std::optional<Frame> structured(const Graph& g, const GraphExpr& e, const BoundsOptions& opts) {
  if (e.is_family()) {
    const auto& p = e.family.params;
    switch (e.family.family) {
      case Family::complete: return construct_frame(NamedFrame::complete, {p[0], 0, {}});
      case Family::complete_minus_edge:
        return construct_frame(NamedFrame::complete_minus_edge, {p[0], 0, {}});
      case Family::path:
      case Family::star:
      case Family::tree_from_edges:
        if (g.order() >= 2) return tree_frame(g);
        return construct_frame(NamedFrame::complete, {1, 0, {}});
      case Family::cycle:
        if (p[0] == 3) return construct_frame(NamedFrame::complete, {3, 0, {}});
        return orthogonal_representation(g, p[0] - 2, opts.seed);
      case Family::complete_bipartite: {
        const int first = p[0];
        const int second = p[1];
        const int big = std::max(first, second);
        const int small = std::min(first, second);
        if (big == 2) return std::nullopt;
        Frame f = construct_frame(NamedFrame::complete_bipartite, {small, big, {}});
        if (first >= second) return f;
        // Construction lists the larger part first; the graph lists `first`.
        Frame out = f;
        for (int i = 0; i < first; ++i) out.vectors.col(i) = f.vectors.col(big + i);
        for (int j = 0; j < second; ++j) out.vectors.col(first + j) = f.vectors.col(j);
        return out;
      }
      default: return std::nullopt;
    }
  }
  const Graph ga = e.left().build();
  const Graph hb = e.right().build();
  switch (e.product) {
    case ProductKind::strong: {
      if (!classify(ga, nullptr).path || !classify(hb, nullptr).path || ga.order() < 2 ||
          hb.order() < 2) {
        return std::nullopt;
      }
      return clique_cover_realization(g, strong_path_clique_cover(ga, hb).cliques, opts.seed);
    }
    case ProductKind::cartesian: {
      auto fa = operand_frame(ga, e.left(), opts);
      auto fb = operand_frame(hb, e.right(), opts);
      if (!fa || !fb) return std::nullopt;
      return kronecker_sum_realization(ga, gram(*fa), hb, gram(*fb)).frame;
    }
    case ProductKind::corona: {
      auto fa = operand_frame(ga, e.left(), opts);
      auto fb = operand_frame(hb, e.right(), opts);
      if (!fa || !fb) return std::nullopt;
      return corona_realization(ga, *fa, hb, *fb, child_seed(opts.seed, 7));
    }
    case ProductKind::vertex_sum: {
      auto fa = operand_frame(ga, e.left(), opts);
      auto fb = operand_frame(hb, e.right(), opts);
      if (!fa || !fb) return std::nullopt;
      std::vector<CoverPart> parts(2);
      for (int u = 0; u < ga.order(); ++u) parts[0].vertices.push_back(u);
      parts[0].frame = *fa;
      int next = ga.order();
      for (int v = 0; v < hb.order(); ++v)
        parts[1].vertices.push_back(v == e.attach[1] ? e.attach[0] : next++);
      parts[1].frame = *fb;
      return cover_sum_realization(g, parts, child_seed(opts.seed, 11));
    }
    case ProductKind::join: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RealizationCandidate> constructive_realization(const Graph& g,
                                                             const GraphExpr* expr,
                                                             const BoundsOptions& opts) {
  std::vector<RealizationCandidate> found;
  auto attempt = [&](const std::string& method, auto&& make) {
    try {
      std::optional<Frame> f = make();
      if (f && verifies(*f, g)) found.push_back({*f, method});
    } catch (const RealizationError&) {
    } catch (const CapacityError&) {
    }
  };
  if (expr) attempt("structured", [&] { return structured(g, *expr, opts); });
  if (is_tree(g) && g.order() >= 2) {
    attempt("tree_incidence", [&]() -> std::optional<Frame> { return tree_frame(g); });
  }
  if (is_connected(g) && g.order() >= 2) {
    const int dim = g.order() - vertex_connectivity(g);
    attempt("orthogonal_representation", [&]() -> std::optional<Frame> {
      return orthogonal_representation(g, dim, child_seed(opts.seed, 3));
    });
  }
  attempt("clique_cover", [&]() -> std::optional<Frame> {
    bool exact = false;
    const auto cover = upper_cover(g, expr, opts.cc_cap, exact);
    return clique_cover_realization(g, cover.cliques, child_seed(opts.seed, 5));
  });
  if (found.empty()) return std::nullopt;
  auto best = std::min_element(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.frame.dim() < y.frame.dim();
  });
  RealizationCandidate out = *best;
  out.frame.field = opts.field;
  out.frame.zero_tol = opts.zero_tol;
  if (!verifies(out.frame, g)) return std::nullopt;
  return out;
}

BoundsReport bounds_report(const Graph& g, const BoundsOptions& opts, const GraphExpr* expr) {
  if (g.order() < 2 || !is_connected(g)) {
    throw DomainError("bounds are defined for connected graphs on at least two vertices");
  }
  BoundsReport r;
  r.graph = expr ? expr->to_string()
                 : "edge-list(n=" + std::to_string(g.order()) +
                       ",m=" + std::to_string(g.edge_count()) + ")";
  r.order = g.order();
  r.field = opts.field;
  r.formula_notes = match_formulas(g, expr, opts.field);

  // Lower bound: ties resolve to the first listed certificate.
  const OSCertificate os = best_os_witness(g, expr, opts.os_cap);
  r.os_witness = os.witness;
  r.os_exact = os.exact;
  r.lower = {os.witness.size(), "os_witness"};
  if (min_degree(g) >= 1 && g.order() <= opts.alpha_cap) {
    r.independence = independence_number(g, opts.alpha_cap);
    if (*r.independence > r.lower.value) r.lower = {*r.independence, "independence"};
  }
  for (const auto& note : r.formula_notes) {
    if (note.literature_lower && note.min && *note.min > r.lower.value) {
      r.lower = {*note.min, "formula"};
      r.lower_literature_sourced = true;
    }
  }

  // Upper bound.
  bool cover_exact = false;
  r.clique_cover = upper_cover(g, expr, opts.cc_cap, cover_exact);
  r.clique_cover_exact = cover_exact;
  r.upper = {r.clique_cover->value, "clique_cover"};
  if (opts.field == Field::real) {
    r.connectivity = vertex_connectivity(g);
    if (g.order() - *r.connectivity < r.upper.value) {
      r.upper = {g.order() - *r.connectivity, "connectivity"};
    }
  }
  if (g.order() - 1 < r.upper.value) r.upper = {g.order() - 1, "tree_bound"};
  if (opts.realize) {
    if (auto real = constructive_realization(g, expr, opts)) {
      r.realization = real->frame;
      r.realization_method = real->method;
      if (real->frame.dim() < r.upper.value) r.upper = {real->frame.dim(), "realization"};
    }
  }

  if (r.lower.value > r.upper.value) {
    throw InternalError("bounds_report: lower bound " + std::to_string(r.lower.value) +
                        " exceeds upper bound " + std::to_string(r.upper.value));
  }
  if (!verify_os_set(g, *r.os_witness) || !verify_clique_cover(g, r.clique_cover->cliques)) {
    throw InternalError("bounds_report: certificate failed re-verification");
  }
  if (r.lower.value == r.upper.value && !r.lower_literature_sourced) {
    r.dims = std::pair{r.lower.value, g.order()};
  }
  return r;
}

}  // namespace framegraph
