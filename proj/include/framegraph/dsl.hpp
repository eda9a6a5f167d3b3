#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "framegraph/graph.hpp"
#include "framegraph/products.hpp"

namespace framegraph {

/// Construction tree of a graph written in the family/product DSL, e.g.
/// "corona(cycle:3,complete:2)" or "vsum(path:3@2,path:3@0)".
/// Bounds and realizations inspect this tree to recognize closed forms.
struct GraphExpr {
  enum class Kind { family, product };

  Kind kind = Kind::family;
  FamilySpec family;
  ProductKind product = ProductKind::cartesian;
  std::vector<GraphExpr> operands;  // exactly two for products
  std::array<int, 2> attach{0, 0};  // vsum only

  bool is_family() const { return kind == Kind::family; }
  bool is_family(Family f) const { return is_family() && family.family == f; }
  const GraphExpr& left() const { return operands.at(0); }
  const GraphExpr& right() const { return operands.at(1); }

  Graph build() const;
  /// Canonical DSL text; parse(to_string()) reproduces the tree.
  std::string to_string() const;

  static GraphExpr leaf(FamilySpec spec);
  static GraphExpr make_product(ProductKind kind, GraphExpr a, GraphExpr b);
};

/// Throws ParseError carrying the 0-based offending column.
GraphExpr parse_graph_expr(std::string_view text);

}  // namespace framegraph
