#pragma once

#include <optional>
#include <string>
#include <utility>

#include "framegraph/graph.hpp"

namespace framegraph {

enum class ProductKind { join, vertex_sum, cartesian, strong, corona };

std::string product_name(ProductKind kind);

struct ProductSpec {
  ProductKind kind = ProductKind::cartesian;
  /// Shared vertex in each operand; present iff kind == vertex_sum.
  std::optional<std::pair<int, int>> attach;
};

/// Vertex numbering:
///  join:       g's vertices first, then h's shifted by |g|.
///  vertex_sum: g keeps its ids; h's attach vertex becomes g's attach vertex,
///              the remaining h vertices follow in their original order.
///  cartesian, strong: (u, v) -> u * |h| + v.
///  corona:     root i of g keeps id i; vertex v of copy i is |g| + i*|h| + v.
Graph product(const ProductSpec& spec, const Graph& g, const Graph& h);

Graph join(const Graph& g, const Graph& h);
Graph vertex_sum(const Graph& g, int attach_g, const Graph& h, int attach_h);
Graph cartesian(const Graph& g, const Graph& h);
Graph strong(const Graph& g, const Graph& h);
Graph corona(const Graph& g, const Graph& h);

inline int pair_id(int u, int v, int h_order) { return u * h_order + v; }
inline int corona_copy_id(int root, int v, int g_order, int h_order) {
  return g_order + root * h_order + v;
}

}  // namespace framegraph
