#include "framegraph/products.hpp"

#include <string>
#include <vector>

#include "framegraph/error.hpp"

namespace framegraph {

std::string product_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::join: return "join";
    case ProductKind::vertex_sum: return "vsum";
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
    case ProductKind::corona: return "corona";
  }
  return "?";
}

namespace {

void require_nonempty(const Graph& g, const Graph& h) {
  if (g.order() < 1 || h.order() < 1) {
    throw ParameterError("product operands must have at least one vertex");
  }
}

std::string pair_label(const Graph& g, int u, const Graph& h, int v) {
  return "(" + g.label(u) + "," + h.label(v) + ")";
}

}  // namespace

Graph join(const Graph& g, const Graph& h) {
  require_nonempty(g, h);
  const int n = g.order();
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(n + u, n + v);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < h.order(); ++v) e.emplace_back(u, n + v);
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u) labels.push_back("g" + g.label(u));
  for (int v = 0; v < h.order(); ++v) labels.push_back("h" + h.label(v));
  return Graph(n + h.order(), e, std::move(labels));
}

Graph vertex_sum(const Graph& g, int attach_g, const Graph& h, int attach_h) {
  require_nonempty(g, h);
  if (attach_g < 0 || attach_g >= g.order() || attach_h < 0 ||
      attach_h >= h.order()) {
    throw ParameterError("vsum: attach vertex out of range");
  }
  const int n = g.order();
  std::vector<int> map(h.order());
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u) labels.push_back("g" + g.label(u));
  labels[attach_g] += "=h" + h.label(attach_h);
  int next = n;
  for (int v = 0; v < h.order(); ++v) {
    if (v == attach_h) {
      map[v] = attach_g;
    } else {
      map[v] = next++;
      labels.push_back("h" + h.label(v));
    }
  }
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(map[u], map[v]);
  return Graph(next, e, std::move(labels));
}

Graph cartesian(const Graph& g, const Graph& h) {
  require_nonempty(g, h);
  const int m = h.order();
  std::vector<Edge> e;
  for (int u = 0; u < g.order(); ++u)
    for (auto [a, b] : h.edges()) e.emplace_back(pair_id(u, a, m), pair_id(u, b, m));
  for (auto [a, b] : g.edges())
    for (int v = 0; v < m; ++v) e.emplace_back(pair_id(a, v, m), pair_id(b, v, m));
  std::vector<std::string> labels;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < m; ++v) labels.push_back(pair_label(g, u, h, v));
  return Graph(g.order() * m, e, std::move(labels));
}

Graph strong(const Graph& g, const Graph& h) {
  require_nonempty(g, h);
  const int m = h.order();
  std::vector<Edge> e;
  for (int u = 0; u < g.order(); ++u)
    for (auto [a, b] : h.edges()) e.emplace_back(pair_id(u, a, m), pair_id(u, b, m));
  for (auto [a, b] : g.edges()) {
    for (int v = 0; v < m; ++v) e.emplace_back(pair_id(a, v, m), pair_id(b, v, m));
    for (auto [c, d] : h.edges()) {
      e.emplace_back(pair_id(a, c, m), pair_id(b, d, m));
      e.emplace_back(pair_id(a, d, m), pair_id(b, c, m));
    }
  }
  std::vector<std::string> labels;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < m; ++v) labels.push_back(pair_label(g, u, h, v));
  return Graph(g.order() * m, e, std::move(labels));
}

Graph corona(const Graph& g, const Graph& h) {
  require_nonempty(g, h);
  const int n = g.order();
  const int m = h.order();
  std::vector<Edge> e = g.edges();
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(g.label(i));
  for (int i = 0; i < n; ++i) {
    for (auto [a, b] : h.edges())
      e.emplace_back(corona_copy_id(i, a, n, m), corona_copy_id(i, b, n, m));
    for (int v = 0; v < m; ++v) {
      e.emplace_back(i, corona_copy_id(i, v, n, m));
      labels.push_back(g.label(i) + ":" + h.label(v));
    }
  }
  return Graph(n + n * m, e, std::move(labels));
}

Graph product(const ProductSpec& spec, const Graph& g, const Graph& h) {
  if (spec.attach.has_value() != (spec.kind == ProductKind::vertex_sum)) {
    throw ParameterError("attach vertices are required for vsum and only vsum");
  }
  switch (spec.kind) {
    case ProductKind::join: return join(g, h);
    case ProductKind::vertex_sum:
      return vertex_sum(g, spec.attach->first, h, spec.attach->second);
    case ProductKind::cartesian: return cartesian(g, h);
    case ProductKind::strong: return strong(g, h);
    case ProductKind::corona: return corona(g, h);
  }
  throw ParameterError("unknown product kind");
}

}  // namespace framegraph
