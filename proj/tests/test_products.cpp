#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "framegraph/bounds.hpp"
#include "framegraph/dsl.hpp"
#include "framegraph/error.hpp"
#include "framegraph/products.hpp"
#include "test_support.hpp"

using namespace framegraph;

namespace {

std::vector<Graph> small_operands() {
  return {make_path(2), make_path(3), make_complete(3), make_complete(4), make_cycle(4),
          make_star(4), make_complete_bipartite(1, 3), Graph(1)};
}

}  // namespace

TEST_CASE("documented examples") {
  CHECK(strong(make_path(2), make_path(2)) == make_complete(4));

  const Graph prism = cartesian(make_complete(3), make_path(2));
  CHECK(prism.order() == 6);
  for (int v = 0; v < 6; ++v) CHECK(prism.degree(v) == 3);

  const Graph c = corona(make_complete(2), make_complete(2));
  CHECK(c.order() == 6);
  CHECK(c.edge_count() == 7);  // two triangles and the root edge
  CHECK(c.adjacent(0, 1));
  CHECK(c.adjacent(0, 2));
  CHECK(c.adjacent(0, 3));
  CHECK(c.adjacent(2, 3));
  CHECK(c.adjacent(1, 4));
  CHECK_FALSE(c.adjacent(0, 4));

  CHECK(join(make_empty(2), make_empty(3)) == make_complete_bipartite(2, 3));
}

TEST_CASE("orders of every composition") {
  for (const Graph& g : small_operands()) {
    for (const Graph& h : small_operands()) {
      CHECK(join(g, h).order() == g.order() + h.order());
      CHECK(vertex_sum(g, 0, h, h.order() - 1).order() == g.order() + h.order() - 1);
      CHECK(cartesian(g, h).order() == g.order() * h.order());
      CHECK(strong(g, h).order() == g.order() * h.order());
      CHECK(corona(g, h).order() == g.order() * h.order() + g.order());
    }
  }
}

TEST_CASE("cartesian numbering and degrees") {
  for (const Graph& g : small_operands()) {
    for (const Graph& h : small_operands()) {
      const Graph c = cartesian(g, h);
      const Graph s = strong(g, h);
      for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) {
          const int id = pair_id(u, v, h.order());
          CHECK(c.degree(id) == g.degree(u) + h.degree(v));
          for (int u2 = 0; u2 < g.order(); ++u2)
            for (int v2 = 0; v2 < h.order(); ++v2) {
              const int id2 = pair_id(u2, v2, h.order());
              if (id == id2) continue;
              const bool cart = (u == u2 && h.adjacent(v, v2)) || (v == v2 && g.adjacent(u, u2));
              const bool strg = cart || (g.adjacent(u, u2) && h.adjacent(v, v2));
              CHECK(c.adjacent(id, id2) == cart);
              CHECK(s.adjacent(id, id2) == strg);
              if (c.adjacent(id, id2)) CHECK(s.adjacent(id, id2));
            }
        }
    }
  }
}

TEST_CASE("corona contains the root graph and joined copies") {
  for (const Graph& g : small_operands()) {
    for (const Graph& h : small_operands()) {
      const Graph c = corona(g, h);
      std::vector<int> roots;
      for (int i = 0; i < g.order(); ++i) roots.push_back(i);
      CHECK(induced_subgraph(c, roots) == g);
      for (int i = 0; i < g.order(); ++i) {
        std::vector<int> copy;
        for (int v = 0; v < h.order(); ++v) copy.push_back(corona_copy_id(i, v, g.order(), h.order()));
        CHECK(induced_subgraph(c, copy) == h);
        for (int x : copy) {
          for (int r = 0; r < g.order(); ++r) CHECK(c.adjacent(x, r) == (r == i));
          for (int j = 0; j < g.order(); ++j) {
            if (j == i) continue;
            for (int w = 0; w < h.order(); ++w)
              CHECK_FALSE(c.adjacent(x, corona_copy_id(j, w, g.order(), h.order())));
          }
        }
      }
    }
  }
}

TEST_CASE("join and vertex sum") {
  const Graph g = make_path(3);
  const Graph h = make_cycle(4);
  const Graph j = join(g, h);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 4; ++v) CHECK(j.adjacent(u, 3 + v));
  CHECK(j.edge_count() == g.edge_count() + h.edge_count() + 12);

  const Graph s = vertex_sum(g, 2, h, 0);
  CHECK(s.order() == 6);
  CHECK(s.edge_count() == g.edge_count() + h.edge_count());
  // h's vertices 1, 2, 3 follow g's: ids 3, 4, 5; h's vertex 0 is g's vertex 2.
  CHECK(s.adjacent(2, 3));
  CHECK(s.adjacent(3, 4));
  CHECK(s.adjacent(4, 5));
  CHECK(s.adjacent(5, 2));
  CHECK_FALSE(s.adjacent(0, 3));
  CHECK(parse_graph_expr("vsum(path:3@2,cycle:4@0)").build() == s);
  CHECK_THROWS_AS(vertex_sum(g, 3, h, 0), ParameterError);
  CHECK_THROWS_AS(vertex_sum(g, 0, h, -1), ParameterError);
  CHECK_THROWS_AS(product(ProductSpec{ProductKind::vertex_sum, std::nullopt}, g, h),
                  ParameterError);
  CHECK_THROWS_AS(product(ProductSpec{ProductKind::cartesian, std::pair{0, 0}}, g, h),
                  ParameterError);
}

TEST_CASE("labels record provenance") {
  const Graph g = cartesian(make_path(2), make_path(2));
  CHECK(g.labels().size() == 4);
  CHECK(g.label(pair_id(1, 0, 2)) != g.label(pair_id(0, 1, 2)));
}

TEST_CASE("strong path grids have a K4 block cover") {
  for (int n = 2; n <= 5; ++n)
    for (int m = 2; m <= 5; ++m) {
      const Graph p = make_path(n);
      const Graph q = make_path(m);
      const Graph s = strong(p, q);
      const CliqueCover cover = strong_path_clique_cover(p, q);
      CHECK(cover.value == (n - 1) * (m - 1));
      CHECK(static_cast<int>(cover.cliques.size()) == cover.value);
      for (const auto& c : cover.cliques) {
        CHECK(c.size() == 4);
        for (std::size_t a = 0; a < c.size(); ++a)
          for (std::size_t b = a + 1; b < c.size(); ++b) CHECK(s.adjacent(c[a], c[b]));
      }
      CHECK(verify_clique_cover(s, cover.cliques));
    }
}
