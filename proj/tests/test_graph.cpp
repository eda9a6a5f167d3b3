#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "framegraph/dsl.hpp"
#include "framegraph/error.hpp"
#include "framegraph/graph.hpp"
#include "test_support.hpp"

using namespace framegraph;

TEST_CASE("graph constructor validates edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), ParameterError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParameterError);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), ParameterError);
  const Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.adjacent(1, 0));
  CHECK(g.degree(1) == 2);
}

TEST_CASE("named families") {
  const Graph k4 = make_named({Family::complete, {4}, {}});
  CHECK(k4.edge_count() == 6);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(k4.adjacent(i, j) == (i != j));

  CHECK(make_named({Family::h_regular, {4}, {}}) == make_h_regular(4));
  // H_4 is the complement of two disjoint edges, i.e. a 4-cycle up to relabeling.
  const Graph h4 = make_h_regular(4);
  CHECK(h4.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(h4.degree(v) == 2);
  CHECK(is_cycle(h4));
  CHECK(fgtest::canonical_mask(h4) == fgtest::canonical_mask(make_cycle(4)));

  const Graph k23 = make_named({Family::complete_bipartite, {2, 3}, {}});
  CHECK(k23.edge_count() == 6);
  CHECK(independence_number(k23) == 3);
  CHECK(k23.adjacent(0, 2));
  CHECK_FALSE(k23.adjacent(0, 1));

  const Graph s5 = make_star(5);
  CHECK(s5.degree(0) == 4);
  CHECK(min_degree(s5) == 1);
  CHECK(make_cycle(7).edge_count() == 7);
  CHECK(min_degree(make_cycle(7)) == 2);
  CHECK(min_degree(k4) == 3);
  CHECK(make_empty(3).edge_count() == 0);
  CHECK(make_complete_minus_edge(5).edge_count() == 9);
  CHECK_FALSE(make_complete_minus_edge(5).adjacent(0, 1));

  const Graph t = make_tree({{0, 1}, {1, 2}, {1, 3}});
  CHECK(is_tree(t));
  CHECK(t.order() == 4);
}

TEST_CASE("family parameter errors name the constraint") {
  CHECK_THROWS_AS(make_cycle(2), ParameterError);
  CHECK_THROWS_AS(make_path(0), ParameterError);
  CHECK_THROWS_AS(make_complete(0), ParameterError);
  CHECK_THROWS_AS(make_h_regular(5), ParameterError);
  CHECK_THROWS_AS(make_h_regular(2), ParameterError);
  CHECK_THROWS_AS(make_tree({{0, 1}, {1, 2}, {2, 0}}), ParameterError);
  CHECK_THROWS_AS(make_tree({{0, 1}, {2, 3}}), ParameterError);
  try {
    make_h_regular(7);
    FAIL("expected an error");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("even") != std::string::npos);
  }
}

TEST_CASE("complement") {
  CHECK(complement(make_complete(4)).edge_count() == 0);
  const Graph c5 = make_cycle(5);
  CHECK(complement(complement(c5)) == c5);
  CHECK(is_cycle(complement(c5)));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 9;
    const Graph g = fgtest::from_mask(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
    CHECK(complement(complement(g)) == g);
    CHECK(g.edge_count() + complement(g).edge_count() ==
          static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST_CASE("induced subgraph") {
  CHECK(induced_subgraph(make_cycle(5), {0, 1, 2}) == make_path(3));
  CHECK(induced_subgraph(make_complete(4), {3, 0, 2}) == make_complete(3));
  CHECK(induced_subgraph(make_complete_bipartite(2, 3), {2, 3, 4}).edge_count() == 0);
  const Graph g = make_cycle(6);
  CHECK(induced_subgraph(g, {0, 1, 2, 3, 4, 5}) == g);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 0}), ParameterError);
  CHECK_THROWS_AS(induced_subgraph(g, {6}), ParameterError);
}

TEST_CASE("connected components") {
  CHECK(connected_components(make_empty(3)) == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(connected_components(make_cycle(6)).size() == 1);
  const Graph two(6, {{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}});
  CHECK(connected_components(two) == std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
  CHECK_FALSE(is_connected(two));
}

TEST_CASE("chordality") {
  CHECK(is_chordal(make_path(6)));
  CHECK(is_chordal(make_star(5)));
  CHECK(is_chordal(make_complete(5)));
  CHECK_FALSE(is_chordal(make_cycle(4)));
  CHECK_FALSE(is_chordal(make_cycle(7)));
}

TEST_CASE("chordality agrees with the induced-cycle search through order 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : fgtest::graphs_up_to_iso(n)) {
      CHECK(is_chordal(g) == is_chordal_bruteforce(g));
    }
  }
}

TEST_CASE("chordality agrees with the induced-cycle search on random order-8 graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = fgtest::from_mask(8, rng() & ((std::uint64_t{1} << 28) - 1));
    CHECK(is_chordal(g) == is_chordal_bruteforce(g));
  }
}

TEST_CASE("independence number") {
  CHECK(independence_number(make_complete(6)) == 1);
  CHECK(independence_number(make_complete_bipartite(3, 4)) == 4);
  CHECK(independence_number(make_cycle(5)) == 2);
  CHECK(independence_number(complement(make_complete(7))) == 7);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 10;
    const Graph g = fgtest::from_mask(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
    const int expected = fgtest::brute_independence(g);
    CHECK(independence_number(g) == expected);
    const auto set = maximum_independent_set(g);
    CHECK(static_cast<int>(set.size()) == expected);
    for (std::size_t a = 0; a < set.size(); ++a)
      for (std::size_t b = a + 1; b < set.size(); ++b) CHECK_FALSE(g.adjacent(set[a], set[b]));
  }
  CHECK_THROWS_AS(independence_number(make_path(30)), CapacityError);
  CHECK(independence_number(make_path(30), 30) == 15);
}

TEST_CASE("edge-list round trip and errors") {
  const Graph g = make_cycle(5);
  std::stringstream s;
  write_edge_list(s, g);
  CHECK(read_edge_list(s) == g);

  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
  CHECK(line_of("3 2\n0 1\n") == 3);
  CHECK(line_of("3\n") == 1);
  CHECK(line_of("3 1\n0 3\n") == 2);
  CHECK(line_of("3 1\n1 1\n") == 2);
}

TEST_CASE("DSL parsing") {
  CHECK(parse_graph_expr("path:5").build() == make_path(5));
  CHECK(parse_graph_expr("cycle:6").build() == make_cycle(6));
  CHECK(parse_graph_expr("complete:4").build() == make_complete(4));
  CHECK(parse_graph_expr("kbip:3,4").build() == make_complete_bipartite(3, 4));
  CHECK(parse_graph_expr("star:5").build() == make_star(5));
  CHECK(parse_graph_expr("hreg:6").build() == make_h_regular(6));
  CHECK(parse_graph_expr("tree:[0-1,1-2,1-3]").build() == make_tree({{0, 1}, {1, 2}, {1, 3}}));
  CHECK(parse_graph_expr("kminus:4").build() == make_complete_minus_edge(4));
  for (const char* text : {"cartesian(path:3,complete:2)", "corona(cycle:3,complete:2)",
                           "join(path:2,path:3)", "vsum(path:3@2,path:3@0)",
                           "strong(path:3,path:3)", "corona(cartesian(path:2,path:2),kbip:2,3)",
                           "tree:[0-1,1-2,1-3]"}) {
    const GraphExpr e = parse_graph_expr(text);
    CHECK(e.to_string() == text);
    CHECK(parse_graph_expr(e.to_string()).build() == e.build());
  }
  CHECK(parse_graph_expr(" cartesian( path:3 , complete:2 ) ").to_string() ==
        "cartesian(path:3,complete:2)");
}

TEST_CASE("DSL errors carry a column") {
  auto column = [](const std::string& text) -> long {
    try {
      parse_graph_expr(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(column("cycle:") == 6);
  CHECK(column("bogus:3") == 0);
  CHECK(column("cartesian(path:3 complete:2)") == 17);
  CHECK(column("path:3)") == 6);
  CHECK(column("vsum(path:3,path:3)") >= 0);
  CHECK_THROWS_AS(parse_graph_expr("cycle:2").build(), ParameterError);
}
