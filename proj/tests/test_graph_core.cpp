#include <doctest.h>

#include <sstream>

#include "hamex/config.hpp"
#include "hamex/graph.hpp"

using namespace hamex;

TEST_CASE("vertex set basics") {
  VertexSet s(100);
  CHECK(s.empty());
  s.insert(3);
  s.insert(97);
  s.insert(3);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK(s.contains(97));
  CHECK(!s.contains(4));
  s.erase(3);
  s.erase(3);
  CHECK(s.size() == 1);
  CHECK(s.members() == std::vector<Vertex>{97});

  VertexSet t = VertexSet::of(100, {97, 98});
  CHECK(s.is_subset_of(t));
  CHECK(s.intersects(t));
  CHECK(!t.is_subset_of(s));
  CHECK(VertexSet::full(5).size() == 5);

  s.clear();
  CHECK(s.empty());
  CHECK(!s.intersects(t));
}

TEST_CASE("graph construction and adjacency") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 5);
  CHECK(g.degree(0) == 3);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(1, 3));
  CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2, 3});  // sorted
  CHECK(!g.is_regular());
  CHECK(g.max_degree() == 3);
  CHECK(g.min_degree() == 2);

  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 5}}), InvalidInput);
}

TEST_CASE("outer neighborhood") {
  Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(outer_neighborhood(p5, VertexSet::of(5, {2, 3})).members() ==
        std::vector<Vertex>{1, 4});
  CHECK(outer_neighborhood(p5, VertexSet::full(5)).empty());
  CHECK(outer_neighborhood(p5, VertexSet(5)).empty());
  // N(X) never meets X.
  auto n = outer_neighborhood(p5, VertexSet::of(5, {0, 1}));
  CHECK(n.members() == std::vector<Vertex>{2});
}

TEST_CASE("edges between sets") {
  Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(has_edge_between(p5, VertexSet::of(5, {0, 1}), VertexSet::of(5, {2})));
  CHECK(!has_edge_between(p5, VertexSet::of(5, {0}), VertexSet::of(5, {3, 4})));
  CHECK_THROWS_AS(
      has_edge_between(p5, VertexSet::of(5, {0, 1}), VertexSet::of(5, {1})),
      InvalidInput);
  auto e = find_edge_between(p5, VertexSet::of(5, {1}), VertexSet::of(5, {2}));
  CHECK(e.first == 1);
  CHECK(e.second == 2);
  auto none =
      find_edge_between(p5, VertexSet::of(5, {0}), VertexSet::of(5, {4}));
  CHECK(none.first == kNoVertex);
}

TEST_CASE("induced subgraph relabels densely") {
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  auto sub = induced_subgraph(g, VertexSet::of(6, {1, 2, 4, 5}));
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.to_host == std::vector<Vertex>{1, 2, 4, 5});
  CHECK(sub.to_local[3] == kNoVertex);
  CHECK(sub.graph.has_edge(0, 1));   // 1-2
  CHECK(sub.graph.has_edge(2, 3));   // 4-5
  CHECK(!sub.graph.has_edge(1, 2));  // 2-4 not an edge
}

TEST_CASE("edge list load and save") {
  std::istringstream in("3 2\n0 1\n1 2\n");
  Graph g = load_graph(in, GraphFormat::EdgeList);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));

  std::ostringstream out;
  save_graph(out, g, GraphFormat::EdgeList);
  std::istringstream back(out.str());
  Graph g2 = load_graph(back, GraphFormat::EdgeList);
  CHECK(g2.edges() == g.edges());

  std::istringstream single("1 0\n");
  Graph g3 = load_graph(single, GraphFormat::EdgeList);
  CHECK(g3.vertex_count() == 1);
  CHECK(g3.edge_count() == 0);

  std::istringstream comments("# header\n3 1\n# edge\n0 2\n");
  CHECK(load_graph(comments, GraphFormat::EdgeList).has_edge(0, 2));

  std::istringstream bad("3 2\n0 1\nbogus\n");
  CHECK_THROWS_AS(load_graph(bad, GraphFormat::EdgeList), InvalidInput);
}

TEST_CASE("sparse json ids are relabelled in order") {
  std::istringstream in(R"({"n":3,"edges":[[10,20],[20,30]]})");
  Graph g = load_graph(in, GraphFormat::Json);
  CHECK(g.vertex_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("json load and save") {
  std::istringstream in(R"({"n":4,"edges":[[0,1],[2,3]]})");
  Graph g = load_graph(in, GraphFormat::Json);
  CHECK(g.vertex_count() == 4);
  CHECK(g.has_edge(2, 3));
  std::ostringstream out;
  save_graph(out, g, GraphFormat::Json);
  std::istringstream back(out.str());
  CHECK(load_graph(back, GraphFormat::Json).edges() == g.edges());
}

TEST_CASE("config file parsing") {
  std::istringstream in("C=6.5\ndepth_cap=7\nseed=42\n# comment\n\n");
  SolverConfig cfg = load_config(in);
  CHECK(cfg.C == doctest::Approx(6.5));
  CHECK(cfg.depth_cap == 7);
  CHECK(cfg.seed == 42);
  CHECK(cfg.theta == doctest::Approx(0.8));  // untouched default

  std::istringstream bad("no_such_knob=1\n");
  CHECK_THROWS_AS(load_config(bad), InvalidInput);
}

TEST_CASE("config derived quantities") {
  SolverConfig cfg;
  CHECK(cfg.small_set_bound(1000) == doctest::Approx(1000.0 / (2 * cfg.C)));
  CHECK(cfg.target_paths(1000) == 251);  // floor(1000^0.8)
  CHECK(cfg.linking_width(2) >= 2);
  CHECK(cfg.is_protected(1, 2) == false);
  cfg.protected_edges.push_back({3, 9});
  CHECK(cfg.is_protected(9, 3));
}
