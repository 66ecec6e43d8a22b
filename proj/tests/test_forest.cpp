#include <doctest.h>

#include <numeric>
#include <sstream>

#include "hamex/forest.hpp"

using namespace hamex;

TEST_CASE("forest structure and registry") {
  LinearForest f = LinearForest::from_paths(7, {{0, 1, 2, 3}, {4, 5}, {6}});
  CHECK(f.validate());
  CHECK(f.vertex_count() == 7);
  CHECK(f.path_count() == 3);
  CHECK(f.edge_total() == 4);
  CHECK(f.degree(1) == 2);
  CHECK(f.degree(0) == 1);
  CHECK(f.degree(6) == 0);
  CHECK(f.is_endpoint(0));
  CHECK(f.is_endpoint(6));  // isolated vertices count as endpoints
  CHECK(!f.is_endpoint(2));
  CHECK(f.is_isolated(6));
  CHECK(f.has_isolated_vertex());
  CHECK(f.end_vertices() == std::vector<Vertex>{0, 3, 4, 5, 6});
  CHECK(f.path_length(1) == 4);
  CHECK(f.path_length(6) == 1);
  CHECK(f.has_forest_edge(2, 3));
  CHECK(!f.has_forest_edge(3, 4));
  CHECK(f.lengths_desc() == std::vector<std::size_t>{4, 2, 1});

  auto seq = f.path_vertices(2);
  bool fwd = seq == std::vector<Vertex>{0, 1, 2, 3};
  bool bwd = seq == std::vector<Vertex>{3, 2, 1, 0};
  CHECK((fwd || bwd));

  // Registry lengths sum to the vertex count.
  std::size_t total = 0;
  for (auto id : f.path_ids()) total += f.path_length_of_id(id);
  CHECK(total == 7);
}

TEST_CASE("forest mutations") {
  LinearForest f = LinearForest::from_paths(6, {{0, 1, 2}, {3, 4, 5}});
  f.add_edge(2, 3);
  CHECK(f.path_count() == 1);
  CHECK(f.validate());
  CHECK(f.forest_distance(0, 5) == 5);

  // Closing a cycle or joining at an internal vertex is rejected.
  CHECK_THROWS_AS(f.add_edge(0, 5), InvalidInput);
  LinearForest g = LinearForest::from_paths(4, {{0, 1, 2}, {3}});
  CHECK_THROWS_AS(g.add_edge(1, 3), InvalidInput);

  f.remove_edge(2, 3);
  CHECK(f.path_count() == 2);
  CHECK(f.forest_distance(0, 5) == SIZE_MAX);
  CHECK(f == LinearForest::from_paths(6, {{0, 1, 2}, {3, 4, 5}}));

  CHECK(LinearForest::singletons(4).path_count() == 4);
  CHECK_THROWS_AS(LinearForest::from_paths(3, {{0, 1}}), InvalidInput);
  CHECK_THROWS_AS(LinearForest::from_paths(3, {{0, 1}, {1, 2}}),
                  InvalidInput);
}

TEST_CASE("interior of a vertex set") {
  LinearForest f = LinearForest::from_paths(5, {{0, 1, 2, 3, 4}});
  CHECK(interior(f, VertexSet::of(5, {1, 2, 3})).members() ==
        std::vector<Vertex>{2});
  // Endpoints qualify too once every forest-neighbour is inside the set.
  CHECK(interior(f, VertexSet::full(5)).members() ==
        std::vector<Vertex>{0, 1, 2, 3, 4});

  LinearForest iso = LinearForest::from_paths(2, {{0}, {1}});
  CHECK(interior(iso, VertexSet::of(2, {0})).members() ==
        std::vector<Vertex>{0});
}

TEST_CASE("forest order is by path count then length vector") {
  auto with_lengths = [](const std::vector<std::size_t>& lens) {
    std::vector<std::vector<Vertex>> paths;
    Vertex next = 0;
    std::size_t n = 0;
    for (auto l : lens) n += l;
    for (auto l : lens) {
      std::vector<Vertex> p(l);
      std::iota(p.begin(), p.end(), next);
      next += static_cast<Vertex>(l);
      paths.push_back(p);
    }
    return LinearForest::from_paths(n, paths);
  };
  auto f1 = with_lengths({8, 5, 3, 2, 2});
  auto f2 = with_lengths({8, 5, 4, 2, 1});
  CHECK(lex_compare(f1, f2) == std::strong_ordering::less);
  CHECK(lex_compare(f2, f1) == std::strong_ordering::greater);

  auto one = with_lengths({10});
  auto two = with_lengths({5, 5});
  CHECK(lex_compare(one, two) == std::strong_ordering::less);

  auto f3 = with_lengths({4, 3});
  auto f4 = with_lengths({4, 3});
  CHECK(lex_compare(f3, f4) == std::strong_ordering::equal);
}

TEST_CASE("forest serialization round trip") {
  LinearForest f = LinearForest::from_paths(6, {{2, 0, 4}, {1, 5}, {3}});
  std::ostringstream out;
  save_forest(out, f);
  std::istringstream in(out.str());
  LinearForest g = load_forest(in, 6);
  CHECK(g == f);
}
