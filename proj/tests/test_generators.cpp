#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hamex/generators.hpp"

using namespace hamex;

TEST_CASE("random regular graphs are simple and regular") {
  // n=4, d=3 leaves no freedom: the only simple 3-regular graph is K_4.
  Graph k4 = random_regular(4, 3, 1);
  CHECK(k4.edge_count() == 6);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) CHECK(k4.has_edge(u, v));

  Graph g = random_regular(100, 10, 42);
  CHECK(g.vertex_count() == 100);
  CHECK(g.edge_count() == 500);
  for (Vertex v = 0; v < 100; ++v) CHECK(g.degree(v) == 10);
  // No self loops or parallel edges by construction.
  for (auto [u, v] : g.edges()) CHECK(u != v);

  CHECK_THROWS_AS(random_regular(5, 3, 1), InvalidInput);   // odd n*d
  CHECK_THROWS_AS(random_regular(4, 4, 1), InvalidInput);   // d >= n

  // Determinism per seed.
  CHECK(random_regular(60, 6, 9).edges() == random_regular(60, 6, 9).edges());
  CHECK(random_regular(60, 6, 9).edges() != random_regular(60, 6, 10).edges());
}

TEST_CASE("binomial random graphs") {
  CHECK(gnp(30, 0.0, 1).edge_count() == 0);
  CHECK(gnp(30, 1.0, 1).edge_count() == 30 * 29 / 2);

  // n=1000, p=0.01: mean 4995, sd ~70.3; 4 sigma is a ~1/16000 event.
  Graph g = gnp(1000, 0.01, 7);
  double mean = 999.0 * 1000.0 / 2.0 * 0.01;
  double sd = std::sqrt(mean * 0.99);
  CHECK(std::abs(static_cast<double>(g.edge_count()) - mean) < 4 * sd);

  CHECK(gnp(50, 0.3, 3).edges() == gnp(50, 0.3, 3).edges());
}

TEST_CASE("random Cayley graphs per group") {
  struct Case {
    GroupKind kind;
    std::size_t param;
    std::size_t order;
  };
  for (const Case& c : {Case{GroupKind::Cyclic, 24, 24},
                        Case{GroupKind::PowerOfZ2, 5, 32},
                        Case{GroupKind::Dihedral, 15, 30},
                        Case{GroupKind::Symmetric, 4, 24}}) {
    CAPTURE(static_cast<int>(c.kind));
    Graph g = random_cayley(c.kind, c.param, 6, 11);
    CHECK(g.vertex_count() == c.order);
    // A symmetrized connection set gives a vertex-transitive graph, hence
    // one common degree.
    std::size_t d0 = g.degree(0);
    CHECK(d0 >= 1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == d0);
    CHECK(random_cayley(c.kind, c.param, 6, 11).edges() == g.edges());
  }
}

TEST_CASE("named fixtures") {
  Graph p = fixture("petersen");
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);

  CHECK(fixture("cycle(5)").edge_count() == 5);
  CHECK(fixture("complete(4)").edge_count() == 6);
  Graph kb = fixture("complete_bipartite(3,4)");
  CHECK(kb.vertex_count() == 7);
  CHECK(kb.edge_count() == 12);
  Graph path = fixture("path(6)");
  CHECK(path.vertex_count() == 6);
  CHECK(path.edge_count() == 5);

  CHECK_THROWS_AS(fixture("hypercube(3)"), InvalidInput);
}
