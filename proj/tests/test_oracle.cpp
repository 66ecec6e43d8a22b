#include <doctest.h>

#include <algorithm>

#include "hamex/generators.hpp"
#include "hamex/linking.hpp"
#include "hamex/oracle.hpp"

using namespace hamex;

namespace {

bool cycle_ok(const Graph& g, const std::vector<Vertex>& seq) {
  if (seq.size() != g.vertex_count()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : seq) {
    if (v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.has_edge(seq[i], seq[(i + 1) % seq.size()])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("exact Hamiltonicity on small graphs") {
  for (const char* name : {"cycle(5)", "complete(4)", "cycle(4)",
                           "complete_bipartite(3,3)"}) {
    CAPTURE(name);
    Graph g = fixture(name);
    auto r = held_karp(g);
    REQUIRE(r.hamiltonian);
    CHECK(cycle_ok(g, r.cycle));
  }
  CHECK(!held_karp(fixture("petersen")).hamiltonian);
  CHECK(!held_karp(fixture("path(5)")).hamiltonian);
  CHECK(!held_karp(fixture("complete_bipartite(3,4)")).hamiltonian);
  CHECK_THROWS_AS(held_karp(fixture("complete(21)")), InvalidInput);
}

TEST_CASE("rotation enumeration on hand-checked instances") {
  // A bare path admits no legal pivot at all.
  Graph p5 = fixture("path(5)");
  LinearForest f5 = LinearForest::from_paths(5, {{0, 1, 2, 3, 4}});
  CHECK(enumerate_rotations(p5, f5, 0, VertexSet::full(5), 1) ==
        std::vector<Vertex>{0});

  // Frozen two-path fixture (same values the fast reach reproduces).
  Graph g(12, {{0, 1}, {1, 2}, {2, 3},  {3, 4},  {4, 5},
               {6, 7}, {7, 8}, {8, 9},  {9, 10}, {10, 11},
               {0, 8}, {0, 4}, {5, 9},  {2, 10}, {3, 7},
               {1, 11}, {4, 6}});
  LinearForest f = LinearForest::from_paths(12, {{0, 1, 2, 3, 4, 5},
                                                 {6, 7, 8, 9, 10, 11}});
  CHECK(enumerate_rotations(g, f, 0, VertexSet::full(12), 1) ==
        std::vector<Vertex>{0, 3, 7, 9});
  CHECK(enumerate_rotations(g, f, 0, VertexSet::full(12), 2) ==
        std::vector<Vertex>{0, 2, 3, 4, 6, 7, 8, 9});
}

TEST_CASE("exhaustive linking check accepts and rejects") {
  SolverConfig cfg;
  LinkingStructure ls = build_linking_blueprint(3, cfg);
  CHECK(verify_linking_exhaustive(ls));

  auto edges = ls.graph.edges();
  REQUIRE(!ls.gadgets.empty());
  Vertex ga = ls.gadgets[0].map[0];
  auto it = std::find_if(edges.begin(), edges.end(), [&](auto e) {
    return e.first == ga || e.second == ga;
  });
  REQUIRE(it != edges.end());
  edges.erase(it);
  ls.graph = Graph(ls.graph.vertex_count(), edges);
  CHECK(!verify_linking_exhaustive(ls));

  LinkingStructure wide = build_linking_blueprint(8, cfg);
  CHECK_THROWS_AS(verify_linking_exhaustive(wide), InvalidInput);
}
