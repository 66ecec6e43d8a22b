#include <doctest.h>

#include <algorithm>

#include "hamex/extendability.hpp"
#include "hamex/generators.hpp"

using namespace hamex;

TEST_CASE("deficiency audit basics") {
  Graph g = fixture("complete(50)");

  // Empty embedded subgraph in a dense host: the condition is vacuously
  // comfortable for small S.
  auto empty = ExtendableEmbedding::empty(g, 5, 5);
  CHECK(deficiency_audit(empty, 2, 100, 1).passed());

  // One embedded edge, small-S exhaustive check only.
  auto one = ExtendableEmbedding::empty(g, 5, 5);
  one.add_edge(0, 1);
  CHECK(deficiency_audit(one, 2, 0, 1).passed());
  // With a tight margin the full sampled range passes too.
  auto one_tight = ExtendableEmbedding::empty(g, 5, 2);
  one_tight.add_edge(0, 1);
  CHECK(deficiency_audit(one_tight, 2, 200, 1).passed());

  // Near-spanning H leaves no free neighbours: refuted with a witness.
  auto full = ExtendableEmbedding::empty(g, 5, 5);
  for (Vertex v = 0; v < 49; ++v) full.add_vertex(v);
  auto verdict = deficiency_audit(full, 2, 100, 1);
  REQUIRE(verdict.refuted());
  REQUIRE(verdict.witness.has_value());
  // Witness re-check against the raw inequality.
  const auto& s = *verdict.witness;
  VertexSet image_free = outer_neighborhood(g, s);
  std::size_t outside = 0;
  for (Vertex v : image_free.members()) {
    if (!full.image.contains(v)) ++outside;
  }
  long need = 4 * static_cast<long>(s.size());
  for (Vertex v : s.members()) {
    if (full.image.contains(v)) {
      need -= static_cast<long>(full.h_degree[v]) - 1;
    }
  }
  CHECK(static_cast<long>(outside) < need);
}

TEST_CASE("embedding bookkeeping") {
  Graph g = fixture("complete(10)");
  auto emb = ExtendableEmbedding::empty(g, 3, 2);
  emb.add_edge(0, 1);
  emb.add_edge(1, 2);
  CHECK(emb.image.size() == 3);
  CHECK(emb.h_degree[1] == 2);
  CHECK(emb.free_degree(1) == 7);
  emb.add_edge(1, 3);
  CHECK_THROWS_AS(emb.add_edge(1, 4), InvalidInput);  // degree cap D=3
}

TEST_CASE("growing extendable paths") {
  SolverConfig cfg;
  Graph g = fixture("complete(100)");
  auto emb = ExtendableEmbedding::empty(g, 6, 2);
  emb.add_edge(0, 1);

  auto r1 = extend_path(emb, 1, std::nullopt, 10, cfg, 3);
  REQUIRE(r1.success);
  CHECK(r1.path.size() == 11);
  CHECK(r1.path.front() == 1);
  for (std::size_t i = 0; i + 1 < r1.path.size(); ++i) {
    CHECK(g.has_edge(r1.path[i], r1.path[i + 1]));
  }
  CHECK(deficiency_audit(emb, 2, 100, 5).passed());

  // Two anchors; internal vertices fresh.
  auto r2 = extend_path(emb, 0, r1.path.back(), 8, cfg, 4);
  REQUIRE(r2.success);
  CHECK(r2.path.size() == 9);
  CHECK(r2.path.front() == 0);
  CHECK(r2.path.back() == r1.path.back());

  CHECK_THROWS_AS(extend_path(emb, 1, std::nullopt, 0, cfg, 1),
                  InvalidInput);
  CHECK_THROWS_AS(extend_path(emb, 99, std::nullopt, 4, cfg, 1),
                  InvalidInput);  // anchor not embedded
}

TEST_CASE("embedding a blueprint into an expander host") {
  SolverConfig cfg;
  Graph g = random_regular(1500, 24, 5);
  LinkingStructure bp = build_linking_blueprint(4, cfg);
  auto res = embed_constructible(g, bp, cfg, 9);
  REQUIRE(res.success);
  REQUIRE(res.structure.image.size() == bp.graph.vertex_count());
  // Injective image whose edges all exist in the host.
  auto img = res.structure.image;
  std::sort(img.begin(), img.end());
  CHECK(std::adjacent_find(img.begin(), img.end()) == img.end());
  for (auto [u, v] : bp.graph.edges()) {
    CHECK(g.has_edge(res.structure.image[u], res.structure.image[v]));
  }
  CHECK(deficiency_audit(res.embedding, 2, 200, 7).passed());
}

TEST_CASE("partitioning the host around the structure") {
  SolverConfig cfg;
  Graph g = random_regular(2000, 24, 11);
  Partition p = partition_expander(g, cfg, 3);
  REQUIRE(p.success);

  // x, y, z cover the host exactly once.
  std::vector<int> hits(2000, 0);
  for (Vertex v : p.x.members()) ++hits[v];
  for (Vertex v : p.y.members()) ++hits[v];
  for (Vertex v : p.z.members()) ++hits[v];
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

  REQUIRE(p.a.size() == p.b.size());
  for (Vertex v : p.a) CHECK(p.x.contains(v));
  for (Vertex v : p.b) CHECK(p.x.contains(v));

  // Connector forest: one real path per terminal pair, all equal size,
  // endpoints a_i and b_i.
  std::size_t real_paths = 0;
  std::size_t plen = 0;
  for (auto id : p.connectors.path_ids()) {
    if (p.connectors.path_length_of_id(id) < 2) continue;
    ++real_paths;
    plen = plen ? plen : p.connectors.path_length_of_id(id);
    CHECK(p.connectors.path_length_of_id(id) == plen);
  }
  CHECK(real_paths == p.a.size());
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    CHECK(p.connectors.path_of(p.a[i]) == p.connectors.path_of(p.b[i]));
    CHECK(p.connectors.is_endpoint(p.a[i]));
    CHECK(p.connectors.is_endpoint(p.b[i]));
  }
  CHECK(p.z_audit.passed());
  CHECK(p.zyab_audit.passed());
}

TEST_CASE("a reserved edge is routed through a connector") {
  SolverConfig cfg;
  Graph g = random_regular(1200, 22, 21);
  Vertex a = 0, b = g.neighbors(0)[0];
  cfg.protected_edges.push_back({a, b});
  Partition p = partition_expander(g, cfg, 4);
  REQUIRE(p.success);
  CHECK(p.connectors.has_forest_edge(a, b));
}
