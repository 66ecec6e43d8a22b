#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "hamex/expansion.hpp"
#include "hamex/generators.hpp"

using namespace hamex;

namespace {

// Re-checks a refutation witness straight against the two defining
// conditions, independently of the checker that produced it.
bool witness_violates(const Graph& g, double C, const VertexSet& w) {
  const std::size_t n = g.vertex_count();
  double bound = static_cast<double>(n) / (2.0 * C);
  // Condition (a): a small set with too few outside neighbours.
  if (static_cast<double>(w.size()) < bound &&
      static_cast<double>(outer_neighborhood(g, w).size()) <
          C * static_cast<double>(w.size())) {
    return true;
  }
  // Condition (b): w of threshold size whose closed neighbourhood misses a
  // threshold-sized remainder (the remainder is the edgeless partner set).
  if (static_cast<double>(w.size()) >= bound) {
    VertexSet nb = outer_neighborhood(g, w);
    std::size_t untouched = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!w.contains(v) && !nb.contains(v)) ++untouched;
    }
    if (static_cast<double>(untouched) >= bound) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("exact expander check on small fixtures") {
  SolverConfig cfg;
  auto k10 = fixture("complete(10)");
  CHECK(check_c_expander_exact(k10, 2.0).status == VerdictStatus::Certified);
  // Monotone in C.
  CHECK(check_c_expander_exact(k10, 1.0).status == VerdictStatus::Certified);

  auto p10 = fixture("path(10)");
  auto v = check_c_expander_exact(p10, 2.0);
  REQUIRE(v.refuted());
  REQUIRE(v.witness.has_value());
  CHECK(witness_violates(p10, 2.0, *v.witness));
  // An endpoint alone already fails: one neighbour < 2.
  CHECK(outer_neighborhood(p10, VertexSet::of(10, {0})).size() == 1);

  Graph empty3(3, {});
  CHECK(check_c_expander_exact(empty3, 1.0).refuted());

  // Above the cap the exact checker refuses.
  auto big = fixture("complete(25)");
  CHECK(check_c_expander_exact(big, 2.0).status ==
        VerdictStatus::Inconclusive);
}

TEST_CASE("petersen certifies at C=2") {
  // Both defining conditions hold: every X with |X| < 10/4 (so |X| <= 2)
  // has |N(X)| >= 2|X|, and any two disjoint 3-sets span an edge.
  auto pet = fixture("petersen");
  auto v = check_c_expander_exact(pet, 2.0);
  CHECK(v.status == VerdictStatus::Certified);
}

TEST_CASE("sampled expander check") {
  SolverConfig cfg;
  auto star = fixture("complete_bipartite(1,50)");
  auto v = check_c_expander_sampled(star, 3.0, cfg);
  REQUIRE(v.refuted());
  REQUIRE(v.witness.has_value());
  CHECK(witness_violates(star, 3.0, *v.witness));

  auto cubic = random_regular(100, 3, 5);
  auto v2 = check_c_expander_sampled(cubic, 50.0, cfg);
  REQUIRE(v2.refuted());
  CHECK(witness_violates(cubic, 50.0, *v2.witness));

  auto k200 = fixture("complete(200)");
  auto v3 = check_c_expander_sampled(k200, 5.0, cfg);
  CHECK(v3.passed());
  CHECK(!v3.witness.has_value());
}

TEST_CASE("expands-into") {
  SolverConfig cfg;
  auto kmm = fixture("complete_bipartite(8,8)");
  VertexSet left(16), right(16);
  for (Vertex v = 0; v < 8; ++v) left.insert(v);
  for (Vertex v = 8; v < 16; ++v) right.insert(v);
  CHECK(expands_into(kmm, left, right, 4.0, cfg).passed());

  // A member with no neighbours in the target refutes as a singleton.
  Graph with_iso(17, [] {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = 8; v < 16; ++v) es.push_back({u, v});
    return es;
  }());
  VertexSet u = left;
  u = VertexSet(17);
  for (Vertex v = 0; v < 8; ++v) u.insert(v);
  u.insert(16);
  VertexSet tgt(17);
  for (Vertex v = 8; v < 16; ++v) tgt.insert(v);
  auto v = expands_into(with_iso, u, tgt, 1.0, cfg);
  REQUIRE(v.refuted());
  CHECK(v.witness->size() == 1);

  // Empty target refutes, undersized u is an input error.
  CHECK(expands_into(kmm, left, VertexSet(16), 1.0, cfg).refuted());
  CHECK_THROWS_AS(
      expands_into(kmm, VertexSet::of(16, {0, 1}), right, 1.0, cfg),
      InvalidInput);
}

TEST_CASE("forest expander extraction") {
  SolverConfig cfg;
  // Strong expander, forest of two long paths split into quadrants: the
  // greedy cleaner should find an immediate fixpoint.
  Graph g = random_regular(400, 40, 9);
  std::vector<Vertex> p1(200), p2(200);
  std::iota(p1.begin(), p1.end(), 0);
  std::iota(p2.begin(), p2.end(), 200);
  LinearForest f = LinearForest::from_paths(400, {p1, p2});
  std::array<VertexSet, 4> parts;
  for (int i = 0; i < 4; ++i) {
    parts[i] = VertexSet(400);
    for (Vertex v = 100 * i; v < 100 * (i + 1); ++v) parts[i].insert(v);
  }
  auto out = extract_forest_expanders(g, f, parts, cfg);
  for (int i = 0; i < 4; ++i) {
    CHECK(out[i].is_subset_of(parts[i]));
    CHECK(out[i] == parts[i]);  // nothing discarded on a strong expander
  }
  // Post-hoc audit: each surviving set expands into every other interior.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      CHECK(expands_into(g, out[i], interior(f, out[j]), cfg.C_prime, cfg)
                .passed());
    }
  }

  // Empty interior is a precondition error.
  std::array<VertexSet, 4> bad = parts;
  bad[0] = VertexSet::of(400, {0, 2, 4});  // no forest-interior vertex
  CHECK_THROWS_AS(extract_forest_expanders(g, f, bad, cfg), InvalidInput);
}

TEST_CASE("spectral estimates") {
  auto close = [](double a, double b) { return std::fabs(a - b) < 1e-6; };
  auto k50 = fixture("complete(50)");
  auto r1 = estimate_lambda(k50);
  CHECK(r1.regular);
  CHECK(r1.degree == 49);
  CHECK(close(r1.lambda, 1.0));

  auto kdd = fixture("complete_bipartite(7,7)");
  CHECK(close(estimate_lambda(kdd).lambda, 7.0));

  // Cycle spectrum {2cos(2*pi*k/n)}: in absolute value the runner-up is 2
  // for even n (bipartite, eigenvalue -2) and 2cos(pi/n) for odd n.
  auto c9 = fixture("cycle(9)");
  CHECK(close(estimate_lambda(c9).lambda, 2.0 * std::cos(M_PI / 9)));
  auto c13 = fixture("cycle(13)");
  CHECK(close(estimate_lambda(c13).lambda, 2.0 * std::cos(M_PI / 13)));
  CHECK(close(estimate_lambda(fixture("cycle(8)")).lambda, 2.0));

  // Dense and power paths agree.
  for (int t = 0; t < 5; ++t) {
    Graph g = random_regular(150, 8, 100 + t);
    double dense = estimate_lambda(g, 500).lambda;
    auto pow = estimate_lambda(g, 1);
    CHECK(std::fabs(dense - pow.lambda) < 1e-6);
    CHECK(pow.residual < 1e-7);
  }

  // Non-regular input is flagged, not solved.
  auto star = fixture("complete_bipartite(1,5)");
  auto r2 = estimate_lambda(star);
  CHECK(!r2.regular);
  CHECK(r2.degree == 5);
  CHECK(r2.min_degree == 1);
}

TEST_CASE("mixing audit") {
  auto k40 = fixture("complete(40)");
  CHECK(mixing_audit(k40, 1.0, 200, 3) <= 1.0);

  // Two disjoint cliques with a (false) claim of lambda = 1: cross-pairs
  // have no edges at all, which the audit catches.
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex u = 0; u < 20; ++u)
    for (Vertex v = u + 1; v < 20; ++v) es.push_back({u, v});
  for (Vertex u = 20; u < 40; ++u)
    for (Vertex v = u + 1; v < 40; ++v) es.push_back({u, v});
  Graph two(40, es);
  CHECK(mixing_audit(two, 1.0, 200, 3) > 1.0);

  auto star = fixture("complete_bipartite(1,5)");
  CHECK_THROWS_AS(mixing_audit(star, 1.0, 10, 1), InvalidInput);
}
