#include <doctest.h>

#include <numeric>

#include "hamex/generators.hpp"
#include "hamex/oracle.hpp"
#include "hamex/pipeline.hpp"

using namespace hamex;

TEST_CASE("cycle verification") {
  Graph c5 = fixture("cycle(5)");
  CHECK(verify_hamilton_cycle(c5, {0, 1, 2, 3, 4}));
  CHECK(verify_hamilton_cycle(c5, {2, 3, 4, 0, 1}));
  CHECK(verify_hamilton_cycle(c5, {4, 3, 2, 1, 0}));
  CHECK(!verify_hamilton_cycle(c5, {0, 2, 1, 3, 4}));   // non-edge 0-2
  CHECK(!verify_hamilton_cycle(c5, {0, 1, 2, 3}));      // not spanning
  CHECK(!verify_hamilton_cycle(c5, {0, 1, 2, 3, 3}));   // repeat
  CHECK(!verify_hamilton_cycle(fixture("path(5)"), {0, 1, 2, 3, 4}));
}

TEST_CASE("path verification") {
  Graph p5 = fixture("path(5)");
  CHECK(verify_hamilton_path(p5, {0, 1, 2, 3, 4}, 0, 4));
  CHECK(verify_hamilton_path(p5, {4, 3, 2, 1, 0}, 4, 0));
  CHECK(!verify_hamilton_path(p5, {0, 1, 2, 3, 4}, 0, 3));  // wrong endpoint
  CHECK(!verify_hamilton_path(p5, {1, 2, 3, 4}, 1, 4));     // not spanning
  Graph c5 = fixture("cycle(5)");
  CHECK(verify_hamilton_path(c5, {1, 0, 4, 3, 2}, 1, 2));
}

TEST_CASE("rotation-extension fallback") {
  SolverConfig cfg;
  auto r1 = posa_fallback(gnp(200, 0.2, 7), cfg);
  CHECK(r1.outcome == Outcome::Cycle);
  CHECK(r1.verified);
  CHECK(verify_hamilton_cycle(gnp(200, 0.2, 7), r1.sequence));

  CHECK(posa_fallback(fixture("path(10)"), cfg).outcome == Outcome::NotFound);

  auto r2 = posa_fallback(fixture("complete(4)"), cfg);
  CHECK(r2.outcome == Outcome::Cycle);
  CHECK(verify_hamilton_cycle(fixture("complete(4)"), r2.sequence));
}

TEST_CASE("cycle solver on easy and impossible hosts") {
  SolverConfig cfg;
  Graph c50 = fixture("cycle(50)");
  auto r = find_hamilton_cycle(c50, cfg);
  REQUIRE(r.outcome == Outcome::Cycle);
  CHECK(r.verified);
  CHECK(verify_hamilton_cycle(c50, r.sequence));

  Graph pet = fixture("petersen");
  auto rp = find_hamilton_cycle(pet, cfg);
  CHECK(rp.outcome != Outcome::Cycle);
  CHECK(!held_karp(pet).hamiltonian);  // the solver's miss is genuine
}

TEST_CASE("cycle solver on a random regular expander") {
  SolverConfig cfg;
  Graph g = random_regular(600, 20, 3);
  auto r = find_hamilton_cycle(g, cfg);
  REQUIRE(r.outcome == Outcome::Cycle);
  CHECK(r.verified);
  CHECK(verify_hamilton_cycle(g, r.sequence));
}

TEST_CASE("path solver between prescribed endpoints") {
  SolverConfig cfg;
  Graph k6 = fixture("complete(6)");
  auto r = find_hamilton_path(k6, 1, 4, cfg);
  REQUIRE(r.outcome == Outcome::Path);
  CHECK(r.verified);
  CHECK(verify_hamilton_path(k6, r.sequence, 1, 4));

  CHECK_THROWS_AS(find_hamilton_path(k6, 2, 2, cfg), InvalidInput);
  CHECK_THROWS_AS(find_hamilton_path(k6, 0, 6, cfg), InvalidInput);

  Graph g = random_regular(600, 20, 5);
  auto rg = find_hamilton_path(g, 0, 300, cfg);
  REQUIRE(rg.outcome == Outcome::Path);
  CHECK(rg.verified);
  CHECK(verify_hamilton_path(g, rg.sequence, 0, 300));
}

TEST_CASE("identical inputs give identical reports") {
  SolverConfig cfg;
  Graph g = random_regular(600, 20, 13);
  auto a = find_hamilton_cycle(g, cfg);
  auto b = find_hamilton_cycle(g, cfg);
  CHECK(a.to_json(false) == b.to_json(false));
}

TEST_CASE("a reported cycle is always a verified cycle") {
  SolverConfig cfg;
  for (std::uint64_t s = 1; s <= 4; ++s) {
    Graph g = random_regular(300, 14, s);
    auto r = find_hamilton_cycle(g, cfg);
    if (r.outcome == Outcome::Cycle) {
      CHECK(r.verified);
      CHECK(verify_hamilton_cycle(g, r.sequence));
    }
  }
}
