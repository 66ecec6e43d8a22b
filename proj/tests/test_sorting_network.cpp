#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hamex/sorting_network.hpp"

using namespace hamex;

namespace {

bool sorts_all_binary(const SortingNetwork& net) {
  const std::size_t n = net.wires;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::uint32_t> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = (mask >> i) & 1;
    auto out = net.apply(in);
    if (!std::is_sorted(out.begin(), out.end())) return false;
  }
  return true;
}

// Follows each wire through the recorded comparator states and returns the
// arrival wire per start wire.
std::vector<std::size_t> trajectories(
    const SortingNetwork& net,
    const std::vector<std::vector<CompState>>& states) {
  std::vector<std::size_t> where(net.wires);
  std::iota(where.begin(), where.end(), 0);
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    for (std::size_t c = 0; c < net.layers[l].size(); ++c) {
      if (states[l][c] != CompState::Crossed) continue;
      const Comparator& comp = net.layers[l][c];
      for (auto& w : where) {
        if (w == comp.lo) {
          w = comp.hi;
        } else if (w == comp.hi) {
          w = comp.lo;
        }
      }
    }
  }
  return where;
}

}  // namespace

TEST_CASE("minimal networks") {
  auto net2 = build_sorting_network(2);
  CHECK(net2.depth() == 1);
  CHECK(net2.comparator_count() == 1);
  CHECK(net2.apply({1, 0}) == std::vector<std::uint32_t>{0, 1});

  CHECK_THROWS_AS(build_sorting_network(0), InvalidInput);
  CHECK(build_sorting_network(1).comparator_count() == 0);
}

TEST_CASE("small networks sort every binary input") {
  CHECK(sorts_all_binary(build_sorting_network(4)));
  auto net8 = build_sorting_network(8);
  CHECK(sorts_all_binary(net8));
  CHECK(net8.depth() == 6);  // Batcher depth l(l+1)/2 for 2^3 wires
  for (std::size_t n : {3, 5, 6, 7, 11, 13}) {
    CAPTURE(n);
    CHECK(sorts_all_binary(build_sorting_network(n)));
  }
}

TEST_CASE("layers use disjoint wires") {
  auto net = build_sorting_network(13);
  for (const auto& layer : net.layers) {
    std::vector<std::size_t> seen;
    for (const Comparator& c : layer) {
      CHECK(c.lo < c.hi);
      seen.push_back(c.lo);
      seen.push_back(c.hi);
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}

TEST_CASE("certification by the zero-one principle") {
  CHECK(certify_network(build_sorting_network(10)));
  CHECK(certify_network(build_sorting_network(20), 2000, 9));
  // A damaged network fails.
  auto broken = build_sorting_network(8);
  broken.layers.pop_back();
  CHECK(!certify_network(broken));
}

TEST_CASE("network sorts arbitrary values") {
  auto net = build_sorting_network(9);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::uint32_t> in(9);
    for (auto& v : in) v = static_cast<std::uint32_t>(rng() % 1000);
    auto out = net.apply(in);
    auto expect = in;
    std::sort(expect.begin(), expect.end());
    CHECK(out == expect);
  }
}

TEST_CASE("routing the identity keeps every wire straight") {
  auto net = build_sorting_network(8);
  std::vector<std::size_t> id(8);
  std::iota(id.begin(), id.end(), 0);
  auto states = route_permutation(net, id);
  for (const auto& layer : states) {
    for (CompState s : layer) CHECK(s == CompState::Straight);
  }
  CHECK(trajectories(net, states) == id);
}

TEST_CASE("routing a swap crosses the only comparator") {
  auto net = build_sorting_network(2);
  auto states = route_permutation(net, {1, 0});
  REQUIRE(states.size() == 1);
  REQUIRE(states[0].size() == 1);
  CHECK(states[0][0] == CompState::Crossed);
}

TEST_CASE("routing realizes random permutations end to end") {
  auto net = build_sorting_network(8);
  std::vector<std::size_t> phi(8);
  std::iota(phi.begin(), phi.end(), 0);
  std::mt19937_64 rng(15);
  for (int t = 0; t < 200; ++t) {
    std::shuffle(phi.begin(), phi.end(), rng);
    auto states = route_permutation(net, phi);
    CHECK(trajectories(net, states) == phi);
  }
  CHECK_THROWS_AS(route_permutation(net, {0, 0, 1, 2, 3, 4, 5, 6}),
                  InvalidInput);
}
