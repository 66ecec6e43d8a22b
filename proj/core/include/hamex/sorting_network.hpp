#ifndef HAMEX_SORTING_NETWORK_HPP
#define HAMEX_SORTING_NETWORK_HPP

#include <cstdint>
#include <vector>

#include "hamex/graph.hpp"

namespace hamex {

struct Comparator {
  std::size_t lo = 0;
  std::size_t hi = 0;  // lo < hi always

  bool operator==(const Comparator&) const = default;
};

/// Layered comparator network; comparators within one layer touch disjoint
/// wires.
struct SortingNetwork {
  std::size_t wires = 0;
  std::vector<std::vector<Comparator>> layers;

  std::size_t depth() const { return layers.size(); }
  std::size_t comparator_count() const;

  /// Runs the network: each comparator puts the smaller value on its low
  /// wire.
  std::vector<std::uint32_t> apply(std::vector<std::uint32_t> values) const;
};

/// Batcher odd-even mergesort for any wire count (no padding wires needed).
SortingNetwork build_sorting_network(std::size_t n);

/// 0-1 principle: exhaustive over all 2^N binary inputs for N <= 16,
/// `samples` random binary inputs above.
bool certify_network(const SortingNetwork& net, std::size_t samples = 10000,
                     std::uint64_t seed = 1);

enum class CompState : std::uint8_t { Straight, Crossed };

/// Feeds wire p the value phi(p) and records, per comparator, whether it
/// passed its inputs straight or swapped them; the induced wire
/// trajectories realize phi end to end. phi must be a bijection on
/// [0, wires).
std::vector<std::vector<CompState>> route_permutation(
    const SortingNetwork& net, const std::vector<std::size_t>& phi);

}  // namespace hamex

#endif
