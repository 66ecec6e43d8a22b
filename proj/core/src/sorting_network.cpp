#include "hamex/sorting_network.hpp"

#include <algorithm>
#include <random>

namespace hamex {

std::size_t SortingNetwork::comparator_count() const {
  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.size();
  return total;
}

std::vector<std::uint32_t> SortingNetwork::apply(
    std::vector<std::uint32_t> values) const {
  if (values.size() != wires) throw InvalidInput("apply: wrong input width");
  for (const auto& layer : layers) {
    for (const Comparator& c : layer) {
      if (values[c.lo] > values[c.hi]) std::swap(values[c.lo], values[c.hi]);
    }
  }
  return values;
}

SortingNetwork build_sorting_network(std::size_t n) {
  if (n == 0) throw InvalidInput("sorting network needs at least one wire");
  SortingNetwork net;
  net.wires = n;
  // Batcher odd-even mergesort in its iterative form, valid for any n.
  for (std::size_t p = 1; p < n; p <<= 1) {
    for (std::size_t k = p; k >= 1; k >>= 1) {
      std::vector<Comparator> layer;
      for (std::size_t j = k % p; j + k <= n - 1; j += 2 * k) {
        std::size_t imax = std::min(k - 1, n - j - k - 1);
        for (std::size_t i = 0; i <= imax; ++i) {
          if ((i + j) / (2 * p) == (i + j + k) / (2 * p)) {
            layer.push_back({i + j, i + j + k});
          }
        }
      }
      if (!layer.empty()) net.layers.push_back(std::move(layer));
    }
  }
  return net;
}

bool certify_network(const SortingNetwork& net, std::size_t samples,
                     std::uint64_t seed) {
  const std::size_t n = net.wires;
  auto sorted_binary = [&](const std::vector<std::uint32_t>& in) {
    auto out = net.apply(in);
    return std::is_sorted(out.begin(), out.end());
  };
  if (n <= 16) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::uint32_t> in(n);
      for (std::size_t i = 0; i < n; ++i) in[i] = mask >> i & 1u;
      if (!sorted_binary(in)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 0; t < samples; ++t) {
    std::vector<std::uint32_t> in(n);
    for (auto& v : in) v = coin(rng);
    if (!sorted_binary(in)) return false;
  }
  return true;
}

std::vector<std::vector<CompState>> route_permutation(
    const SortingNetwork& net, const std::vector<std::size_t>& phi) {
  const std::size_t n = net.wires;
  if (phi.size() != n) throw InvalidInput("route: phi has the wrong size");
  std::vector<bool> seen(n, false);
  for (std::size_t v : phi) {
    if (v >= n || seen[v]) throw InvalidInput("route: phi is not a bijection");
    seen[v] = true;
  }
  std::vector<std::size_t> values(phi);
  std::vector<std::vector<CompState>> states;
  states.reserve(net.layers.size());
  for (const auto& layer : net.layers) {
    std::vector<CompState> row;
    row.reserve(layer.size());
    for (const Comparator& c : layer) {
      if (values[c.lo] > values[c.hi]) {
        std::swap(values[c.lo], values[c.hi]);
        row.push_back(CompState::Crossed);
      } else {
        row.push_back(CompState::Straight);
      }
    }
    states.push_back(std::move(row));
  }
  return states;
}

}  // namespace hamex
