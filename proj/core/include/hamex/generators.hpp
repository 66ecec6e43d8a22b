#ifndef HAMEX_GENERATORS_HPP
#define HAMEX_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "hamex/graph.hpp"

namespace hamex {

/// Configuration-model d-regular graph; restarts on collisions (capped at
/// 1000, then throws). Requires n*d even and d < n.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// Binomial random graph G(n,p).
Graph gnp(std::size_t n, double p, std::uint64_t seed);

enum class GroupKind { Cyclic, PowerOfZ2, Dihedral, Symmetric };

/// Cayley graph of the given group with a uniformly random connection set
/// of d elements, symmetrized so the graph is undirected.
///   Cyclic(n): Z_n           PowerOfZ2(k): Z_2^k (order 2^k)
///   Dihedral(n): D_n (order 2n)   Symmetric(k): S_k, k <= 8
Graph random_cayley(GroupKind kind, std::size_t param, std::size_t d,
                    std::uint64_t seed);

/// Named fixtures: "petersen", "complete(n)", "complete_bipartite(a,b)",
/// "path(n)", "cycle(n)".
Graph fixture(const std::string& name);

}  // namespace hamex

#endif
