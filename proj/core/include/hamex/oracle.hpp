#ifndef HAMEX_ORACLE_HPP
#define HAMEX_ORACLE_HPP

#include <vector>

#include "hamex/forest.hpp"
#include "hamex/graph.hpp"
#include "hamex/linking.hpp"

namespace hamex {

/// Independent brute-force ground truth for tests. These routines share
/// only the graph core with the solver; none of its search structures or
/// shortcuts are reused, so agreement is a genuine cross-check.

struct HeldKarpResult {
  bool hamiltonian = false;
  std::vector<Vertex> cycle;  // witness when hamiltonian
};

/// Exact Hamiltonicity by subset DP. Refuses n > 20.
HeldKarpResult held_karp(const Graph& g);

/// Every endpoint reachable from v by AT MOST k rotations, exhaustively
/// over all legal rotation sequences (pivot interior to u in the original
/// forest, untouched, at original-forest distance >= 3 from v and every
/// earlier pivot; same-path pivots expose the closer neighbour). Sorted
/// ascending, always contains v. Refuses after 10^6 explored states.
std::vector<Vertex> enumerate_rotations(const Graph& g, const LinearForest& f,
                                        Vertex v, const VertexSet& u,
                                        std::size_t k);

/// For every bijection phi on 0..width-1, link(ls, phi) must produce
/// vertex-disjoint equal-length paths that cover V(H), each a walk along
/// edges of H from a_i to b_{phi(i)}; any exception counts as failure.
/// Refuses width > 5.
bool verify_linking_exhaustive(const LinkingStructure& ls);

}  // namespace hamex

#endif
