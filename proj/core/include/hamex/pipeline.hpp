#ifndef HAMEX_PIPELINE_HPP
#define HAMEX_PIPELINE_HPP

#include <string>
#include <vector>

#include "hamex/config.hpp"
#include "hamex/extendability.hpp"
#include "hamex/graph.hpp"

namespace hamex {

enum class Outcome { Cycle, Path, NotFound, RefutedInput };

std::string outcome_name(Outcome o);

struct SolveReport {
  Outcome outcome = Outcome::NotFound;
  std::vector<Vertex> sequence;  // cycle or path vertex order
  std::vector<std::pair<std::string, double>> timings_ms;
  std::size_t merge_count = 0;
  bool fallback_used = false;
  bool verified = false;
  std::string detail;

  /// with_timings=false gives byte-identical output for identical
  /// (graph, cfg, seed) runs.
  std::string to_json(bool with_timings = true) const;
};

/// True iff seq is a permutation of V(g) and every consecutive pair,
/// including last-to-first, is an edge.
bool verify_hamilton_cycle(const Graph& g, const std::vector<Vertex>& seq);

/// True iff seq is a spanning path from x to y.
bool verify_hamilton_path(const Graph& g, const std::vector<Vertex>& seq,
                          Vertex x, Vertex y);

/// Classic rotation-extension with restarts; honors cfg.protected_edges
/// (such an edge seeds the initial path and is never broken). Best-effort.
SolveReport posa_fallback(const Graph& g, const SolverConfig& cfg);

/// Full pipeline: partition the host around an embedded linking structure,
/// reduce a linear forest on the remainder, merge paths until the open
/// endpoints are exactly the structure's terminals, route the closing
/// permutation through the structure, verify. Any stage failure falls back
/// to posa_fallback; below cfg.fallback_first_threshold the fallback runs
/// first. A reported cycle always verifies.
SolveReport find_hamilton_cycle(const Graph& g, const SolverConfig& cfg);

/// Hamilton path between prescribed endpoints: solves the cycle problem on
/// g + xy with xy protected against rotation breakage, then removes xy.
/// Throws InvalidInput when x == y or out of range.
SolveReport find_hamilton_path(const Graph& g, Vertex x, Vertex y,
                               const SolverConfig& cfg);

}  // namespace hamex

#endif
