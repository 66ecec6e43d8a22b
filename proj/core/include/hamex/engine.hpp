#ifndef HAMEX_ENGINE_HPP
#define HAMEX_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamex/config.hpp"
#include "hamex/expansion.hpp"
#include "hamex/rotation.hpp"

namespace hamex {

/// Trace of one composite merge attempt. On success the caller's forest has
/// been advanced; on failure it is untouched and failed_stage names the
/// stage that gave up.
struct MergeReport {
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  bool success = false;
  std::string failed_stage;
  std::size_t edges_changed = 0;
  std::size_t rotations = 0;
  std::vector<std::size_t> part_sizes;
  Vertex hop = kNoVertex;
  std::pair<Vertex, Vertex> crossing_edge{kNoVertex, kNoVertex};
  std::vector<RotationRecord> records;  // applied rotation chains, in order
  std::vector<std::string> audits;      // expansion verdicts, serialized

  std::string to_json() const;
};

/// Joins the paths of x and y by rotating x inside X and y inside Y until a
/// graph edge crosses between the reached endpoint sets, then adding it.
/// Requires: no isolated vertices; x in X and y in Y are endpoints on
/// distinct paths; no path meets both X and Y; no endpoint besides x (resp.
/// y) lies in X (resp. Y). Violations throw InvalidInput. On success the
/// path count drops by one and End loses exactly {x,y}.
MergeReport close_pair(const Graph& g, LinearForest& f, Vertex x, Vertex y,
                       const VertexSet& X, const VertexSet& Y,
                       const SolverConfig& cfg);

struct SteerResult {
  Vertex landed = kNoVertex;
  RotationRecord record;
};

/// Moves endpoint u to some vertex of V by rotations with pivots inside U,
/// leaving F[V minus the landing vertex] untouched (asserted by edge-set
/// comparison). Case 1 lands directly on a reached endpoint in V; case 2
/// grows the reach and applies one final rotation through a pivot in the
/// interior of V outside the already-touched zone. Returns nullopt (forest
/// untouched) when both cases fail. V must contain no endpoints.
std::optional<SteerResult> steer_endpoint(const Graph& g, LinearForest& f,
                                          Vertex u, const VertexSet& U,
                                          const VertexSet& V,
                                          const SolverConfig& cfg);

/// Reduces the path count by one while deleting endpoints x and y, through
/// the staged plan: partition medium paths, extract forest expanders, steer
/// x and y into the first two, hop, steer into the third/fourth pair, and
/// close. On failure returns the original forest untouched with the stage
/// named in the report.
MergeReport merge_two_paths(const Graph& g, LinearForest& f, Vertex x,
                            Vertex y, const SolverConfig& cfg);

}  // namespace hamex

#endif
