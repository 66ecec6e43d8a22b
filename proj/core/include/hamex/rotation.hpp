#ifndef HAMEX_ROTATION_HPP
#define HAMEX_ROTATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hamex/forest.hpp"
#include "hamex/graph.hpp"

namespace hamex {

/// One elementary rotation step. The added edge (from, pivot) always comes
/// from the host graph; the broken edge is absent when the pivot was
/// isolated or the step only re-anchors an endpoint.
struct RotationStep {
  Vertex from = kNoVertex;   // endpoint the step rotates at
  Vertex pivot = kNoVertex;  // z: other end of the added graph edge
  Vertex to = kNoVertex;     // y: endpoint exposed by the step
  bool broke_edge = false;
  Vertex broken_a = kNoVertex;  // (pivot, to) when broke_edge
  Vertex broken_b = kNoVertex;
};

/// A chain of rotation steps from one starting endpoint. Replay applies the
/// steps to a forest; undo reverses them bit-exactly.
struct RotationRecord {
  Vertex start = kNoVertex;  // original endpoint v
  Vertex final_endpoint = kNoVertex;
  std::vector<RotationStep> steps;

  std::size_t order() const { return steps.size(); }
};

/// Applies one rotation at endpoint x using graph edge (x, z) and exposing
/// y. Legal y: a forest-neighbour of z, or z itself when z is isolated.
/// Returns the executed step. Throws InvalidInput on an illegal move.
RotationStep rotate1(const Graph& g, LinearForest& f, Vertex x, Vertex z,
                     Vertex y);

/// Applies every step of the record in order. Throws if any step is illegal
/// against the current forest.
void replay(const Graph& g, LinearForest& f, const RotationRecord& rec);

/// Reverses the record; f must be the exact post-replay forest.
void undo(LinearForest& f, const RotationRecord& rec);

/// One reachable endpoint with its witnessing rotation chain.
struct ReachEntry {
  Vertex endpoint = kNoVertex;
  RotationRecord record;
};

struct ReachOptions {
  std::size_t max_order = 0;    // 0 = unlimited depth
  std::size_t target_size = 0;  // stop once this many endpoints found (0 = none)
  std::size_t node_cap = 0;     // explored-chain budget (0 = 100000)
  // Forest edges that no rotation may break.
  const std::vector<std::pair<Vertex, Vertex>>* protected_edges = nullptr;
};

/// Endpoints reachable from v by rotations whose pivots lie in the interior
/// of u (taken in the ORIGINAL forest) and sit at original-forest distance
/// >= 3 from v and every earlier pivot. Canonical order: breadth-first by
/// rotation order, pivots and exposed endpoints explored in ascending vertex
/// id, first record per endpoint kept. Deterministic for fixed inputs.
std::vector<ReachEntry> endpoint_reach(const Graph& g, const LinearForest& f,
                                       Vertex v, const VertexSet& u,
                                       const ReachOptions& opts = {});

/// Independent re-check of a finished rotation chain against the pre- and
/// post-forests: structural validity, endpoint bookkeeping, bounded edge
/// difference, and exact undo. Returns a list of violated properties
/// (empty = clean).
std::vector<std::string> endpoint_change_audit(const Graph& g,
                                               const LinearForest& before,
                                               const RotationRecord& rec);

}  // namespace hamex

#endif
