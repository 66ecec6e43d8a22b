#ifndef HAMEX_LINKING_HPP
#define HAMEX_LINKING_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include "hamex/config.hpp"
#include "hamex/graph.hpp"
#include "hamex/sorting_network.hpp"

namespace hamex {

/// Comparator gadget: two rows of c dotted paths (length L each) whose
/// boundary vertices are joined by "full" edges forming one even cycle.
/// Straight routing keeps both rows horizontal; crossed routing swaps them
/// via the cycle's diagonals. Both routings are precomputed spanning
/// vertex-disjoint path pairs of equal length.
struct Gadget {
  std::size_t marked = 0;    // terminals + boundary vertices = 4c
  std::size_t path_len = 0;  // L, edges per dotted path
  std::size_t vertex_count = 0;
  Vertex a1 = kNoVertex, a2 = kNoVertex, b1 = kNoVertex, b2 = kNoVertex;
  std::vector<std::pair<Vertex, Vertex>> edges;
  /// pairings[0] = straight {a1->b1, a2->b2}; pairings[1] = crossed
  /// {a1->b2, a2->b1}; each entry a full vertex sequence.
  std::array<std::array<std::vector<Vertex>, 2>, 2> pairings;
  /// {a1,a2}-anchored construction sequence covering every edge once.
  std::vector<std::vector<Vertex>> build_sequence;

  /// Edges per terminal-to-terminal traversal: c*L + c - 1.
  std::size_t traversal_len() const;
};

/// Requires marked >= 8 with marked/4 even (this realization's crossed
/// routing needs an even dotted-segment count per row); path_len >= 1.
Gadget build_gadget(std::size_t marked, std::size_t path_len);

/// Blueprint of an (A,B)-linking structure: a Batcher network whose
/// comparators are gadgets and whose idle wires are matched-length
/// pass-through paths. Vertices are blueprint-local 0..|V|-1; `image`
/// (filled by embedding) maps them into a host graph.
struct LinkingStructure {
  Graph graph;  // blueprint-local
  std::vector<Vertex> a_side;
  std::vector<Vertex> b_side;
  SortingNetwork network;
  Gadget proto;

  // nodes[k][p]: wire p's vertex at layer boundary k (0..depth).
  std::vector<std::vector<Vertex>> nodes;
  struct GadgetInstance {
    std::size_t layer;  // 1-based boundary index the gadget feeds into
    std::size_t lo, hi;
    std::vector<Vertex> map;  // gadget-local id -> blueprint vertex
  };
  std::vector<GadgetInstance> gadgets;  // grouped by layer, network order
  struct PassThrough {
    std::size_t layer;
    std::size_t wire;
    std::vector<Vertex> path;  // full sequence incl. both boundary nodes
  };
  std::vector<PassThrough> passes;

  /// (A u B)-anchored construction certificate; union of the paths' edges
  /// is exactly E(H), internal vertices fresh at their step.
  std::vector<std::vector<Vertex>> certificate;

  std::vector<Vertex> image;  // empty until embedded; else blueprint->host

  std::size_t width() const { return a_side.size(); }
};

LinkingStructure build_linking_blueprint(std::size_t n_wires,
                                         const SolverConfig& cfg);

/// Replays the certificate: anchors = A u B; every path must have fresh
/// internals, each endpoint fresh or existing, at least one existing; the
/// accumulated edges must equal E(H) exactly.
bool validate_certificate(const LinkingStructure& ls);

/// Vertex-disjoint equal-length paths covering V(H), path i joining
/// a_side[i] to b_side[phi[i]] (blueprint-local ids; map through `image`
/// for embedded structures).
std::vector<std::vector<Vertex>> link(const LinkingStructure& ls,
                                      const std::vector<std::size_t>& phi);

/// Graph-core JSON plus a metadata block (A, B, certificate).
void save_linking(std::ostream& out, const LinkingStructure& ls);

}  // namespace hamex

#endif
