#ifndef HAMEX_EXTENDABILITY_HPP
#define HAMEX_EXTENDABILITY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamex/config.hpp"
#include "hamex/expansion.hpp"
#include "hamex/forest.hpp"
#include "hamex/graph.hpp"
#include "hamex/linking.hpp"

namespace hamex {

/// A subgraph H embedded in a host expander, tracked together with the
/// (D, m)-extendability bookkeeping: every small vertex set must keep
/// enough neighbours outside V(H) to admit further path additions.
struct ExtendableEmbedding {
  const Graph* host = nullptr;
  std::size_t D = 0;
  std::size_t m = 0;
  VertexSet image;  // V(H)
  std::vector<std::pair<Vertex, Vertex>> h_edges;
  std::vector<std::uint32_t> h_degree;  // indexed by host vertex

  static ExtendableEmbedding empty(const Graph& g, std::size_t D,
                                   std::size_t m);

  /// Adds a (possibly isolated) vertex to V(H).
  void add_vertex(Vertex v);
  /// Adds a host edge to H, inserting endpoints into V(H); enforces
  /// Δ(H) <= D.
  void add_edge(Vertex a, Vertex b);
  /// Host neighbours of v outside V(H).
  std::size_t free_degree(Vertex v) const;
};

/// Checks |Γ_G(S) \ V(H)| >= (D-1)|S| - Σ_{u in S∩V(H)} (d_H(u)-1) for
/// vertex sets S with 1 <= |S| <= 2m: exhaustively for |S| <= s_max while
/// the enumeration stays small (singletons always), by biased sampling
/// beyond. Refutations carry the witness S.
ExpansionVerdict deficiency_audit(const ExtendableEmbedding& emb,
                                  std::size_t s_max, std::size_t samples,
                                  std::uint64_t seed);

struct ExtendResult {
  bool success = false;
  std::vector<Vertex> path;  // full sequence including anchor(s)
  std::string failure;
};

/// Grows a path of exactly `ell` edges from embedded anchor y (to embedded
/// anchor x when given) whose internal vertices avoid V(H), by randomized
/// depth-first search biased toward high free-degree, re-auditing
/// extendability after each candidate and rolling the embedding back on
/// failure. Vertices in `avoid` are never used as internals. On success the
/// path has been committed into emb.
ExtendResult extend_path(ExtendableEmbedding& emb, Vertex y,
                         std::optional<Vertex> x, std::size_t ell,
                         const SolverConfig& cfg, std::uint64_t seed,
                         const VertexSet* avoid = nullptr);

/// Embeds a blueprint linking structure into the host: first one long
/// extendable path containing the would-be A u B vertices as prescribed
/// segments, then every certificate path via extend_path. On success the
/// returned structure's `image` maps blueprint ids to host ids. Vertices in
/// `avoid` are left untouched.
struct EmbedResult {
  bool success = false;
  LinkingStructure structure;
  ExtendableEmbedding embedding;
  std::string failed_stage;
};
EmbedResult embed_constructible(const Graph& g, const LinkingStructure& bp,
                                const SolverConfig& cfg, std::uint64_t seed,
                                const VertexSet* avoid = nullptr);

/// Three-way host partition around an embedded linking structure.
struct Partition {
  bool success = false;
  std::string failed_stage;
  VertexSet x, y, z;            // disjoint cover of V(G)
  std::vector<Vertex> a, b;     // |a| = |b|, subsets of x
  LinearForest connectors;      // |a| equal-size paths, endpoints a_i, b_i
  LinkingStructure structure;   // embedded (image filled)
  ExpansionVerdict z_audit;     // G[Z] residual expansion (sampled)
  ExpansionVerdict zyab_audit;  // G[Z u Y u A u B] residual expansion
};

/// Embeds a linking structure of width cfg.linking_width(n), grows |A|
/// equal connector paths of cfg.connector_len edges joining a_i to b_i
/// through fresh vertices (Y), audits the residual expanders, and returns
/// the partition. If cfg carries protected edges, the first one is routed
/// through the middle of connector 0. Failures are reported, not thrown.
Partition partition_expander(const Graph& g, const SolverConfig& cfg,
                             std::uint64_t seed);

void save_partition(std::ostream& out, const Partition& p);

}  // namespace hamex

#endif
