#ifndef HAMEX_FOREST_HPP
#define HAMEX_FOREST_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "hamex/graph.hpp"

namespace hamex {

/// Spanning union of vertex-disjoint paths over 0..n-1. Isolated vertices
/// are paths of one vertex and count as endpoints. Mutations keep the
/// per-path registry consistent; structural validity can always be
/// re-checked with validate().
class LinearForest {
 public:
  using PathId = std::uint32_t;

  LinearForest() = default;

  /// n singleton paths.
  static LinearForest singletons(std::size_t n);

  /// Builds from explicit vertex sequences; every vertex 0..n-1 must
  /// appear exactly once across the paths.
  static LinearForest from_paths(std::size_t n,
                                 const std::vector<std::vector<Vertex>>& paths);

  std::size_t vertex_count() const { return nbr_.size(); }
  std::size_t path_count() const { return live_paths_; }
  std::size_t edge_total() const { return vertex_count() - live_paths_; }

  std::size_t degree(Vertex v) const {
    return (nbr_[v][0] != kNoVertex) + (nbr_[v][1] != kNoVertex);
  }
  const std::array<Vertex, 2>& neighbors(Vertex v) const { return nbr_[v]; }
  bool has_forest_edge(Vertex u, Vertex v) const {
    return nbr_[u][0] == v || nbr_[u][1] == v;
  }

  bool is_endpoint(Vertex v) const { return degree(v) <= 1; }
  bool is_isolated(Vertex v) const { return degree(v) == 0; }
  bool has_isolated_vertex() const;

  /// All endpoints, ascending.
  std::vector<Vertex> end_vertices() const;
  std::size_t end_count() const;

  PathId path_of(Vertex v) const { return path_id_[v]; }
  /// Length in vertices of the path containing v (O(1), seg lookup).
  std::size_t path_length(Vertex v) const { return paths_[path_id_[v]].length; }
  std::pair<Vertex, Vertex> path_ends(PathId id) const {
    return {paths_[id].end_a, paths_[id].end_b};
  }
  std::size_t path_length_of_id(PathId id) const { return paths_[id].length; }

  /// Vertex sequence of the path containing v, from one end to the other.
  std::vector<Vertex> path_vertices(Vertex v) const;
  /// Live path ids, ascending.
  std::vector<PathId> path_ids() const;

  /// Path lengths (in vertices), descending.
  std::vector<std::size_t> lengths_desc() const;

  /// Joins two distinct paths at endpoints u and v.
  /// Throws InvalidInput if either has degree 2 or both lie on one path.
  void add_edge(Vertex u, Vertex v);

  /// Removes a forest edge, splitting its path.
  void remove_edge(Vertex u, Vertex v);

  /// Forest distance between u and v, or SIZE_MAX when on different paths.
  std::size_t forest_distance(Vertex u, Vertex v) const;

  /// Full structural validation: degrees, symmetry, acyclicity, registry.
  bool validate() const;
  /// Additionally checks every forest edge exists in g.
  bool validate(const Graph& g) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const LinearForest& other) const;

 private:
  struct PathInfo {
    Vertex end_a = kNoVertex;
    Vertex end_b = kNoVertex;
    std::uint32_t length = 0;  // vertices; 0 marks a dead registry slot
  };

  void relabel_path(Vertex start, Vertex forbid, PathId id);
  PathId fresh_path_id();

  std::vector<std::array<Vertex, 2>> nbr_;
  std::vector<PathId> path_id_;
  std::vector<PathInfo> paths_;
  std::vector<PathId> free_ids_;
  std::size_t live_paths_ = 0;
};

/// int_F(U): members of u all of whose forest-neighbors lie in u.
VertexSet interior(const LinearForest& f, const VertexSet& u);

/// Forest order: fewer paths first, then decreasing length vector
/// lexicographically.
std::strong_ordering lex_compare(const LinearForest& f1,
                                 const LinearForest& f2);

/// JSON list of vertex-id paths.
void save_forest(std::ostream& out, const LinearForest& f);
LinearForest load_forest(std::istream& in, std::size_t n);

}  // namespace hamex

#endif
