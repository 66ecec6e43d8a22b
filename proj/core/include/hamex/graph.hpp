#ifndef HAMEX_GRAPH_HPP
#define HAMEX_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamex {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed-universe vertex set with bitset semantics over 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), blocks_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const {
    return (blocks_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v) {
    std::uint64_t bit = 1ull << (v & 63);
    if (!(blocks_[v >> 6] & bit)) {
      blocks_[v >> 6] |= bit;
      ++count_;
    }
  }
  void erase(Vertex v) {
    std::uint64_t bit = 1ull << (v & 63);
    if (blocks_[v >> 6] & bit) {
      blocks_[v >> 6] &= ~bit;
      --count_;
    }
  }
  void clear() {
    std::fill(blocks_.begin(), blocks_.end(), 0);
    count_ = 0;
  }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  static VertexSet of(std::size_t n, std::initializer_list<Vertex> vs) {
    VertexSet s(n);
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  static VertexSet of(std::size_t n, const std::vector<Vertex>& vs) {
    VertexSet s(n);
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  static VertexSet full(std::size_t n) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  bool operator==(const VertexSet& other) const {
    return n_ == other.n_ && blocks_ == other.blocks_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> blocks_;
};

/// Immutable simple undirected graph. Vertex ids are dense 0..n-1 and
/// neighbor lists are sorted at construction, so iteration order is
/// deterministic everywhere downstream.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on self-loops, duplicate edges or out-of-range ids.
  Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return m_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const;

  /// Sorted list of all edges (u < v).
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_regular() const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// N_G(X) = Gamma(X) \ X.
VertexSet outer_neighborhood(const Graph& g, const VertexSet& x);

/// True iff some graph edge has one end in x and the other in y.
/// Throws InvalidInput unless x and y are disjoint.
bool has_edge_between(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Finds one crossing edge, or (kNoVertex, kNoVertex) when there is none.
std::pair<Vertex, Vertex> find_edge_between(const Graph& g, const VertexSet& x,
                                            const VertexSet& y);

/// G[keep] with vertices relabelled densely in ascending host-id order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;   // local id -> host id
  std::vector<Vertex> to_local;  // host id -> local id, kNoVertex outside
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

enum class GraphFormat { EdgeList, Json };

/// Edge-list format: first line "n m", then m lines "u v"; '#' comments.
/// JSON format: {"n":..., "edges":[[u,v],...]}. Input ids may be arbitrary
/// non-negative integers; they are relabelled densely, preserving order.
Graph load_graph(std::istream& in, GraphFormat format);
Graph load_graph_file(const std::string& path);
void save_graph(std::ostream& out, const Graph& g, GraphFormat format);

}  // namespace hamex

#endif
