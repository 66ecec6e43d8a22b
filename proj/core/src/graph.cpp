#include "hamex/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace hamex {

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & ~other.blocks_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] & other.blocks_[i]) return true;
  }
  return false;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    std::uint64_t word = blocks_[b];
    while (word) {
      int bit = std::countr_zero(word);
      out.push_back(static_cast<Vertex>(b * 64 + bit));
      word &= word - 1;
    }
  }
  return out;
}

Graph::Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges)
    : adj_(n) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidInput("duplicate edge");
  }
  for (auto [u, v] : edges) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  m_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_regular() const {
  if (adj_.empty()) return true;
  std::size_t d = adj_[0].size();
  return std::all_of(adj_.begin(), adj_.end(),
                     [d](const auto& nbrs) { return nbrs.size() == d; });
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, nbrs.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t d = adj_[0].size();
  for (const auto& nbrs : adj_) d = std::min(d, nbrs.size());
  return d;
}

VertexSet outer_neighborhood(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count()) {
    throw InvalidInput("vertex set universe does not match graph");
  }
  VertexSet out(g.vertex_count());
  for (Vertex v : x.members()) {
    for (Vertex w : g.neighbors(v)) {
      if (!x.contains(w)) out.insert(w);
    }
  }
  return out;
}

bool has_edge_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) throw InvalidInput("sets must be disjoint");
  return find_edge_between(g, x, y).first != kNoVertex;
}

std::pair<Vertex, Vertex> find_edge_between(const Graph& g, const VertexSet& x,
                                            const VertexSet& y) {
  // Scan from the smaller side.
  const VertexSet& a = x.size() <= y.size() ? x : y;
  const VertexSet& b = x.size() <= y.size() ? y : x;
  for (Vertex u : a.members()) {
    for (Vertex w : g.neighbors(u)) {
      if (b.contains(w)) {
        return (&a == &x) ? std::make_pair(u, w) : std::make_pair(w, u);
      }
    }
  }
  return {kNoVertex, kNoVertex};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.vertex_count()) {
    throw InvalidInput("vertex set universe does not match graph");
  }
  InducedSubgraph sub;
  sub.to_host = keep.members();
  sub.to_local.assign(g.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
    sub.to_local[sub.to_host[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : sub.to_host) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && keep.contains(w)) {
        edges.emplace_back(sub.to_local[u], sub.to_local[w]);
      }
    }
  }
  sub.graph = Graph(sub.to_host.size(), std::move(edges));
  return sub;
}

namespace {

Graph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    if (n < 0) {
      if (!(ss >> n >> m) || n < 0 || m < 0) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
          n = -1;  // blank leading line
          continue;
        }
        throw InvalidInput("line " + std::to_string(lineno) +
                           ": expected header \"n m\"");
      }
      continue;
    }
    long long u, v;
    if (!(ss >> u)) continue;  // blank line
    if (!(ss >> v) || u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("line " + std::to_string(lineno) + ": bad edge");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw InvalidInput("empty input");
  if (static_cast<long long>(edges.size()) != m) {
    throw InvalidInput("edge count mismatch: header says " + std::to_string(m) +
                       ", found " + std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("invalid edge list: ") + e.what());
  }
}

Graph load_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("json parse failure: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) {
    throw InvalidInput("json graph needs \"n\" and \"edges\"");
  }
  std::size_t n = j["n"].get<std::size_t>();
  std::vector<std::pair<long long, long long>> raw;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("bad json edge");
    raw.emplace_back(e[0].get<long long>(), e[1].get<long long>());
  }
  // Arbitrary non-negative ids are relabelled densely in ascending order.
  bool dense = true;
  for (auto [u, v] : raw) {
    if (u < 0 || v < 0) throw InvalidInput("negative vertex id");
    if (u >= static_cast<long long>(n) || v >= static_cast<long long>(n)) {
      dense = false;
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (dense) {
    for (auto [u, v] : raw) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  } else {
    std::map<long long, Vertex> remap;
    for (auto [u, v] : raw) {
      remap.emplace(u, 0);
      remap.emplace(v, 0);
    }
    if (remap.size() > n) throw InvalidInput("more vertex ids than n");
    Vertex next = 0;
    for (auto& [id, lab] : remap) lab = next++;
    for (auto [u, v] : raw) edges.emplace_back(remap[u], remap[v]);
  }
  return Graph(n, std::move(edges));
}

}  // namespace

Graph load_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::EdgeList ? load_edge_list(in) : load_json(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  GraphFormat fmt = path.size() > 5 && path.substr(path.size() - 5) == ".json"
                        ? GraphFormat::Json
                        : GraphFormat::EdgeList;
  return load_graph(in, fmt);
}

void save_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  auto edges = g.edges();
  if (format == GraphFormat::EdgeList) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  } else {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto& je = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : edges) je.push_back({u, v});
    out << j.dump() << '\n';
  }
}

}  // namespace hamex
