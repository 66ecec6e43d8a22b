#include "hamex/forest.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace hamex {

LinearForest LinearForest::singletons(std::size_t n) {
  LinearForest f;
  f.nbr_.assign(n, {kNoVertex, kNoVertex});
  f.path_id_.resize(n);
  f.paths_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    f.path_id_[v] = v;
    f.paths_[v] = {v, v, 1};
  }
  f.live_paths_ = n;
  return f;
}

LinearForest LinearForest::from_paths(
    std::size_t n, const std::vector<std::vector<Vertex>>& paths) {
  LinearForest f = singletons(n);
  std::vector<bool> seen(n, false);
  for (const auto& p : paths) {
    for (Vertex v : p) {
      if (v >= n || seen[v]) throw InvalidInput("bad path cover");
      seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) f.add_edge(p[i], p[i + 1]);
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw InvalidInput("paths must cover all vertices");
  }
  return f;
}

bool LinearForest::has_isolated_vertex() const {
  for (const auto& p : paths_) {
    if (p.length == 1) return true;
  }
  return false;
}

std::vector<Vertex> LinearForest::end_vertices() const {
  std::vector<Vertex> out;
  for (const auto& p : paths_) {
    if (p.length == 0) continue;
    out.push_back(p.end_a);
    if (p.end_b != p.end_a) out.push_back(p.end_b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t LinearForest::end_count() const {
  std::size_t c = 0;
  for (const auto& p : paths_) {
    if (p.length == 0) continue;
    c += p.length == 1 ? 1 : 2;
  }
  return c;
}

std::vector<Vertex> LinearForest::path_vertices(Vertex v) const {
  const PathInfo& info = paths_[path_id_[v]];
  std::vector<Vertex> out;
  out.reserve(info.length);
  Vertex prev = kNoVertex, cur = info.end_a;
  while (cur != kNoVertex) {
    out.push_back(cur);
    Vertex next = nbr_[cur][0] != prev ? nbr_[cur][0] : nbr_[cur][1];
    prev = cur;
    cur = next;
  }
  return out;
}

std::vector<LinearForest::PathId> LinearForest::path_ids() const {
  std::vector<PathId> out;
  for (PathId id = 0; id < paths_.size(); ++id) {
    if (paths_[id].length > 0) out.push_back(id);
  }
  return out;
}

std::vector<std::size_t> LinearForest::lengths_desc() const {
  std::vector<std::size_t> out;
  for (const auto& p : paths_) {
    if (p.length > 0) out.push_back(p.length);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

LinearForest::PathId LinearForest::fresh_path_id() {
  if (!free_ids_.empty()) {
    PathId id = free_ids_.back();
    free_ids_.pop_back();
    return id;
  }
  paths_.push_back({});
  return static_cast<PathId>(paths_.size() - 1);
}

void LinearForest::relabel_path(Vertex start, Vertex forbid, PathId id) {
  Vertex prev = forbid, cur = start;
  while (cur != kNoVertex) {
    path_id_[cur] = id;
    Vertex next = nbr_[cur][0] != prev ? nbr_[cur][0] : nbr_[cur][1];
    prev = cur;
    cur = next;
  }
}

void LinearForest::add_edge(Vertex u, Vertex v) {
  if (u == v || u >= nbr_.size() || v >= nbr_.size()) {
    throw InvalidInput("bad add_edge endpoints");
  }
  if (degree(u) > 1 || degree(v) > 1) {
    throw InvalidInput("add_edge endpoint has degree 2");
  }
  PathId pu = path_id_[u], pv = path_id_[v];
  if (pu == pv) throw InvalidInput("add_edge would close a cycle");
  PathInfo& iu = paths_[pu];
  PathInfo& iv = paths_[pv];
  // Keep the longer path's id; relabel the shorter.
  if (iu.length < iv.length) {
    relabel_path(u, kNoVertex, pv);
  } else {
    relabel_path(v, kNoVertex, pu);
  }
  nbr_[u][nbr_[u][0] == kNoVertex ? 0 : 1] = v;
  nbr_[v][nbr_[v][0] == kNoVertex ? 0 : 1] = u;
  PathId keep = iu.length < iv.length ? pv : pu;
  PathId drop = keep == pu ? pv : pu;
  Vertex far_u = iu.end_a == u ? iu.end_b : iu.end_a;
  Vertex far_v = iv.end_a == v ? iv.end_b : iv.end_a;
  paths_[keep] = {far_u, far_v, iu.length + iv.length};
  paths_[drop] = {};
  free_ids_.push_back(drop);
  --live_paths_;
}

void LinearForest::remove_edge(Vertex u, Vertex v) {
  if (!has_forest_edge(u, v)) throw InvalidInput("not a forest edge");
  PathId id = path_id_[u];
  PathInfo info = paths_[id];
  if (nbr_[u][0] == v) nbr_[u][0] = nbr_[u][1];
  nbr_[u][1] = kNoVertex;
  if (nbr_[v][0] == u) nbr_[v][0] = nbr_[v][1];
  nbr_[v][1] = kNoVertex;
  // Side containing u keeps the old id; walk it to size and relabel the
  // smaller side under a fresh id.
  std::size_t side_u = 1;
  for (Vertex prev = u, cur = nbr_[u][0]; cur != kNoVertex; ++side_u) {
    Vertex next = nbr_[cur][0] != prev ? nbr_[cur][0] : nbr_[cur][1];
    prev = cur;
    cur = next;
  }
  std::size_t side_v = info.length - side_u;
  PathId fresh = fresh_path_id();
  // u's side endpoint set: u plus whichever original end lies on u's side.
  bool end_a_with_u;
  {
    // Walk from u outward; if we hit info.end_a it is on u's side.
    end_a_with_u = false;
    Vertex prev = v, cur = u;
    while (cur != kNoVertex) {
      if (cur == info.end_a) { end_a_with_u = true; break; }
      Vertex next = nbr_[cur][0] != prev ? nbr_[cur][0] : nbr_[cur][1];
      prev = cur;
      cur = next;
    }
  }
  Vertex u_far = end_a_with_u ? info.end_a : info.end_b;
  Vertex v_far = end_a_with_u ? info.end_b : info.end_a;
  if (side_u == 1) u_far = u;
  if (side_v == 1) v_far = v;
  relabel_path(v, kNoVertex, fresh);
  paths_[id] = {u, u_far, static_cast<std::uint32_t>(side_u)};
  paths_[fresh] = {v, v_far, static_cast<std::uint32_t>(side_v)};
  ++live_paths_;
}

std::size_t LinearForest::forest_distance(Vertex u, Vertex v) const {
  if (u == v) return 0;
  if (path_id_[u] != path_id_[v]) return static_cast<std::size_t>(-1);
  for (Vertex start : nbr_[u]) {
    if (start == kNoVertex) continue;
    std::size_t dist = 1;
    Vertex prev = u, cur = start;
    while (cur != kNoVertex) {
      if (cur == v) return dist;
      Vertex next = nbr_[cur][0] != prev ? nbr_[cur][0] : nbr_[cur][1];
      prev = cur;
      cur = next;
      ++dist;
    }
  }
  return static_cast<std::size_t>(-1);
}

bool LinearForest::validate() const {
  std::size_t n = nbr_.size();
  std::vector<bool> seen(n, false);
  std::size_t counted_paths = 0, counted_vertices = 0;
  for (PathId id = 0; id < paths_.size(); ++id) {
    const PathInfo& p = paths_[id];
    if (p.length == 0) continue;
    ++counted_paths;
    // Walk from end_a; it must be a simple path ending at end_b with the
    // registered length, all vertices labelled with this id.
    if (p.end_a >= n || p.end_b >= n) return false;
    if (degree(p.end_a) > 1 || degree(p.end_b) > 1) return false;
    Vertex prev = kNoVertex, cur = p.end_a;
    std::size_t len = 0;
    while (cur != kNoVertex) {
      if (seen[cur]) return false;  // cycle or shared vertex
      seen[cur] = true;
      if (path_id_[cur] != id) return false;
      ++len;
      Vertex next = nbr_[cur][0] != prev ? nbr_[cur][0] : nbr_[cur][1];
      if (next == kNoVertex && cur != p.end_b && len == p.length) return false;
      prev = cur;
      cur = next;
    }
    if (len != p.length || prev != p.end_b) return false;
    counted_vertices += len;
  }
  if (counted_paths != live_paths_ || counted_vertices != n) return false;
  // Slot symmetry.
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : nbr_[v]) {
      if (w == kNoVertex) continue;
      if (w >= n || !has_forest_edge(w, v)) return false;
    }
    if (nbr_[v][0] == kNoVertex && nbr_[v][1] != kNoVertex) return false;
    if (nbr_[v][0] != kNoVertex && nbr_[v][0] == nbr_[v][1]) return false;
  }
  return true;
}

bool LinearForest::validate(const Graph& g) const {
  if (!validate()) return false;
  for (Vertex v = 0; v < nbr_.size(); ++v) {
    for (Vertex w : nbr_[v]) {
      if (w != kNoVertex && !g.has_edge(v, w)) return false;
    }
  }
  return true;
}

std::vector<std::pair<Vertex, Vertex>> LinearForest::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < nbr_.size(); ++v) {
    for (Vertex w : nbr_[v]) {
      if (w != kNoVertex && v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

bool LinearForest::operator==(const LinearForest& other) const {
  if (nbr_.size() != other.nbr_.size()) return false;
  for (Vertex v = 0; v < nbr_.size(); ++v) {
    auto a = nbr_[v];
    auto b = other.nbr_[v];
    if (a[0] > a[1]) std::swap(a[0], a[1]);
    if (b[0] > b[1]) std::swap(b[0], b[1]);
    if (a != b) return false;
  }
  return true;
}

VertexSet interior(const LinearForest& f, const VertexSet& u) {
  VertexSet out(f.vertex_count());
  for (Vertex v : u.members()) {
    bool all_in = true;
    for (Vertex w : f.neighbors(v)) {
      if (w != kNoVertex && !u.contains(w)) { all_in = false; break; }
    }
    if (all_in) out.insert(v);
  }
  return out;
}

std::strong_ordering lex_compare(const LinearForest& f1,
                                 const LinearForest& f2) {
  if (f1.path_count() != f2.path_count()) {
    return f1.path_count() <=> f2.path_count();
  }
  return f1.lengths_desc() <=> f2.lengths_desc();
}

void save_forest(std::ostream& out, const LinearForest& f) {
  nlohmann::json j = nlohmann::json::array();
  // Deterministic order: paths sorted by first vertex.
  std::vector<std::vector<Vertex>> paths;
  for (auto id : f.path_ids()) {
    auto seq = f.path_vertices(f.path_ends(id).first);
    if (seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
    paths.push_back(std::move(seq));
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) j.push_back(p);
  out << j.dump() << '\n';
}

LinearForest load_forest(std::istream& in, std::size_t n) {
  nlohmann::json j;
  in >> j;
  std::vector<std::vector<Vertex>> paths;
  for (const auto& p : j) paths.push_back(p.get<std::vector<Vertex>>());
  return LinearForest::from_paths(n, paths);
}

}  // namespace hamex
