#include "hamex/rotation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace hamex {

RotationStep rotate1(const Graph& g, LinearForest& f, Vertex x, Vertex z,
                     Vertex y) {
  if (x >= f.vertex_count() || z >= f.vertex_count() || y >= f.vertex_count()) {
    throw InvalidInput("rotate1: vertex out of range");
  }
  if (!f.is_endpoint(x)) throw InvalidInput("rotate1: x is not an endpoint");
  if (!g.has_edge(x, z)) throw InvalidInput("rotate1: (x,z) is not a graph edge");

  RotationStep step;
  step.from = x;
  step.pivot = z;
  step.to = y;

  if (y == z) {
    if (!f.is_isolated(z)) {
      throw InvalidInput("rotate1: y == z requires an isolated pivot");
    }
    f.add_edge(x, z);
    return step;
  }

  if (!f.has_forest_edge(z, y)) {
    throw InvalidInput("rotate1: (z,y) is not a forest edge");
  }
  if (f.path_of(z) == f.path_of(x)) {
    // Same-path rotation: y must be the neighbour of z on x's side, or
    // the move would close a cycle.
    std::size_t dz = f.forest_distance(x, z);
    std::size_t dy = f.forest_distance(x, y);
    if (dy + 1 != dz) {
      throw InvalidInput("rotate1: pivot neighbour on the far side");
    }
  }
  f.remove_edge(z, y);
  f.add_edge(x, z);
  step.broke_edge = true;
  step.broken_a = z;
  step.broken_b = y;
  return step;
}

void replay(const Graph& g, LinearForest& f, const RotationRecord& rec) {
  for (const RotationStep& s : rec.steps) {
    RotationStep done = rotate1(g, f, s.from, s.pivot, s.to);
    if (done.broke_edge != s.broke_edge ||
        (s.broke_edge && (done.broken_a != s.broken_a ||
                          done.broken_b != s.broken_b))) {
      throw InvalidInput("replay: step diverged from record");
    }
  }
}

void undo(LinearForest& f, const RotationRecord& rec) {
  for (auto it = rec.steps.rbegin(); it != rec.steps.rend(); ++it) {
    f.remove_edge(it->from, it->pivot);
    if (it->broke_edge) f.add_edge(it->broken_a, it->broken_b);
  }
}

namespace {

// Vertices at forest distance <= 2 from v (v's path only, at most five).
void ball2_into(const LinearForest& f, Vertex v, VertexSet& out) {
  out.insert(v);
  for (Vertex a : f.neighbors(v)) {
    if (a == kNoVertex) continue;
    out.insert(a);
    for (Vertex b : f.neighbors(a)) {
      if (b != kNoVertex) out.insert(b);
    }
  }
}

bool edge_is_protected(const std::vector<std::pair<Vertex, Vertex>>* prot,
                       Vertex a, Vertex b) {
  if (!prot) return false;
  for (auto [p, q] : *prot) {
    if ((p == a && q == b) || (p == b && q == a)) return true;
  }
  return false;
}

}  // namespace

std::vector<ReachEntry> endpoint_reach(const Graph& g, const LinearForest& f,
                                       Vertex v, const VertexSet& u,
                                       const ReachOptions& opts) {
  if (!f.is_endpoint(v)) throw InvalidInput("endpoint_reach: v not an endpoint");
  const std::size_t n = f.vertex_count();
  VertexSet int_u = interior(f, u);
  const std::size_t node_cap = opts.node_cap ? opts.node_cap : 100000;

  // Original-forest coordinates (path id + position) for the distance-based
  // pivot exclusion; distance across paths is infinite.
  std::vector<std::uint32_t> opath(n, ~0u), opos(n, 0);
  {
    std::uint32_t pid = 0;
    std::vector<char> vis(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (vis[s] || !f.is_endpoint(s)) continue;
      Vertex prev = kNoVertex, at = s;
      std::uint32_t idx = 0;
      while (at != kNoVertex) {
        vis[at] = 1;
        opath[at] = pid;
        opos[at] = idx++;
        Vertex nxt = kNoVertex;
        for (Vertex nb : f.neighbors(at)) {
          if (nb != kNoVertex && nb != prev) nxt = nb;
        }
        prev = at;
        at = nxt;
      }
      ++pid;
    }
  }
  auto near2 = [&](Vertex a, Vertex b) {
    return opath[a] == opath[b] &&
           (opos[a] > opos[b] ? opos[a] - opos[b] : opos[b] - opos[a]) <= 2;
  };
  // z excluded iff within original distance 2 of v or any earlier pivot.
  auto excluded = [&](Vertex z, const RotationRecord& rec) {
    if (near2(z, v)) return true;
    for (const RotationStep& s : rec.steps) {
      if (near2(z, s.pivot)) return true;
    }
    return false;
  };

  struct Node {
    RotationRecord rec;
  };

  std::vector<ReachEntry> out;
  VertexSet seen(n);
  seen.insert(v);
  out.push_back({v, RotationRecord{v, v, {}}});

  Node root;
  root.rec = {v, v, {}};

  std::deque<Node> frontier;
  frontier.push_back(std::move(root));
  LinearForest scratch = f;
  std::size_t expanded = 0;

  auto done = [&] {
    return (opts.target_size > 0 && out.size() >= opts.target_size) ||
           expanded >= node_cap;
  };

  while (!frontier.empty() && !done()) {
    if (opts.max_order > 0 && frontier.front().rec.order() >= opts.max_order) {
      break;
    }
    std::deque<Node> next;
    for (Node& node : frontier) {
      if (done()) break;
      ++expanded;
      replay(g, scratch, node.rec);
      Vertex e = node.rec.final_endpoint;

      // Index of every vertex on e's current path, for the same-path
      // closer-neighbour test.
      std::vector<Vertex> seq = scratch.path_vertices(e);
      if (seq.front() != e) std::reverse(seq.begin(), seq.end());
      std::unordered_map<Vertex, std::size_t> pos;
      pos.reserve(seq.size());
      for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;

      for (Vertex z : g.neighbors(e)) {
        if (done()) break;
        if (!int_u.contains(z) || excluded(z, node.rec)) continue;
        // Pivots must sit in untouched original forest: same neighbourhood
        // now as at the start (slot order is not significant).
        {
          auto a = scratch.neighbors(z);
          auto b = f.neighbors(z);
          if (a[0] > a[1]) std::swap(a[0], a[1]);
          if (b[0] > b[1]) std::swap(b[0], b[1]);
          if (a != b) continue;
        }

        std::array<Vertex, 3> cands{kNoVertex, kNoVertex, kNoVertex};
        if (scratch.is_isolated(z)) {
          cands[0] = z;
        } else if (auto it = pos.find(z); it != pos.end()) {
          // Same path as e: only the neighbour nearer e is legal.
          for (Vertex nb : scratch.neighbors(z)) {
            if (nb != kNoVertex && pos.at(nb) + 1 == it->second) cands[0] = nb;
          }
        } else {
          cands[0] = scratch.neighbors(z)[0];
          cands[1] = scratch.neighbors(z)[1];
        }
        std::sort(cands.begin(), cands.end());

        for (Vertex y : cands) {
          if (y == kNoVertex || y == e) continue;
          if (y != z && edge_is_protected(opts.protected_edges, z, y)) continue;

          Node child;
          child.rec = node.rec;
          RotationStep s;
          s.from = e;
          s.pivot = z;
          s.to = y;
          if (y != z) {
            s.broke_edge = true;
            s.broken_a = z;
            s.broken_b = y;
          }
          child.rec.steps.push_back(s);
          child.rec.final_endpoint = y;

          // An already-seen endpoint keeps its first (shortest) record, but
          // the chain is still explored: its forest state differs, so it can
          // expose endpoints no earlier chain reaches.
          if (!seen.contains(y)) {
            seen.insert(y);
            out.push_back({y, child.rec});
          }
          next.push_back(std::move(child));
          if (done()) break;
        }
      }
      undo(scratch, node.rec);
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::string> endpoint_change_audit(const Graph& g,
                                               const LinearForest& before,
                                               const RotationRecord& rec) {
  std::vector<std::string> bad;
  LinearForest after = before;
  try {
    replay(g, after, rec);
  } catch (const InvalidInput& e) {
    bad.push_back(std::string("replay failed: ") + e.what());
    return bad;
  }
  if (!after.validate(g)) bad.push_back("post-forest invalid");

  for (const RotationStep& s : rec.steps) {
    if (s.broke_edge && !before.has_forest_edge(s.broken_a, s.broken_b)) {
      bad.push_back("broken edge not in the original forest");
      break;
    }
  }

  // Endpoint bookkeeping: End' == (End u {final}) \ {start}.
  if (rec.final_endpoint != rec.start || !rec.steps.empty()) {
    std::vector<Vertex> expect = before.end_vertices();
    expect.push_back(rec.final_endpoint);
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    expect.erase(std::remove(expect.begin(), expect.end(), rec.start),
                 expect.end());
    if (after.end_vertices() != expect) bad.push_back("endpoint set mismatch");
  } else if (after.end_vertices() != before.end_vertices()) {
    bad.push_back("empty record changed the endpoint set");
  }

  // New isolated vertices can only be the final endpoint.
  for (Vertex w = 0; w < after.vertex_count(); ++w) {
    if (after.is_isolated(w) && !before.is_isolated(w) &&
        w != rec.final_endpoint) {
      bad.push_back("unexpected isolated vertex");
      break;
    }
  }

  // Edge symmetric difference bounded by twice the rotation order.
  auto eb = before.edges();
  auto ea = after.edges();
  std::sort(eb.begin(), eb.end());
  std::sort(ea.begin(), ea.end());
  std::vector<std::pair<Vertex, Vertex>> diff;
  std::set_symmetric_difference(eb.begin(), eb.end(), ea.begin(), ea.end(),
                                std::back_inserter(diff));
  if (diff.size() > 2 * rec.order()) bad.push_back("edge difference too large");

  undo(after, rec);
  if (!(after == before)) bad.push_back("undo did not restore the forest");
  return bad;
}

}  // namespace hamex
