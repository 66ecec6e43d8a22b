#include "hamex/linking.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "json.hpp"

namespace hamex {

namespace {

// Gadget-local vertex ids: the 2c top boundary/terminal vertices t_0..t_{2c-1}
// come first, then the bottom row u_0..u_{2c-1}, then the L-1 interior
// vertices of each dotted path (top row's c paths, then bottom row's).
struct Layout {
  std::size_t c;  // dotted paths per row
  std::size_t len;

  Vertex t(std::size_t k) const { return static_cast<Vertex>(k); }
  Vertex u(std::size_t k) const { return static_cast<Vertex>(2 * c + k); }
  Vertex interior(bool bottom, std::size_t i, std::size_t j) const {
    std::size_t base = 4 * c + (bottom ? c : 0) * (len - 1);
    return static_cast<Vertex>(base + i * (len - 1) + j);
  }

  // Dotted path i of a row as a vertex sequence, boundary to boundary.
  std::vector<Vertex> seg(bool bottom, std::size_t i) const {
    std::vector<Vertex> out;
    out.push_back(bottom ? u(2 * i) : t(2 * i));
    for (std::size_t j = 0; j + 1 < len; ++j) {
      out.push_back(interior(bottom, i, j));
    }
    out.push_back(bottom ? u(2 * i + 1) : t(2 * i + 1));
    return out;
  }
};

void append_tail(std::vector<Vertex>& path, const std::vector<Vertex>& piece) {
  if (path.empty()) {
    path = piece;
    return;
  }
  if (path.back() != piece.front()) {
    throw InvalidInput("linking: path pieces do not chain");
  }
  path.insert(path.end(), piece.begin() + 1, piece.end());
}

std::vector<Vertex> reversed(std::vector<Vertex> seq) {
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

std::size_t Gadget::traversal_len() const {
  const std::size_t c = marked / 4;
  return c * path_len + c - 1;
}

Gadget build_gadget(std::size_t marked, std::size_t path_len) {
  if (marked < 8 || marked % 8 != 0) {
    throw InvalidInput("gadget: marked count must be a positive multiple of 8");
  }
  if (path_len == 0) throw InvalidInput("gadget: path length must be positive");
  const std::size_t c = marked / 4;
  const std::size_t L = path_len;
  Layout ly{c, L};

  Gadget gd;
  gd.marked = marked;
  gd.path_len = L;
  gd.vertex_count = 2 * c * (L + 1);
  gd.a1 = ly.t(0);
  gd.b1 = ly.t(2 * c - 1);
  gd.a2 = ly.u(0);
  gd.b2 = ly.u(2 * c - 1);

  // Boundary aliases between consecutive dotted paths, j = 0..c-2: the top
  // row exposes a_j = t_{2j+1} and b_j = t_{2j+2}, the bottom row c_j and
  // d_j likewise.
  auto A = [&](std::size_t j) { return ly.t(2 * j + 1); };
  auto B = [&](std::size_t j) { return ly.t(2 * j + 2); };
  auto C = [&](std::size_t j) { return ly.u(2 * j + 1); };
  auto D = [&](std::size_t j) { return ly.u(2 * j + 2); };

  // Dotted edges.
  for (std::size_t i = 0; i < c; ++i) {
    for (bool bottom : {false, true}) {
      auto s = ly.seg(bottom, i);
      for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        gd.edges.emplace_back(s[j], s[j + 1]);
      }
    }
  }
  // Full edges: row solids, the two boundary specials, and the diagonals.
  // Together they form a single cycle of length 4(c-1) over the boundary.
  std::vector<std::pair<Vertex, Vertex>> full;
  for (std::size_t j = 0; j + 1 < c; ++j) {
    full.emplace_back(A(j), B(j));
    full.emplace_back(C(j), D(j));
  }
  full.emplace_back(A(0), D(0));
  full.emplace_back(B(c - 2), C(c - 2));
  for (std::size_t j = 0; j + 2 < c; ++j) {
    full.emplace_back(B(j), D(j + 1));
    full.emplace_back(C(j), A(j + 1));
  }
  gd.edges.insert(gd.edges.end(), full.begin(), full.end());

  // Straight routing: each row traversed left to right, dotted paths joined
  // by the row solids.
  {
    std::vector<Vertex> top, bottom;
    for (std::size_t i = 0; i < c; ++i) {
      append_tail(top, ly.seg(false, i));
      append_tail(bottom, ly.seg(true, i));
      if (i + 1 < c) {
        top.push_back(B(i));     // solid a_i - b_i
        bottom.push_back(D(i));  // solid c_i - d_i
      }
    }
    gd.pairings[0][0] = std::move(top);
    gd.pairings[0][1] = std::move(bottom);
  }
  // Crossed routing (uses c even): the a1 path drops to the bottom row via
  // the left special, then alternates odd bottom / even top dotted paths via
  // the diagonals; the a2 path covers the complementary dotted paths and
  // exits through the right special.
  {
    std::vector<Vertex> red;  // a1 -> b2
    append_tail(red, ly.seg(false, 0));
    red.push_back(D(0));  // left special a_0 - d_0
    for (std::size_t i = 1;; i += 2) {
      append_tail(red, ly.seg(true, i));
      if (i == c - 1) break;
      red.push_back(A(i + 1));  // diagonal c_i - a_{i+1}
      append_tail(red, reversed(ly.seg(false, i + 1)));
      red.push_back(D(i + 1));  // diagonal b_i - d_{i+1}
    }
    std::vector<Vertex> blue;  // a2 -> b1
    for (std::size_t i = 0;; i += 2) {
      append_tail(blue, ly.seg(true, i));
      if (i == c - 2) {
        blue.push_back(B(c - 2));  // right special
        append_tail(blue, ly.seg(false, c - 1));
        break;
      }
      blue.push_back(A(i + 1));
      append_tail(blue, reversed(ly.seg(false, i + 1)));
      blue.push_back(D(i + 1));
    }
    gd.pairings[1][0] = std::move(red);
    gd.pairings[1][1] = std::move(blue);
  }
  for (const auto& pair : gd.pairings) {
    for (const auto& path : pair) {
      if (path.size() != gd.traversal_len() + 1) {
        throw InvalidInput("gadget: routing length mismatch");
      }
    }
  }

  // Construction sequence, anchored at {a1, a2}: the first dotted path, the
  // full-edge cycle split into two arcs at a_0, the bottom-left dotted path
  // back to a2, then every remaining dotted path between known boundary
  // vertices (the last top/bottom paths reach the fresh b-terminals).
  {
    std::map<Vertex, std::vector<Vertex>> cyc;  // full-edge adjacency
    for (auto [x, y] : full) {
      cyc[x].push_back(y);
      cyc[y].push_back(x);
    }
    for (auto& [v, nb] : cyc) {
      if (nb.size() != 2) throw InvalidInput("gadget: boundary degree");
    }
    std::vector<Vertex> cycle{A(0)};
    Vertex prev = kNoVertex;
    while (true) {
      Vertex cur = cycle.back();
      Vertex next = cyc[cur][0] == prev ? cyc[cur][1] : cyc[cur][0];
      if (next == A(0)) break;
      prev = cur;
      cycle.push_back(next);
    }
    cycle.push_back(A(0));
    if (cycle.size() != 4 * (c - 1) + 1) {
      throw InvalidInput("gadget: full edges are not one cycle");
    }
    const std::size_t half = 2 * (c - 1);
    gd.build_sequence.push_back(ly.seg(false, 0));  // a1 -> a_0
    gd.build_sequence.emplace_back(cycle.begin(), cycle.begin() + half + 1);
    gd.build_sequence.emplace_back(cycle.begin() + half, cycle.end());
    gd.build_sequence.push_back(reversed(ly.seg(true, 0)));  // c_0 -> a2
    for (std::size_t i = 1; i < c; ++i) {
      gd.build_sequence.push_back(ly.seg(false, i));
      gd.build_sequence.push_back(ly.seg(true, i));
    }
  }
  return gd;
}

LinkingStructure build_linking_blueprint(std::size_t n_wires,
                                         const SolverConfig& cfg) {
  if (n_wires < 2) throw InvalidInput("linking: need at least two wires");
  LinkingStructure ls;
  ls.network = build_sorting_network(n_wires);
  ls.proto = build_gadget(cfg.gadget_marked, cfg.gadget_path_len);
  const Gadget& gd = ls.proto;
  const std::size_t span = gd.traversal_len();

  std::size_t next = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto fresh = [&] { return static_cast<Vertex>(next++); };

  ls.nodes.assign(ls.network.depth() + 1, {});
  ls.nodes[0].resize(n_wires);
  for (std::size_t p = 0; p < n_wires; ++p) ls.nodes[0][p] = fresh();
  ls.a_side = ls.nodes[0];

  for (std::size_t k = 1; k <= ls.network.depth(); ++k) {
    ls.nodes[k].assign(n_wires, kNoVertex);
    std::vector<bool> busy(n_wires, false);
    for (const Comparator& cmp : ls.network.layers[k - 1]) {
      busy[cmp.lo] = busy[cmp.hi] = true;
      LinkingStructure::GadgetInstance gi;
      gi.layer = k;
      gi.lo = cmp.lo;
      gi.hi = cmp.hi;
      gi.map.assign(gd.vertex_count, kNoVertex);
      gi.map[gd.a1] = ls.nodes[k - 1][cmp.lo];
      gi.map[gd.a2] = ls.nodes[k - 1][cmp.hi];
      gi.map[gd.b1] = ls.nodes[k][cmp.lo] = fresh();
      gi.map[gd.b2] = ls.nodes[k][cmp.hi] = fresh();
      for (Vertex v = 0; v < gd.vertex_count; ++v) {
        if (gi.map[v] == kNoVertex) gi.map[v] = fresh();
      }
      for (auto [x, y] : gd.edges) edges.emplace_back(gi.map[x], gi.map[y]);
      ls.gadgets.push_back(std::move(gi));
    }
    for (std::size_t p = 0; p < n_wires; ++p) {
      if (busy[p]) continue;
      LinkingStructure::PassThrough pt;
      pt.layer = k;
      pt.wire = p;
      pt.path.push_back(ls.nodes[k - 1][p]);
      for (std::size_t j = 0; j + 1 < span; ++j) pt.path.push_back(fresh());
      pt.path.push_back(ls.nodes[k][p] = fresh());
      for (std::size_t j = 0; j + 1 < pt.path.size(); ++j) {
        edges.emplace_back(pt.path[j], pt.path[j + 1]);
      }
      ls.passes.push_back(std::move(pt));
    }
  }
  ls.b_side = ls.nodes[ls.network.depth()];
  ls.graph = Graph(next, std::move(edges));

  // Certificate: gadget build sequences and pass-through paths in layer
  // order, each chopped so no piece exceeds cfg.cert_len_high edges. Every
  // raw path starts at an already-present vertex, so each chopped piece
  // does too.
  auto emit = [&](const std::vector<Vertex>& path) {
    const std::size_t len = path.size() - 1;
    const std::size_t high = std::max<std::size_t>(1, cfg.cert_len_high);
    const std::size_t pieces = (len + high - 1) / high;
    std::size_t at = 0;
    for (std::size_t i = 0; i < pieces; ++i) {
      std::size_t take = len / pieces + (i < len % pieces ? 1 : 0);
      ls.certificate.emplace_back(path.begin() + at,
                                  path.begin() + at + take + 1);
      at += take;
    }
  };
  std::size_t gi_at = 0, pt_at = 0;
  for (std::size_t k = 1; k <= ls.network.depth(); ++k) {
    for (; gi_at < ls.gadgets.size() && ls.gadgets[gi_at].layer == k; ++gi_at) {
      const auto& gi = ls.gadgets[gi_at];
      for (const auto& path : gd.build_sequence) {
        std::vector<Vertex> mapped;
        mapped.reserve(path.size());
        for (Vertex v : path) mapped.push_back(gi.map[v]);
        emit(mapped);
      }
    }
    for (; pt_at < ls.passes.size() && ls.passes[pt_at].layer == k; ++pt_at) {
      emit(ls.passes[pt_at].path);
    }
  }

  if (!validate_certificate(ls)) {
    throw InvalidInput("linking: blueprint certificate failed validation");
  }
  return ls;
}

bool validate_certificate(const LinkingStructure& ls) {
  const Graph& g = ls.graph;
  const std::size_t n = g.vertex_count();
  VertexSet existing(n);
  for (Vertex v : ls.a_side) existing.insert(v);
  for (Vertex v : ls.b_side) existing.insert(v);
  std::set<std::pair<Vertex, Vertex>> used;
  for (const auto& path : ls.certificate) {
    if (path.size() < 2) return false;
    if (!existing.contains(path.front()) && !existing.contains(path.back())) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      Vertex x = path[i], y = path[i + 1];
      if (x >= n || y >= n || !g.has_edge(x, y)) return false;
      if (!used.insert(std::minmax(x, y)).second) return false;
    }
    // Interior vertices must be fresh (and distinct within the path).
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (existing.contains(path[i])) return false;
      existing.insert(path[i]);
    }
    existing.insert(path.front());
    existing.insert(path.back());
  }
  if (used.size() != g.edge_count()) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (!existing.contains(v)) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> link(const LinkingStructure& ls,
                                      const std::vector<std::size_t>& phi) {
  const std::size_t n_wires = ls.width();
  auto states = route_permutation(ls.network, phi);
  const Gadget& gd = ls.proto;

  std::vector<std::vector<Vertex>> paths(n_wires);
  std::vector<std::size_t> cur(n_wires);  // wire -> token riding it
  for (std::size_t p = 0; p < n_wires; ++p) {
    cur[p] = p;
    paths[p].push_back(ls.a_side[p]);
  }

  std::size_t gi_at = 0, pt_at = 0;
  for (std::size_t k = 1; k <= ls.network.depth(); ++k) {
    std::size_t idx = 0;
    for (; gi_at < ls.gadgets.size() && ls.gadgets[gi_at].layer == k;
         ++gi_at, ++idx) {
      const auto& gi = ls.gadgets[gi_at];
      const bool crossed = states[k - 1][idx] == CompState::Crossed;
      auto mapped = [&](const std::vector<Vertex>& path) {
        std::vector<Vertex> out;
        out.reserve(path.size());
        for (Vertex v : path) out.push_back(gi.map[v]);
        return out;
      };
      const auto& pair = gd.pairings[crossed ? 1 : 0];
      append_tail(paths[cur[gi.lo]], mapped(pair[0]));
      append_tail(paths[cur[gi.hi]], mapped(pair[1]));
      if (crossed) std::swap(cur[gi.lo], cur[gi.hi]);
    }
    for (; pt_at < ls.passes.size() && ls.passes[pt_at].layer == k; ++pt_at) {
      append_tail(paths[cur[ls.passes[pt_at].wire]], ls.passes[pt_at].path);
    }
  }

  const std::size_t want = ls.network.depth() * gd.traversal_len() + 1;
  VertexSet covered(ls.graph.vertex_count());
  for (std::size_t i = 0; i < n_wires; ++i) {
    if (paths[i].size() != want || paths[i].back() != ls.b_side[phi[i]]) {
      throw InvalidInput("linking: routed paths are inconsistent");
    }
    for (Vertex v : paths[i]) {
      if (covered.contains(v)) throw InvalidInput("linking: path overlap");
      covered.insert(v);
    }
  }
  if (covered != VertexSet::full(ls.graph.vertex_count())) {
    throw InvalidInput("linking: routed paths do not cover the structure");
  }
  return paths;
}

void save_linking(std::ostream& out, const LinkingStructure& ls) {
  nlohmann::json j;
  j["n"] = ls.graph.vertex_count();
  auto& je = j["edges"];
  je = nlohmann::json::array();
  for (auto [a, b] : ls.graph.edges()) je.push_back({a, b});
  j["a_side"] = ls.a_side;
  j["b_side"] = ls.b_side;
  j["certificate"] = ls.certificate;
  out << j.dump(2) << "\n";
}

}  // namespace hamex
