#include "hamex/engine.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace hamex {

namespace {

nlohmann::json record_json(const RotationRecord& rec) {
  nlohmann::json steps = nlohmann::json::array();
  for (const RotationStep& s : rec.steps) {
    nlohmann::json js;
    js["from"] = s.from;
    js["pivot"] = s.pivot;
    js["to"] = s.to;
    if (s.broke_edge) js["broke"] = {s.broken_a, s.broken_b};
    steps.push_back(js);
  }
  return {{"start", rec.start},
          {"end", rec.final_endpoint},
          {"steps", steps}};
}

// Forest edges with both ends in v, excluding those touching `skip`.
std::vector<std::pair<Vertex, Vertex>> edges_within(const LinearForest& f,
                                                    const VertexSet& v,
                                                    Vertex skip) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a : v.members()) {
    if (a == skip) continue;
    for (Vertex b : f.neighbors(a)) {
      if (b != kNoVertex && b > a && b != skip && v.contains(b)) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

// One rotation from endpoint e with a pivot in the interior of `target`,
// exposing an endpoint inside `target`. Pivots ascend; same-path pivots are
// skipped so the exposed endpoint always lands on a different path.
// Mutates f on success only.
std::optional<RotationStep> one_rotation_to(const Graph& g, LinearForest& f,
                                            Vertex e, const VertexSet& target,
                                            const SolverConfig& cfg) {
  VertexSet inner = interior(f, target);
  for (Vertex z : g.neighbors(e)) {
    if (!inner.contains(z)) continue;
    if (f.path_of(z) == f.path_of(e)) continue;
    if (f.is_isolated(z)) continue;
    std::array<Vertex, 2> cands = f.neighbors(z);
    std::sort(cands.begin(), cands.end());
    for (Vertex y : cands) {
      if (y == kNoVertex || !target.contains(y)) continue;
      if (cfg.is_protected(z, y)) continue;
      return rotate1(g, f, e, z, y);
    }
  }
  return std::nullopt;
}

std::size_t edge_diff(const LinearForest& a, const LinearForest& b) {
  auto ea = a.edges();
  auto eb = b.edges();
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  std::vector<std::pair<Vertex, Vertex>> diff;
  std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                std::back_inserter(diff));
  return diff.size();
}

void ball2_original(const LinearForest& f, Vertex v, VertexSet& out) {
  out.insert(v);
  for (Vertex a : f.neighbors(v)) {
    if (a == kNoVertex) continue;
    out.insert(a);
    for (Vertex b : f.neighbors(a)) {
      if (b != kNoVertex) out.insert(b);
    }
  }
}

}  // namespace

std::string MergeReport::to_json() const {
  nlohmann::json j;
  j["x"] = x;
  j["y"] = y;
  j["success"] = success;
  if (!success) j["failed_stage"] = failed_stage;
  j["edges_changed"] = edges_changed;
  j["rotations"] = rotations;
  if (!part_sizes.empty()) j["part_sizes"] = part_sizes;
  if (hop != kNoVertex) j["hop"] = hop;
  if (crossing_edge.first != kNoVertex) {
    j["crossing_edge"] = {crossing_edge.first, crossing_edge.second};
  }
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) recs.push_back(record_json(r));
  j["records"] = recs;
  if (!audits.empty()) j["audits"] = audits;
  return j.dump();
}

MergeReport close_pair(const Graph& g, LinearForest& f, Vertex x, Vertex y,
                       const VertexSet& X, const VertexSet& Y,
                       const SolverConfig& cfg) {
  MergeReport rep;
  rep.x = x;
  rep.y = y;
  if (f.has_isolated_vertex()) {
    throw InvalidInput("close_pair: forest has isolated vertices");
  }
  if (!f.is_endpoint(x) || !f.is_endpoint(y) || !X.contains(x) ||
      !Y.contains(y)) {
    throw InvalidInput("close_pair: x,y must be endpoints inside X,Y");
  }
  if (f.path_of(x) == f.path_of(y)) {
    throw InvalidInput("close_pair: x and y on the same path");
  }
  // No path may meet both sets, and no endpoint besides x (resp. y) may lie
  // in X (resp. Y).
  {
    std::map<LinearForest::PathId, int> touch;
    for (Vertex v : X.members()) touch[f.path_of(v)] |= 1;
    for (Vertex v : Y.members()) touch[f.path_of(v)] |= 2;
    for (auto [id, mask] : touch) {
      if (mask == 3) throw InvalidInput("close_pair: a path meets both X and Y");
    }
    for (Vertex e : f.end_vertices()) {
      if ((e != x && X.contains(e)) || (e != y && Y.contains(e))) {
        throw InvalidInput("close_pair: stray endpoint inside X or Y");
      }
    }
  }

  ReachOptions opts;
  opts.max_order = cfg.depth_cap;
  if (!cfg.protected_edges.empty()) opts.protected_edges = &cfg.protected_edges;
  opts.target_size = std::max<std::size_t>(
      4, static_cast<std::size_t>(X.size() / cfg.reach_floor_divisor));
  auto reach_x = endpoint_reach(g, f, x, X, opts);
  opts.target_size = std::max<std::size_t>(
      4, static_cast<std::size_t>(Y.size() / cfg.reach_floor_divisor));
  auto reach_y = endpoint_reach(g, f, y, Y, opts);

  VertexSet yset(f.vertex_count());
  std::map<Vertex, std::size_t> y_index;
  for (std::size_t i = 0; i < reach_y.size(); ++i) {
    yset.insert(reach_y[i].endpoint);
    y_index.emplace(reach_y[i].endpoint, i);
  }

  const auto before_ends = f.end_vertices();
  for (const ReachEntry& ex : reach_x) {
    for (Vertex b : g.neighbors(ex.endpoint)) {
      auto it = y_index.find(b);
      if (it == y_index.end()) continue;
      const ReachEntry& ey = reach_y[it->second];
      LinearForest saved = f;
      try {
        replay(g, f, ex.record);
        replay(g, f, ey.record);
        if (f.path_of(ex.endpoint) == f.path_of(b)) {
          f = std::move(saved);
          continue;
        }
        f.add_edge(ex.endpoint, b);
      } catch (const InvalidInput&) {
        f = std::move(saved);
        continue;
      }
      // Structural post-conditions; anything off means this candidate pair
      // interfered, so restore and keep searching.
      std::vector<Vertex> expect = before_ends;
      expect.erase(std::remove(expect.begin(), expect.end(), x), expect.end());
      expect.erase(std::remove(expect.begin(), expect.end(), y), expect.end());
      if (!f.validate(g) || f.has_isolated_vertex() ||
          f.path_count() + 1 != saved.path_count() ||
          f.end_vertices() != expect) {
        f = std::move(saved);
        continue;
      }
      rep.success = true;
      rep.crossing_edge = {ex.endpoint, b};
      rep.records = {ex.record, ey.record};
      rep.rotations = ex.record.order() + ey.record.order();
      rep.edges_changed = edge_diff(saved, f);
      return rep;
    }
  }
  rep.failed_stage = "close-crossing-edge";
  return rep;
}

std::optional<SteerResult> steer_endpoint(const Graph& g, LinearForest& f,
                                          Vertex u, const VertexSet& U,
                                          const VertexSet& V,
                                          const SolverConfig& cfg) {
  if (!f.is_endpoint(u)) throw InvalidInput("steer_endpoint: u not an endpoint");
  if (f.has_isolated_vertex()) {
    throw InvalidInput("steer_endpoint: forest has isolated vertices");
  }
  for (Vertex e : f.end_vertices()) {
    if (V.contains(e)) throw InvalidInput("steer_endpoint: endpoint inside V");
  }

  ReachOptions opts;
  opts.max_order = cfg.depth_cap;
  if (!cfg.protected_edges.empty()) opts.protected_edges = &cfg.protected_edges;
  opts.target_size = std::max<std::size_t>(
      4, static_cast<std::size_t>(U.size() / cfg.reach_floor_divisor));
  auto reach = endpoint_reach(g, f, u, U, opts);

  auto untouched_outside = [&](const LinearForest& now, Vertex landed) {
    return edges_within(f, V, landed) == edges_within(now, V, landed);
  };

  // Case 1: some reached endpoint already lies in V.
  for (const ReachEntry& entry : reach) {
    if (!V.contains(entry.endpoint)) continue;
    replay(g, f, entry.record);
    if (untouched_outside(f, entry.endpoint)) {
      return SteerResult{entry.endpoint, entry.record};
    }
    undo(f, entry.record);
  }

  // Case 2: one extra rotation through an interior pivot of V that sits
  // outside the zone already touched by the chosen record.
  VertexSet int_v = interior(f, V);
  for (const ReachEntry& entry : reach) {
    VertexSet zone(f.vertex_count());
    ball2_original(f, entry.record.start, zone);
    for (const RotationStep& s : entry.record.steps) {
      ball2_original(f, s.pivot, zone);
    }
    replay(g, f, entry.record);
    Vertex w = entry.endpoint;
    for (Vertex z : g.neighbors(w)) {
      if (!int_v.contains(z) || zone.contains(z)) continue;
      if (f.path_of(z) == f.path_of(w)) continue;
      if (f.is_isolated(z)) continue;
      std::array<Vertex, 2> cands = f.neighbors(z);
      std::sort(cands.begin(), cands.end());
      for (Vertex v : cands) {
        if (v == kNoVertex || !V.contains(v)) continue;
        if (cfg.is_protected(z, v)) continue;
        RotationStep step;
        try {
          step = rotate1(g, f, w, z, v);
        } catch (const InvalidInput&) {
          continue;
        }
        if (untouched_outside(f, v)) {
          SteerResult res;
          res.landed = v;
          res.record = entry.record;
          res.record.steps.push_back(step);
          res.record.final_endpoint = v;
          return res;
        }
        f.remove_edge(w, z);
        f.add_edge(step.broken_a, step.broken_b);
      }
    }
    undo(f, entry.record);
  }
  return std::nullopt;
}

MergeReport merge_two_paths(const Graph& g, LinearForest& f, Vertex x,
                            Vertex y, const SolverConfig& cfg) {
  MergeReport rep;
  rep.x = x;
  rep.y = y;
  const std::size_t n = g.vertex_count();
  if (!f.is_endpoint(x) || !f.is_endpoint(y) || x == y) {
    throw InvalidInput("merge_two_paths: x,y must be distinct endpoints");
  }
  if (f.has_isolated_vertex()) {
    throw InvalidInput("merge_two_paths: forest has isolated vertices");
  }

  auto fail = [&](const char* stage) {
    rep.success = false;
    rep.failed_stage = stage;
    return rep;
  };

  // Medium paths, excluding the two special paths; each contributes its
  // core (both path ends stripped).
  const std::size_t lo = cfg.medium_low;
  const std::size_t hi = cfg.medium_high(n);
  struct MediumPath {
    LinearForest::PathId id;
    std::vector<Vertex> core;
  };
  std::vector<MediumPath> medium;
  std::size_t mass = 0;
  for (auto id : f.path_ids()) {
    std::size_t len = f.path_length_of_id(id);
    if (len < lo || len > hi) continue;
    if (id == f.path_of(x) || id == f.path_of(y)) continue;
    auto seq = f.path_vertices(f.path_ends(id).first);
    mass += len;
    medium.push_back({id, {seq.begin() + 1, seq.end() - 1}});
  }
  if (static_cast<double>(mass) < cfg.mass_fraction * n) {
    return fail("medium-mass");
  }

  // Greedy partition into four groups by descending core size.
  std::sort(medium.begin(), medium.end(), [](const auto& a, const auto& b) {
    return a.core.size() != b.core.size() ? a.core.size() > b.core.size()
                                          : a.id < b.id;
  });
  constexpr int kGroups = 4;
  std::array<std::vector<const MediumPath*>, kGroups> groups;
  std::array<std::size_t, kGroups> load{};
  for (const MediumPath& p : medium) {
    int best = 0;
    for (int i = 1; i < kGroups; ++i) {
      if (load[i] < load[best]) best = i;
    }
    groups[best].push_back(&p);
    load[best] += p.core.size();
  }
  auto group_set = [&](int i) {
    VertexSet s(n);
    for (const MediumPath* p : groups[i]) {
      for (Vertex v : p->core) s.insert(v);
    }
    return s;
  };
  rep.part_sizes.assign(load.begin(), load.end());

  LinearForest work = f;

  std::array<VertexSet, 4> first_parts{group_set(0), group_set(1),
                                       group_set(2), group_set(3)};
  std::array<VertexSet, 4> ext1;
  try {
    ext1 = extract_forest_expanders(g, work, first_parts, cfg);
  } catch (const ExpansionFailure&) {
    return fail("extract-1");
  } catch (const InvalidInput&) {
    return fail("extract-1");
  }
  const VertexSet& u1 = ext1[0];
  const VertexSet& u2 = ext1[1];
  VertexSet u12(n);
  for (Vertex v : u1.members()) u12.insert(v);
  for (Vertex v : u2.members()) u12.insert(v);

  auto steer1 = steer_endpoint(g, work, x, u12, u12, cfg);
  if (!steer1) return fail("steer-x");
  Vertex x1 = steer1->landed;
  rep.records.push_back(steer1->record);

  // T: distance-2 zone around the first landing, excluded from the second.
  VertexSet t_zone(n);
  ball2_original(work, x1, t_zone);
  VertexSet v2 = u12;
  for (Vertex v : t_zone.members()) v2.erase(v);

  auto steer2 = steer_endpoint(g, work, y, v2, v2, cfg);
  if (!steer2) return fail("steer-y");
  Vertex w = steer2->landed;
  rep.records.push_back(steer2->record);

  // Both landings in the same extracted set: push one across with a single
  // extra rotation.
  bool x1_in_1 = u1.contains(x1);
  bool w_in_1 = u1.contains(w);
  if (x1_in_1 == w_in_1) {
    VertexSet other = x1_in_1 ? u2 : u1;
    for (Vertex v : t_zone.members()) other.erase(v);
    auto step = one_rotation_to(g, work, w, other, cfg);
    if (!step) return fail("separate");
    w = step->to;
    w_in_1 = !x1_in_1;
    rep.records.push_back(RotationRecord{step->from, step->to, {*step}});
  }
  Vertex ep1 = x1_in_1 ? x1 : w;  // endpoint sitting in u1
  Vertex ep2 = x1_in_1 ? w : x1;  // endpoint sitting in u2

  // Surviving paths: none of their vertices changed adjacency. They are
  // repartitioned into four fresh balanced groups so that one disturbed
  // path cannot hollow out a group.
  auto path_clean = [&](const MediumPath* p) {
    auto seq_ok = [&](Vertex v) {
      auto a = f.neighbors(v);
      auto b = work.neighbors(v);
      if (a[0] > a[1]) std::swap(a[0], a[1]);
      if (b[0] > b[1]) std::swap(b[0], b[1]);
      return a == b;
    };
    auto ends = f.path_ends(p->id);
    if (!seq_ok(ends.first) || !seq_ok(ends.second)) return false;
    return std::all_of(p->core.begin(), p->core.end(), seq_ok);
  };
  std::array<VertexSet, 4> second_parts;
  second_parts.fill(VertexSet(n));
  {
    std::array<std::size_t, 4> load2{};
    for (const MediumPath& p : medium) {
      if (!path_clean(&p)) continue;
      int best = 0;
      for (int i = 1; i < 4; ++i) {
        if (load2[i] < load2[best]) best = i;
      }
      for (Vertex v : p.core) second_parts[best].insert(v);
      load2[best] += p.core.size();
    }
  }
  std::array<VertexSet, 4> ext2;
  try {
    ext2 = extract_forest_expanders(g, work, second_parts, cfg);
  } catch (const ExpansionFailure&) {
    return fail("extract-2");
  } catch (const InvalidInput&) {
    return fail("extract-2");
  }
  // The close step works inside groups 2 and 3; the hop set comes from
  // group 0 so the hop path cannot meet either close-side set.
  const VertexSet& u3 = ext2[2];
  const VertexSet& u4 = ext2[3];
  const VertexSet& u_hop = ext2[0];

  // Hop: detach ep1's endpoint-ness onto a hop path.
  auto hop_step = one_rotation_to(g, work, ep1, u_hop, cfg);
  if (!hop_step) return fail("hop");
  Vertex h = hop_step->to;
  rep.hop = h;
  rep.records.push_back(RotationRecord{hop_step->from, h, {*hop_step}});

  auto steer3 = steer_endpoint(g, work, ep2, u4, u4, cfg);
  if (!steer3) return fail("steer-x2");
  Vertex x4 = steer3->landed;
  rep.records.push_back(steer3->record);

  auto rot_step = one_rotation_to(g, work, h, u3, cfg);
  if (!rot_step) return fail("rot-h");
  Vertex x3 = rot_step->to;
  rep.records.push_back(RotationRecord{rot_step->from, x3, {*rot_step}});

  MergeReport close;
  try {
    close = close_pair(g, work, x3, x4, u3, u4, cfg);
  } catch (const InvalidInput&) {
    return fail("close-pre");
  }
  if (!close.success) return fail("close");
  rep.crossing_edge = close.crossing_edge;
  rep.records.insert(rep.records.end(), close.records.begin(),
                     close.records.end());

  // Full outcome audit before committing.
  std::vector<Vertex> expect = f.end_vertices();
  expect.erase(std::remove(expect.begin(), expect.end(), x), expect.end());
  expect.erase(std::remove(expect.begin(), expect.end(), y), expect.end());
  rep.edges_changed = edge_diff(f, work);
  for (const auto& r : rep.records) rep.rotations += r.order();
  if (!work.validate(g) || work.has_isolated_vertex() ||
      work.path_count() + 1 != f.path_count() ||
      work.end_vertices() != expect ||
      rep.edges_changed > 4 * cfg.depth_cap + 8) {
    return fail("outcome-audit");
  }
  f = std::move(work);
  rep.success = true;
  return rep;
}

}  // namespace hamex
