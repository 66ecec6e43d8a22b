#include "hamex/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <unordered_map>

#include "hamex/engine.hpp"
#include "hamex/reduction.hpp"
#include "json.hpp"

namespace hamex {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Cycle: return "cycle";
    case Outcome::Path: return "path";
    case Outcome::NotFound: return "not_found";
    case Outcome::RefutedInput: return "refuted_input";
  }
  return "unknown";
}

std::string SolveReport::to_json(bool with_timings) const {
  nlohmann::json j;
  j["outcome"] = outcome_name(outcome);
  j["sequence"] = sequence;
  j["merge_count"] = merge_count;
  j["fallback_used"] = fallback_used;
  j["verified"] = verified;
  j["detail"] = detail;
  if (with_timings) {
    auto& jt = j["timings_ms"];
    jt = nlohmann::json::object();
    for (const auto& [k, v] : timings_ms) jt[k] = v;
  }
  return j.dump(2);
}

bool verify_hamilton_cycle(const Graph& g, const std::vector<Vertex>& seq) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || seq.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : seq) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.has_edge(seq[i], seq[(i + 1) % n])) return false;
  }
  return true;
}

bool verify_hamilton_path(const Graph& g, const std::vector<Vertex>& seq,
                          Vertex x, Vertex y) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || seq.size() != n) return false;
  if (seq.front() != x || seq.back() != y) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : seq) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!g.has_edge(seq[i], seq[i + 1])) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Mutable rotation-extension path with O(1) membership.
struct PosaPath {
  std::vector<Vertex> seq;
  std::vector<bool> in;

  explicit PosaPath(std::size_t n) : in(n, false) {}
  void push_back(Vertex v) {
    seq.push_back(v);
    in[v] = true;
  }
};

}  // namespace

SolveReport posa_fallback(const Graph& g, const SolverConfig& cfg) {
  SolveReport rep;
  rep.fallback_used = true;
  const std::size_t n = g.vertex_count();
  if (n < 3) {
    rep.detail = "graph too small for a cycle";
    return rep;
  }
  const std::size_t budget =
      cfg.posa_round_budget > 0 ? cfg.posa_round_budget : 50 * n;

  for (std::size_t restart = 0; restart < std::max<std::size_t>(
                                    1, cfg.posa_restarts);
       ++restart) {
    std::mt19937_64 rng(cfg.seed * 0x100000001b3ull + restart);
    PosaPath p(n);
    if (!cfg.protected_edges.empty()) {
      auto [a, b] = cfg.protected_edges.front();
      p.push_back(a);
      p.push_back(b);
    } else {
      p.push_back(static_cast<Vertex>(rng() % n));
    }

    for (std::size_t step = 0; step < budget; ++step) {
      // Extend greedily at either end.
      bool extended = false;
      for (int side = 0; side < 2 && !extended; ++side) {
        Vertex e = side == 0 ? p.seq.back() : p.seq.front();
        std::vector<Vertex> outs;
        for (Vertex w : g.neighbors(e)) {
          if (!p.in[w]) outs.push_back(w);
        }
        if (outs.empty()) continue;
        Vertex w = outs[rng() % outs.size()];
        if (side == 0) {
          p.push_back(w);
        } else {
          p.seq.insert(p.seq.begin(), w);
          p.in[w] = true;
        }
        extended = true;
      }
      if (extended) continue;

      Vertex back = p.seq.back(), front = p.seq.front();
      bool closing = g.has_edge(back, front) && p.seq.size() >= 3;
      if (closing && p.seq.size() == n) {
        rep.outcome = Outcome::Cycle;
        rep.sequence = p.seq;
        rep.verified = verify_hamilton_cycle(g, rep.sequence);
        rep.detail = "rotation-extension";
        return rep;
      }
      if (closing) {
        // Re-extend through the cycle: open it at a vertex that sees the
        // outside.
        const std::size_t k = p.seq.size();
        bool rerouted = false;
        std::size_t off = rng() % k;
        for (std::size_t t = 0; t < k && !rerouted; ++t) {
          std::size_t j = (off + t) % k;
          Vertex vj = p.seq[j];
          Vertex out = kNoVertex;
          for (Vertex w : g.neighbors(vj)) {
            if (!p.in[w]) {
              out = w;
              break;
            }
          }
          if (out == kNoVertex) continue;
          std::size_t jn = (j + 1) % k;
          if (cfg.is_protected(vj, p.seq[jn])) continue;
          std::vector<Vertex> np{out};
          for (std::size_t i = 0; i <= j; ++i) np.push_back(p.seq[j - i]);
          for (std::size_t i = k; i > jn; --i) np.push_back(p.seq[i - 1]);
          if (jn == 0) np.resize(k + 1);  // wrapped break: (back, front)
          p.seq = std::move(np);
          p.in[out] = true;
          rerouted = true;
        }
        if (rerouted) continue;
      }

      // Rotate at one end (reverse first to rotate at the front).
      if (rng() & 1) std::reverse(p.seq.begin(), p.seq.end());
      const std::size_t k = p.seq.size();
      std::vector<std::size_t> pivots;
      std::vector<std::size_t> pos(n, SIZE_MAX);
      for (std::size_t i = 0; i < k; ++i) pos[p.seq[i]] = i;
      for (Vertex w : g.neighbors(p.seq.back())) {
        std::size_t i = pos[w];
        if (i != SIZE_MAX && i + 2 < k &&
            !cfg.is_protected(p.seq[i], p.seq[i + 1])) {
          pivots.push_back(i);
        }
      }
      if (pivots.empty()) break;  // stuck; restart
      std::size_t i = pivots[rng() % pivots.size()];
      std::reverse(p.seq.begin() + i + 1, p.seq.end());
    }
  }
  rep.detail = "rotation-extension budget exhausted";
  return rep;
}

namespace {

/// Outcome of the constructive pipeline attempt; empty sequence = failure.
struct PipelineAttempt {
  std::vector<Vertex> cycle;
  std::size_t merges = 0;
  std::string failed_stage;
};

PipelineAttempt run_pipeline(const Graph& g, const SolverConfig& cfg,
                             SolveReport& rep) {
  PipelineAttempt out;
  const std::size_t n = g.vertex_count();
  auto t0 = Clock::now();
  auto stage_done = [&](const char* name) {
    rep.timings_ms.emplace_back(name, ms_since(t0));
    t0 = Clock::now();
  };

  Partition part = partition_expander(g, cfg, cfg.seed);
  stage_done("partition");
  if (!part.success) {
    out.failed_stage = "partition: " + part.failed_stage;
    return out;
  }
  const std::size_t t = part.a.size();

  // Working graph: everything outside the structure interior.
  VertexSet work_set = part.z;
  for (Vertex v : part.y.members()) work_set.insert(v);
  for (Vertex v : part.a) work_set.insert(v);
  for (Vertex v : part.b) work_set.insert(v);
  InducedSubgraph work = induced_subgraph(g, work_set);
  const std::size_t nw = work.graph.vertex_count();

  SolverConfig wcfg = cfg;
  wcfg.protected_edges.clear();
  for (auto [a, b] : cfg.protected_edges) {
    if (work.to_local[a] != kNoVertex && work.to_local[b] != kNoVertex) {
      wcfg.protected_edges.emplace_back(work.to_local[a], work.to_local[b]);
    }
  }

  // Reduce a linear forest on G[Z] alone.
  InducedSubgraph subz = induced_subgraph(g, part.z);
  SolverConfig zcfg = cfg;
  zcfg.protected_edges.clear();
  ReductionReport rr;
  LinearForest fz = reduce_forest(subz.graph, initial_forest(subz.graph, zcfg),
                                  zcfg, &rr);
  out.merges += rr.merge_successes;
  stage_done("reduce");

  // F0 = connectors plus the reduced Z-forest, on the working graph.
  LinearForest f = LinearForest::singletons(nw);
  for (auto [u, v] : fz.edges()) {
    f.add_edge(work.to_local[subz.to_host[u]], work.to_local[subz.to_host[v]]);
  }
  std::vector<std::vector<Vertex>> connector_paths;  // work-local
  for (auto id : part.connectors.path_ids()) {
    auto [ea, eb] = part.connectors.path_ends(id);
    if (ea == eb) continue;  // singleton registry entries
    auto seq = part.connectors.path_vertices(ea);
    std::vector<Vertex> local;
    local.reserve(seq.size());
    for (Vertex v : seq) local.push_back(work.to_local[v]);
    for (std::size_t i = 0; i + 1 < local.size(); ++i) {
      f.add_edge(local[i], local[i + 1]);
    }
    connector_paths.push_back(std::move(local));
  }
  if (!f.validate(work.graph)) {
    out.failed_stage = "forest-assembly";
    return out;
  }

  VertexSet ab(nw);
  std::vector<int> a_index(nw, -1), b_index(nw, -1);
  for (std::size_t i = 0; i < t; ++i) {
    Vertex la = work.to_local[part.a[i]], lb = work.to_local[part.b[i]];
    ab.insert(la);
    ab.insert(lb);
    a_index[la] = static_cast<int>(i);
    b_index[lb] = static_cast<int>(i);
  }

  // Connector bookkeeping shared by the merge strategies: at least half of
  // the connector paths must stay untouched across the whole loop.
  std::vector<int> conn_of(nw, -1);
  for (std::size_t ci = 0; ci < connector_paths.size(); ++ci) {
    for (Vertex v : connector_paths[ci]) conn_of[v] = static_cast<int>(ci);
  }
  auto connector_intact = [&](std::size_t ci) {
    const auto& cp = connector_paths[ci];
    for (std::size_t i = 0; i + 1 < cp.size(); ++i) {
      if (!f.has_forest_edge(cp[i], cp[i + 1])) return false;
    }
    return true;
  };
  auto untouched_connectors = [&]() {
    std::size_t u = 0;
    for (std::size_t ci = 0; ci < connector_paths.size(); ++ci) {
      u += connector_intact(ci);
    }
    return u;
  };

  // End-game merge for when the scaffolded merge runs out of medium-path
  // mass: rotate x's endpoint freely (pivots anywhere) until some exposed
  // endpoint is a graph-neighbour of y, then join the two paths directly.
  auto direct_merge = [&](Vertex x, Vertex y) -> bool {
    VertexSet all(nw);
    for (Vertex v = 0; v < nw; ++v) all.insert(v);
    ReachOptions opts;
    opts.max_order = 2 * wcfg.depth_cap;
    opts.target_size = nw / 2 + 1;
    opts.protected_edges = &wcfg.protected_edges;
    auto entries = endpoint_reach(work.graph, f, x, all, opts);
#ifdef HAMEX_MERGE_TRACE
    std::size_t adj_hits = 0, ytouch = 0, replay_rej = 0;
#endif
    for (const auto& e : entries) {
      Vertex w = e.endpoint;
      if (w == y || !work.graph.has_edge(w, y)) continue;
#ifdef HAMEX_MERGE_TRACE
      ++adj_hits;
#endif
      // Steps that move y itself would invalidate the join target.
      bool touches_y = false;
      for (const auto& s : e.record.steps) {
        if (s.pivot == y || s.to == y ||
            (s.broke_edge && (s.broken_a == y || s.broken_b == y))) {
          touches_y = true;
          break;
        }
      }
      if (touches_y) {
#ifdef HAMEX_MERGE_TRACE
        ++ytouch;
#endif
        continue;
      }
      replay(work.graph, f, e.record);
      if (f.is_endpoint(w) && f.is_endpoint(y) &&
          f.path_of(w) != f.path_of(y) && 2 * untouched_connectors() >= t) {
        f.add_edge(w, y);
        return true;
      }
#ifdef HAMEX_MERGE_TRACE
      ++replay_rej;
#endif
      undo(f, e.record);
    }
#ifdef HAMEX_MERGE_TRACE
    std::fprintf(stderr,
                 "direct_merge fail x=%u y=%u reach=%zu adj=%zu ytouch=%zu "
                 "replay_rej=%zu plen=%zu ends=%zu\n",
                 x, y, entries.size(), adj_hits, ytouch, replay_rej,
                 f.path_length_of_id(f.path_of(x)), f.end_count());
    for (auto id : f.path_ids()) {
      auto [pa, pb] = f.path_ends(id);
      std::fprintf(stderr, "  path len=%zu ends=%u(%s) %u(%s)\n",
                   f.path_length_of_id(id), pa,
                   ab.contains(pa) ? "T" : "free", pb,
                   ab.contains(pb) ? "T" : "free");
    }
#endif
    return false;
  };

  // Last-resort merge: a seeded random rotation walk from one free endpoint
  // that commits every step, until the walking endpoint can join a free
  // endpoint of another path. Handles the end state where one near-spanning
  // path must be spliced into a connector, which the canonical reach search
  // rarely finds.
  std::mt19937_64 end_rng(wcfg.seed ^ 0xd1b54a32d192ed03ULL);
  auto random_end_merge = [&]() -> bool {
    std::vector<Vertex> frees;
    for (Vertex e : f.end_vertices()) {
      if (!ab.contains(e)) frees.push_back(e);
    }
    if (frees.size() < 2) return false;
    Vertex cur = frees[end_rng() % frees.size()];
    std::vector<Vertex> nbrs;
    for (std::size_t step = 0; step < nw; ++step) {
      // Positions along cur's path, cur first, for the same-path
      // closer-neighbour rule.
      std::vector<Vertex> seq = f.path_vertices(cur);
      if (seq.front() != cur) std::reverse(seq.begin(), seq.end());
      std::unordered_map<Vertex, std::size_t> pos;
      pos.reserve(seq.size());
      for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;

      nbrs.assign(work.graph.neighbors(cur).begin(),
                  work.graph.neighbors(cur).end());
      for (std::size_t i = nbrs.size(); i > 1; --i) {
        std::swap(nbrs[i - 1], nbrs[end_rng() % i]);
      }
      bool moved = false;
      for (Vertex z : nbrs) {
        if (f.degree(z) <= 1) {
          if (ab.contains(z) || f.path_of(z) == f.path_of(cur)) continue;
          f.add_edge(cur, z);
          return true;
        }
        Vertex ya = f.neighbors(z)[0], yb = f.neighbors(z)[1];
        Vertex y = kNoVertex;
        if (auto it = pos.find(z); it != pos.end()) {
          y = (pos.count(ya) && pos.at(ya) + 1 == it->second) ? ya : yb;
          if (y == cur) continue;
        } else {
          Vertex first = (end_rng() & 1) ? ya : yb;
          Vertex second = first == ya ? yb : ya;
          y = f.degree(first) == 2 ? first
                                   : (f.degree(second) == 2 ? second : kNoVertex);
        }
        if (y == kNoVertex || f.degree(y) != 2) continue;
        if (wcfg.is_protected(z, y)) continue;
        // Keep the connector budget: never break an edge of a still-intact
        // connector when only half remain.
        int ci = conn_of[z];
        if (ci >= 0 && ci == conn_of[y] && connector_intact(ci) &&
            2 * (untouched_connectors() - 1) < t) {
          continue;
        }
        f.remove_edge(z, y);
        f.add_edge(cur, z);
        cur = y;
        moved = true;
        break;
      }
      if (!moved) return false;
    }
    return false;
  };

  // Merge loop: shrink End(F) to exactly the terminals.
  while (f.end_count() > 2 * t) {
    if (f.has_isolated_vertex()) {
      out.failed_stage = "merge-loop: isolated vertex";
      return out;
    }
    struct Cand {
      std::size_t len;
      Vertex end;
      LinearForest::PathId path;
    };
    std::vector<Cand> cands;
    for (auto id : f.path_ids()) {
      auto [ea, eb] = f.path_ends(id);
      std::size_t len = f.path_length_of_id(id);
      if (!ab.contains(ea)) cands.push_back({len, ea, id});
      if (eb != ea && !ab.contains(eb)) cands.push_back({len, eb, id});
    }
    if (cands.size() < 2) {
      out.failed_stage = "merge-loop: endpoint bookkeeping";
      return out;
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.len != b.len ? a.len < b.len : a.end < b.end;
    });
    bool merged = false;
    std::size_t tries = 0;
    std::string last_fail;
    for (std::size_t i = 0; i < cands.size() && !merged && tries < 8; ++i) {
      for (std::size_t j = i + 1; j < cands.size() && !merged && tries < 8;
           ++j) {
        if (cands[i].path == cands[j].path) continue;
        ++tries;
        try {
          MergeReport mr =
              merge_two_paths(work.graph, f, cands[i].end, cands[j].end, wcfg);
          if (mr.success) {
            merged = true;
            ++out.merges;
          } else {
            last_fail = mr.failed_stage;
          }
        } catch (const std::exception& e) {
          // A rejected precondition counts as a failed try.
          last_fail = e.what();
        }
      }
    }
    for (std::size_t i = 0; i + 1 < cands.size() && !merged; ++i) {
      if (direct_merge(cands[i].end, cands[i + 1].end) ||
          direct_merge(cands[i + 1].end, cands[i].end)) {
        merged = true;
        ++out.merges;
      }
    }
    for (std::size_t r = 0; r < 5 && !merged; ++r) {
      if (random_end_merge()) {
        merged = true;
        ++out.merges;
      }
    }
    if (!merged) {
      out.failed_stage = "merge-loop: no mergeable endpoint pair (" +
                         last_fail + ")";
      return out;
    }
    // Connector budget: at least half must survive unchanged.
    std::size_t untouched = 0;
    for (const auto& cp : connector_paths) {
      bool ok = true;
      for (std::size_t i = 0; ok && i + 1 < cp.size(); ++i) {
        ok = f.has_forest_edge(cp[i], cp[i + 1]);
      }
      untouched += ok;
    }
    if (2 * untouched < t) {
      out.failed_stage = "merge-loop: connector budget exhausted";
      return out;
    }
  }
  stage_done("merge");

  // Endpoints are now exactly A u B; orient the paths and choose the
  // linking permutation so the union closes into one cycle.
  for (Vertex e : f.end_vertices()) {
    if (!ab.contains(e)) {
      out.failed_stage = "relabel: terminal set mismatch";
      return out;
    }
  }
  struct Node {
    std::vector<Vertex> seq;  // oriented enter -> exit, work-local
    bool enter_a, exit_a;
  };
  std::vector<Node> aa, bb, abn;
  for (auto id : f.path_ids()) {
    auto [ea, eb] = f.path_ends(id);
    auto seq = f.path_vertices(ea);
    bool fa = a_index[seq.front()] >= 0, ba = a_index[seq.back()] >= 0;
    Node nd;
    nd.seq = std::move(seq);
    if (fa && ba) {
      nd.enter_a = nd.exit_a = true;
      aa.push_back(std::move(nd));
    } else if (!fa && !ba) {
      nd.enter_a = nd.exit_a = false;
      bb.push_back(std::move(nd));
    } else {
      if (!fa) std::reverse(nd.seq.begin(), nd.seq.end());
      nd.enter_a = true;
      nd.exit_a = false;
      abn.push_back(std::move(nd));
    }
  }
  if (aa.size() != bb.size()) {
    out.failed_stage = "relabel: endpoint parity";
    return out;
  }
  std::vector<Node> order;
  for (std::size_t i = 0; i < aa.size(); ++i) {
    order.push_back(std::move(aa[i]));
    order.push_back(std::move(bb[i]));
  }
  for (auto& nd : abn) order.push_back(std::move(nd));
  if (order.size() != t) {
    out.failed_stage = "relabel: path count";
    return out;
  }

  // Each gap between exit of node i and entry of node i+1 is served by the
  // link joining that a-terminal to that b-terminal.
  std::vector<std::size_t> phi(t, SIZE_MAX);
  std::vector<std::size_t> gap_link(t);  // link index used after node i
  std::vector<bool> gap_exit_is_a(t);
  for (std::size_t i = 0; i < t; ++i) {
    const Node& cur = order[i];
    const Node& nxt = order[(i + 1) % t];
    Vertex ev = cur.seq.back(), fv = nxt.seq.front();
    if (cur.exit_a == (a_index[fv] >= 0)) {
      out.failed_stage = "relabel: port alternation";
      return out;
    }
    Vertex av = cur.exit_a ? ev : fv;
    Vertex bv = cur.exit_a ? fv : ev;
    std::size_t ai = static_cast<std::size_t>(a_index[av]);
    std::size_t bi = static_cast<std::size_t>(b_index[bv]);
    if (phi[ai] != SIZE_MAX) {
      out.failed_stage = "relabel: duplicate a-terminal";
      return out;
    }
    phi[ai] = bi;
    gap_link[i] = ai;
    gap_exit_is_a[i] = cur.exit_a;
  }

  auto links = link(part.structure, phi);
  stage_done("link");

  // Concatenate forest paths and link paths into the host cycle.
  const auto& image = part.structure.image;
  std::vector<Vertex> cycle;
  cycle.reserve(n);
  for (std::size_t i = 0; i < t; ++i) {
    for (Vertex v : order[i].seq) cycle.push_back(work.to_host[v]);
    std::vector<Vertex> lp = links[gap_link[i]];
    if (!gap_exit_is_a[i]) std::reverse(lp.begin(), lp.end());
    // Drop the shared terminals at both ends of the link path.
    for (std::size_t j = 1; j + 1 < lp.size(); ++j) {
      cycle.push_back(image[lp[j]]);
    }
  }
  stage_done("assemble");
  if (!verify_hamilton_cycle(g, cycle)) {
    out.failed_stage = "verification";
    out.cycle.clear();
    return out;
  }
  out.cycle = std::move(cycle);
  return out;
}

}  // namespace

SolveReport find_hamilton_cycle(const Graph& g, const SolverConfig& cfg) {
  SolveReport rep;
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    rep.outcome = Outcome::RefutedInput;
    rep.detail = "empty graph";
    return rep;
  }
  if (n < 3 || g.min_degree() < 2) {
    rep.detail = "necessary condition failed (n >= 3, min degree >= 2)";
    return rep;
  }

  const bool fallback_first = n < cfg.fallback_first_threshold;
  if (fallback_first) {
    auto t0 = Clock::now();
    SolveReport fb = posa_fallback(g, cfg);
    fb.timings_ms.emplace_back("fallback", ms_since(t0));
    if (fb.outcome == Outcome::Cycle && fb.verified) return fb;
    rep = std::move(fb);
  }

  PipelineAttempt att;
  try {
    att = run_pipeline(g, cfg, rep);
  } catch (const std::exception& e) {
    att.failed_stage = std::string("exception: ") + e.what();
  }
  rep.merge_count = att.merges;
  if (!att.cycle.empty()) {
    rep.outcome = Outcome::Cycle;
    rep.sequence = std::move(att.cycle);
    rep.verified = true;
    rep.fallback_used = false;
    rep.detail = "pipeline";
    return rep;
  }
  rep.detail = "pipeline failed at " + att.failed_stage;

  if (!fallback_first) {
    auto t0 = Clock::now();
    SolveReport fb = posa_fallback(g, cfg);
    fb.merge_count = rep.merge_count;
    fb.timings_ms = rep.timings_ms;
    fb.timings_ms.emplace_back("fallback", ms_since(t0));
    if (fb.outcome == Outcome::Cycle && fb.verified) {
      fb.detail = rep.detail + "; fallback succeeded";
      return fb;
    }
    rep.detail += "; fallback also failed";
  }
  rep.outcome = Outcome::NotFound;
  rep.fallback_used = true;
  return rep;
}

SolveReport find_hamilton_path(const Graph& g, Vertex x, Vertex y,
                               const SolverConfig& cfg) {
  const std::size_t n = g.vertex_count();
  if (x >= n || y >= n) throw InvalidInput("path endpoints out of range");
  if (x == y) throw InvalidInput("path endpoints must differ");

  auto edges = g.edges();
  if (!g.has_edge(x, y)) {
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  Graph g2(n, std::move(edges));
  SolverConfig cfg2 = cfg;
  cfg2.protected_edges.assign(1, {x, y});

  SolveReport rep = find_hamilton_cycle(g2, cfg2);
  if (rep.outcome != Outcome::Cycle) {
    rep.outcome = Outcome::NotFound;
    rep.sequence.clear();
    rep.verified = false;
    return rep;
  }
  // Open the cycle at the xy edge.
  const auto& seq = rep.sequence;
  std::size_t i = SIZE_MAX;
  bool x_first = true;
  for (std::size_t k = 0; k < n; ++k) {
    Vertex u = seq[k], v = seq[(k + 1) % n];
    if ((u == x && v == y) || (u == y && v == x)) {
      i = k;
      x_first = u == x;
      break;
    }
  }
  if (i == SIZE_MAX) {
    rep.outcome = Outcome::NotFound;
    rep.sequence.clear();
    rep.verified = false;
    rep.detail += "; cycle missed the protected edge";
    return rep;
  }
  std::vector<Vertex> path;
  path.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    path.push_back(seq[(i + n - k) % n]);
  }
  if (!x_first) std::reverse(path.begin(), path.end());
  rep.outcome = Outcome::Path;
  rep.sequence = std::move(path);
  rep.verified = verify_hamilton_path(g, rep.sequence, x, y);
  if (!rep.verified) {
    rep.outcome = Outcome::NotFound;
    rep.sequence.clear();
  }
  return rep;
}

}  // namespace hamex
