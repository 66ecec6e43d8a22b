#include "hamex/reduction.hpp"

#include <algorithm>
#include <cmath>

namespace hamex {

ReductionState ReductionState::of(LinearForest f) {
  ReductionState st;
  st.forest = std::move(f);
  return st;
}

std::size_t ReductionState::sum_sq() const {
  std::size_t total = 0;
  for (std::size_t len : forest.lengths_desc()) total += len * len;
  return total;
}

void ReductionState::note_improvement() {
  log.push_back({log.size(), forest.path_count(), sum_sq()});
}

bool absorb_isolated(const Graph& g, ReductionState& st,
                     const SolverConfig& cfg) {
  LinearForest& f = st.forest;
  const std::size_t n = f.vertex_count();
  bool any = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex v = 0; v < n && !progress; ++v) {
      if (!f.is_isolated(v)) continue;
      // Direct attach onto an adjacent endpoint of a different path.
      for (Vertex w : g.neighbors(v)) {
        if (f.is_endpoint(w) && f.path_of(w) != f.path_of(v)) {
          f.add_edge(v, w);
          st.note_improvement();
          any = progress = true;
          break;
        }
      }
      if (progress) break;
      // Rotate the isolated vertex's reach until some reached endpoint can
      // join another path; only that committing join is an improvement.
      ReachOptions opts;
      opts.max_order = cfg.depth_cap;
      opts.target_size = std::max<std::size_t>(
          16, static_cast<std::size_t>(n / cfg.reach_floor_divisor));
      if (!cfg.protected_edges.empty()) {
        opts.protected_edges = &cfg.protected_edges;
      }
      VertexSet all = VertexSet::full(n);
      auto reach = endpoint_reach(g, f, v, all, opts);
      for (std::size_t i = 1; i < reach.size() && !progress; ++i) {
        const ReachEntry& entry = reach[i];
        replay(g, f, entry.record);
        Vertex u = entry.record.final_endpoint;
        for (Vertex w : g.neighbors(u)) {
          if (f.is_endpoint(w) && f.path_of(w) != f.path_of(u)) {
            f.add_edge(u, w);
            st.note_improvement();
            any = progress = true;
            break;
          }
        }
        if (!progress) undo(f, entry.record);
      }
    }
  }
  return any;
}

bool rebalance_5x(const Graph& g, ReductionState& st, const SolverConfig& cfg) {
  LinearForest& f = st.forest;
  for (Vertex e : f.end_vertices()) {
    const std::size_t li = f.path_length(e);
    for (Vertex w : g.neighbors(e)) {
      if (f.path_of(w) == f.path_of(e)) continue;
      if (f.is_endpoint(w)) continue;  // join_endpoints' job
      const std::size_t lj = f.path_length(w);
      if (lj < 5 * li) continue;
      auto seq = f.path_vertices(w);
      std::size_t p = std::find(seq.begin(), seq.end(), w) - seq.begin();
      // Keep the shorter side attached to w; break toward the longer side.
      std::size_t d1 = std::min(p, lj - 1 - p);
      Vertex far = p < lj - 1 - p ? seq[p + 1] : seq[p - 1];
      if (cfg.is_protected(w, far)) continue;
      std::size_t a = li + d1 + 1, b = lj - d1 - 1;
      if (a * a + b * b >= li * li + lj * lj) continue;
      f.remove_edge(w, far);
      f.add_edge(e, w);
      st.note_improvement();
      return true;
    }
  }
  return false;
}

bool join_endpoints(const Graph& g, ReductionState& st,
                    const SolverConfig& cfg) {
  (void)cfg;
  LinearForest& f = st.forest;
  bool any = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex e : f.end_vertices()) {
      if (!f.is_endpoint(e)) continue;  // may have changed within this pass
      for (Vertex w : g.neighbors(e)) {
        if (f.is_endpoint(w) && f.path_of(w) != f.path_of(e)) {
          f.add_edge(e, w);
          st.note_improvement();
          any = progress = true;
          break;
        }
      }
      if (progress) break;
    }
  }
  return any;
}

LinearForest initial_forest(const Graph& g, const SolverConfig& cfg) {
  const std::size_t n = g.vertex_count();
  LinearForest f = LinearForest::singletons(n);
  for (auto [a, b] : cfg.protected_edges) {
    if (!g.has_edge(a, b)) {
      throw InvalidInput("protected edge is not a graph edge");
    }
    f.add_edge(a, b);
  }
  for (Vertex u = 0; u < n; ++u) {
    if (f.degree(u) != 0) continue;
    for (Vertex w : g.neighbors(u)) {
      if (f.degree(w) == 0 && f.path_of(w) != f.path_of(u)) {
        f.add_edge(u, w);
        break;
      }
    }
  }
  return f;
}

LinearForest reduce_forest(const Graph& g, const LinearForest& f0,
                           const SolverConfig& cfg, ReductionReport* report,
                           const std::vector<Vertex>& keep,
                           std::vector<ReductionState::LogEntry>* log,
                           std::vector<MergeReport>* merge_log) {
  const std::size_t n = g.vertex_count();
  ReductionState st = ReductionState::of(f0);
  st.note_improvement();  // baseline entry
  const std::size_t target = cfg.target_paths(n);
  const std::size_t step_cap = n * n + n;
  VertexSet keep_set(n);
  for (Vertex v : keep) keep_set.insert(v);

  bool merges_open = true;
  while (st.log.size() < step_cap) {
    if (absorb_isolated(g, st, cfg)) continue;
    if (join_endpoints(g, st, cfg)) continue;
    if (rebalance_5x(g, st, cfg)) continue;
    if (!merges_open || st.forest.path_count() <= target) break;
    if (st.forest.has_isolated_vertex()) break;

    // Medium-mass gate mirrors merge_two_paths' own precondition.
    std::size_t mass = 0;
    for (std::size_t len : st.forest.lengths_desc()) {
      if (len >= cfg.medium_low && len <= cfg.medium_high(n)) mass += len;
    }
    if (static_cast<double>(mass) < cfg.mass_fraction * n) break;

    // Candidate endpoints from the shortest unkept paths.
    struct Cand {
      std::size_t len;
      Vertex end;
    };
    std::vector<Cand> cands;
    for (auto id : st.forest.path_ids()) {
      auto [ea, eb] = st.forest.path_ends(id);
      Vertex pick = kNoVertex;
      if (!keep_set.contains(ea)) {
        pick = ea;
      } else if (!keep_set.contains(eb)) {
        pick = eb;
      }
      if (pick != kNoVertex) {
        cands.push_back({st.forest.path_length_of_id(id), pick});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.len != b.len ? a.len < b.len : a.end < b.end;
    });
    bool merged = false;
    std::size_t tries = 0;
    for (std::size_t i = 0; i < cands.size() && !merged && tries < 6; ++i) {
      for (std::size_t j = i + 1; j < cands.size() && !merged && tries < 6;
           ++j) {
        ++tries;
        MergeReport rep =
            merge_two_paths(g, st.forest, cands[i].end, cands[j].end, cfg);
        if (merge_log) merge_log->push_back(rep);
        if (report) {
          rep.success ? ++report->merge_successes : ++report->merge_failures;
        }
        if (rep.success) {
          st.note_improvement();
          merged = true;
        }
      }
    }
    if (!merged) merges_open = false;
  }

  if (report) {
    report->improvements = st.log.size() - 1;
    report->isolated_free = !st.forest.has_isolated_vertex();
    report->reached_target = st.forest.path_count() <= target;
  }
  if (log) *log = st.log;
  return st.forest;
}

bool segment_growth_audit(const Graph& g, const LinearForest& f, Vertex v,
                          std::size_t k, const SolverConfig& cfg) {
  ReachOptions opts;
  opts.max_order = k;
  if (!cfg.protected_edges.empty()) opts.protected_edges = &cfg.protected_edges;
  VertexSet all = VertexSet::full(f.vertex_count());
  auto reach = endpoint_reach(g, f, v, all, opts);
  const double bound =
      std::pow(6.0, static_cast<double>(k) + 1.0) *
      static_cast<double>(f.path_length(v));
  for (const ReachEntry& entry : reach) {
    for (Vertex w : g.neighbors(entry.endpoint)) {
      if (static_cast<double>(f.path_length(w)) > bound) return false;
    }
  }
  return true;
}

}  // namespace hamex
