#ifndef HAMEX_REDUCTION_HPP
#define HAMEX_REDUCTION_HPP

#include <vector>

#include "hamex/config.hpp"
#include "hamex/engine.hpp"
#include "hamex/forest.hpp"

namespace hamex {

/// Forest plus its improvement log. The potential pair
/// (path count, sum of squared path lengths) strictly lex-decreases at
/// every logged step; total vertex count is invariant.
struct ReductionState {
  LinearForest forest;

  struct LogEntry {
    std::size_t step;
    std::size_t path_count;
    std::size_t sum_sq;
  };
  std::vector<LogEntry> log;

  static ReductionState of(LinearForest f);
  std::size_t sum_sq() const;
  void note_improvement();
};

/// Attaches isolated vertices: directly onto an adjacent endpoint of
/// another path when possible, otherwise by rotating the isolated vertex's
/// reach until some reached endpoint can join a different path. Commits
/// only improvements (path count drops); returns whether anything changed.
bool absorb_isolated(const Graph& g, ReductionState& st,
                     const SolverConfig& cfg);

/// Splices a path into a >= 5x longer one seen by one of its endpoints:
/// both replacement paths come out strictly shorter than the long one and
/// the squared-length sum strictly drops. First applicable move wins.
bool rebalance_5x(const Graph& g, ReductionState& st, const SolverConfig& cfg);

/// Adds one graph edge joining endpoints of two different paths.
bool join_endpoints(const Graph& g, ReductionState& st,
                    const SolverConfig& cfg);

struct ReductionReport {
  std::size_t improvements = 0;
  std::size_t merge_successes = 0;
  std::size_t merge_failures = 0;
  bool isolated_free = false;
  bool reached_target = false;
};

/// Greedy matching grown from ascending vertex ids; pre-seeds any
/// cfg-protected edges so they are present from the start.
LinearForest initial_forest(const Graph& g, const SolverConfig& cfg);

/// Drives f0 toward a lex-locally-minimal forest: absorb, join and
/// rebalance to fixpoint, invoking merge_two_paths on endpoints of the two
/// shortest unprotected paths while the path count exceeds
/// cfg.target_paths(n) and the medium-mass precondition holds. Endpoints
/// listed in `keep` are never chosen for merges. Best-effort; the report
/// says how far it got.
LinearForest reduce_forest(const Graph& g, const LinearForest& f0,
                           const SolverConfig& cfg,
                           ReductionReport* report = nullptr,
                           const std::vector<Vertex>& keep = {},
                           std::vector<ReductionState::LogEntry>* log = nullptr,
                           std::vector<MergeReport>* merge_log = nullptr);

/// Segment-growth containment N(E^k(v,F)) within paths of length at most
/// 6^{k+1}|seg(v)|; a test oracle for local minimality, not a solve step.
bool segment_growth_audit(const Graph& g, const LinearForest& f, Vertex v,
                          std::size_t k, const SolverConfig& cfg);

}  // namespace hamex

#endif
