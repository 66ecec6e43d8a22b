#ifndef HAMEX_EXPANSION_HPP
#define HAMEX_EXPANSION_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "hamex/config.hpp"
#include "hamex/forest.hpp"
#include "hamex/graph.hpp"

namespace hamex {

/// Raised when an expansion-dependent stage cannot proceed at the current
/// scale (discard caps exceeded, interiors too small, ...). Callers treat
/// this as "fall back", not as a bug.
struct ExpansionFailure : std::runtime_error {
  explicit ExpansionFailure(const std::string& stage_, const std::string& what_)
      : std::runtime_error(stage_ + ": " + what_), stage(stage_) {}
  std::string stage;
};

enum class VerdictStatus { Certified, Refuted, Inconclusive };
enum class VerdictMode { Exact, Sampled, Spectral };

struct ExpansionVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  VerdictMode mode = VerdictMode::Exact;
  std::optional<VertexSet> witness;  // always present when refuted
  std::string detail;

  bool refuted() const { return status == VerdictStatus::Refuted; }
  bool passed() const { return status != VerdictStatus::Refuted; }
  std::string to_json() const;
};

/// Exhaustive check of both defining conditions over all subsets.
/// Refuses (inconclusive) above `cap` vertices.
ExpansionVerdict check_c_expander_exact(const Graph& g, double C,
                                        std::size_t cap = 20);

/// Singletons and pairs exhaustively, then cfg.sample_count random sets per
/// condition. Refuted only with a re-verified witness; otherwise
/// inconclusive (no counterexample found).
ExpansionVerdict check_c_expander_sampled(const Graph& g, double C,
                                          const SolverConfig& cfg);

/// Does u C-expand into target: every X subset of u with
/// |X| <= |u| / (cfg.expand_fraction_divisor * C) has
/// |N(X) ∩ target| >= C|X|. Exact when |u| <= cfg.exact_cap, sampled above.
/// Throws InvalidInput when |u| < cfg.expands_into_floor.
ExpansionVerdict expands_into(const Graph& g, const VertexSet& u,
                              const VertexSet& target, double C,
                              const SolverConfig& cfg);

/// Greedy one-vertex-at-a-time cleaning: from each part, repeatedly discard
/// any vertex with fewer than cfg.C_prime neighbours in the current
/// interior of every other part, until a fixpoint. Returns the surviving
/// subsets; throws ExpansionFailure if any discard pile exceeds 2n/C or a
/// part's interior is below n / cfg.interior_mass_divisor, InvalidInput if
/// an interior is empty.
std::array<VertexSet, 4> extract_forest_expanders(
    const Graph& g, const LinearForest& f,
    const std::array<VertexSet, 4>& parts, const SolverConfig& cfg);

struct SpectralReport {
  bool regular = false;
  std::size_t degree = 0;      // degree if regular, else max degree
  std::size_t min_degree = 0;  // meaningful only when not regular
  double lambda = 0.0;         // second eigenvalue in absolute value
  double residual = 0.0;       // achieved power-iteration residual (0 = dense)
  bool dense = false;
  std::string to_json() const;
};

/// Second-largest adjacency eigenvalue in absolute value. Dense symmetric
/// eigensolve up to dense_cap vertices, deflated power iteration above.
/// Non-regular graphs are flagged and carry no lambda.
SpectralReport estimate_lambda(const Graph& g, std::size_t dense_cap = 500,
                               double tol = 1e-8,
                               std::size_t iter_cap = 100000);

/// Max over `trials` random disjoint S,T of
/// |e(S,T) - d|S||T|/n| / (lambda sqrt(|S||T|)); at most 1 is consistent
/// with the mixing lemma. Throws InvalidInput on non-regular input.
double mixing_audit(const Graph& g, double lambda, std::size_t trials,
                    std::uint64_t seed);

}  // namespace hamex

#endif
