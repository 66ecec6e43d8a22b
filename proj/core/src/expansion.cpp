#include "hamex/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Dense>
#include <json.hpp>

namespace hamex {

namespace {

const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Certified: return "certified";
    case VerdictStatus::Refuted: return "refuted";
    default: return "inconclusive";
  }
}

const char* mode_name(VerdictMode m) {
  switch (m) {
    case VerdictMode::Exact: return "exact";
    case VerdictMode::Sampled: return "sampled";
    default: return "spectral";
  }
}

ExpansionVerdict make(VerdictStatus s, VerdictMode m, std::string detail = {},
                      std::optional<VertexSet> witness = std::nullopt) {
  ExpansionVerdict v;
  v.status = s;
  v.mode = m;
  v.detail = std::move(detail);
  v.witness = std::move(witness);
  return v;
}

// Outer neighbourhood size of the set marked in `in`, via a scratch flag
// array; also fills `hit` with the neighbourhood when non-null.
std::size_t outer_size(const Graph& g, const std::vector<Vertex>& members,
                       const VertexSet& in, VertexSet* hit) {
  std::size_t count = 0;
  VertexSet local(g.vertex_count());
  VertexSet& nb = hit ? *hit : local;
  nb.clear();
  for (Vertex v : members) {
    for (Vertex w : g.neighbors(v)) {
      if (!in.contains(w) && !nb.contains(w)) {
        nb.insert(w);
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

std::string ExpansionVerdict::to_json() const {
  nlohmann::json j;
  j["status"] = status_name(status);
  j["mode"] = mode_name(mode);
  if (witness) j["witness"] = witness->members();
  if (!detail.empty()) j["detail"] = detail;
  return j.dump();
}

ExpansionVerdict check_c_expander_exact(const Graph& g, double C,
                                        std::size_t cap) {
  if (C <= 0) throw InvalidInput("C must be positive");
  const std::size_t n = g.vertex_count();
  if (n > cap || n > 25) {
    return make(VerdictStatus::Inconclusive, VerdictMode::Exact,
                "graph above exact cap; use the sampled checker");
  }
  const double small_bound = n / (2.0 * C);  // condition (a): |X| < this
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  auto to_set = [&](std::uint32_t mask) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) s.insert(v);
    }
    return s;
  };
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t nb = 0;
    for (std::uint32_t rest = mask; rest;) {
      Vertex v = std::countr_zero(rest);
      rest &= rest - 1;
      nb |= adj[v];
    }
    nb &= ~mask;
    std::size_t xs = std::popcount(mask);
    std::size_t ns = std::popcount(nb);
    if (xs < small_bound && ns < C * xs) {
      return make(VerdictStatus::Refuted, VerdictMode::Exact,
                  "condition (a): |N(X)| < C|X|", to_set(mask));
    }
    // Condition (b) fails iff some X of size >= n/2C leaves an untouched
    // remainder of size >= n/2C (which then serves as Y).
    std::size_t untouched = std::popcount(full & ~(mask | nb));
    if (xs >= small_bound && untouched >= small_bound && small_bound > 0) {
      return make(VerdictStatus::Refuted, VerdictMode::Exact,
                  "condition (b): no edge to the residual set", to_set(mask));
    }
  }
  return make(VerdictStatus::Certified, VerdictMode::Exact);
}

ExpansionVerdict check_c_expander_sampled(const Graph& g, double C,
                                          const SolverConfig& cfg) {
  if (C <= 0) throw InvalidInput("C must be positive");
  const std::size_t n = g.vertex_count();
  const double small_bound = n / (2.0 * C);
  VertexSet in(n);

  auto check_a = [&](const std::vector<Vertex>& members)
      -> std::optional<ExpansionVerdict> {
    if (members.size() >= small_bound) return std::nullopt;
    in.clear();
    for (Vertex v : members) in.insert(v);
    if (outer_size(g, members, in, nullptr) <
        C * static_cast<double>(members.size())) {
      return make(VerdictStatus::Refuted, VerdictMode::Sampled,
                  "condition (a): |N(X)| < C|X|", VertexSet::of(n, members));
    }
    return std::nullopt;
  };

  for (Vertex v = 0; v < n; ++v) {
    if (auto bad = check_a({v})) return *bad;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (auto bad = check_a({u, v})) return *bad;
    }
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::size_t max_small = small_bound > 1
                              ? static_cast<std::size_t>(
                                    std::ceil(small_bound)) - 1
                              : 0;
  for (std::size_t t = 0; t < cfg.sample_count && max_small >= 3; ++t) {
    std::uniform_int_distribution<std::size_t> size_dist(3, max_small);
    std::size_t s = size_dist(rng);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Vertex> members(pool.begin(), pool.begin() + s);
    if (auto bad = check_a(members)) return *bad;
  }

  // Condition (b): random X of threshold size whose closed neighbourhood
  // misses a threshold-sized remainder would refute.
  std::size_t tb = static_cast<std::size_t>(std::ceil(small_bound));
  for (std::size_t t = 0; t < cfg.sample_count && tb >= 1 && 2 * tb <= n; ++t) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Vertex> members(pool.begin(), pool.begin() + tb);
    in.clear();
    for (Vertex v : members) in.insert(v);
    VertexSet nb(n);
    outer_size(g, members, in, &nb);
    std::size_t untouched = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!in.contains(v) && !nb.contains(v)) ++untouched;
    }
    if (untouched >= small_bound) {
      return make(VerdictStatus::Refuted, VerdictMode::Sampled,
                  "condition (b): no edge to the residual set",
                  VertexSet::of(n, members));
    }
  }
  return make(VerdictStatus::Inconclusive, VerdictMode::Sampled,
              "no counterexample found");
}

ExpansionVerdict expands_into(const Graph& g, const VertexSet& u,
                              const VertexSet& target, double C,
                              const SolverConfig& cfg) {
  if (C <= 0) throw InvalidInput("C must be positive");
  if (u.size() < cfg.expands_into_floor) {
    throw InvalidInput("expands_into: |u| below configured floor");
  }
  const std::size_t n = g.vertex_count();
  const std::size_t bound = std::max<std::size_t>(
      1, static_cast<std::size_t>(u.size() /
                                  (cfg.expand_fraction_divisor * C)));
  auto check = [&](const std::vector<Vertex>& members)
      -> std::optional<ExpansionVerdict> {
    VertexSet in = VertexSet::of(n, members);
    std::size_t hit = 0;
    VertexSet seen(n);
    for (Vertex v : members) {
      for (Vertex w : g.neighbors(v)) {
        if (!in.contains(w) && target.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          ++hit;
        }
      }
    }
    if (hit < C * static_cast<double>(members.size())) {
      return make(VerdictStatus::Refuted, VerdictMode::Sampled,
                  "|N(X) ∩ target| < C|X|", std::move(in));
    }
    return std::nullopt;
  };

  std::vector<Vertex> mem = u.members();
  if (u.size() <= cfg.exact_cap && u.size() <= 25) {
    // Exhaustive over subsets of u up to the size bound.
    std::size_t m = mem.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) > bound) continue;
      std::vector<Vertex> members;
      for (std::uint32_t rest = mask; rest;) {
        members.push_back(mem[std::countr_zero(rest)]);
        rest &= rest - 1;
      }
      if (auto bad = check(members)) {
        bad->mode = VerdictMode::Exact;
        return *bad;
      }
    }
    return make(VerdictStatus::Certified, VerdictMode::Exact);
  }

  for (Vertex v : mem) {
    if (auto bad = check({v})) return *bad;
  }
  if (bound >= 2 && mem.size() <= 400) {
    for (std::size_t i = 0; i < mem.size(); ++i) {
      for (std::size_t j = i + 1; j < mem.size(); ++j) {
        if (auto bad = check({mem[i], mem[j]})) return *bad;
      }
    }
  }
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t t = 0; t < cfg.sample_count && bound >= 2; ++t) {
    std::uniform_int_distribution<std::size_t> size_dist(2, bound);
    std::size_t s = size_dist(rng);
    std::shuffle(mem.begin(), mem.end(), rng);
    std::vector<Vertex> members(mem.begin(), mem.begin() + s);
    if (auto bad = check(members)) return *bad;
  }
  return make(VerdictStatus::Inconclusive, VerdictMode::Sampled,
              "no counterexample found");
}

std::array<VertexSet, 4> extract_forest_expanders(
    const Graph& g, const LinearForest& f,
    const std::array<VertexSet, 4>& parts, const SolverConfig& cfg) {
  const std::size_t n = g.vertex_count();
  const std::size_t interior_floor = std::max<std::size_t>(
      1, static_cast<std::size_t>(n / cfg.interior_mass_divisor));
  std::array<VertexSet, 4> cur = parts;
  std::array<VertexSet, 4> ints;
  for (int i = 0; i < 4; ++i) {
    ints[i] = interior(f, cur[i]);
    if (ints[i].size() == 0) {
      throw InvalidInput("extract_forest_expanders: part " +
                         std::to_string(i) + " has empty interior");
    }
    if (ints[i].size() < interior_floor) {
      throw ExpansionFailure("extract_forest_expanders",
                             "part " + std::to_string(i) +
                                 " interior below mass threshold");
    }
  }

  const std::size_t cap = static_cast<std::size_t>(2.0 * n / cfg.C);
  std::array<std::array<std::size_t, 4>, 4> discarded{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < 4 && !changed; ++i) {
      for (int j = 0; j < 4 && !changed; ++j) {
        if (i == j) continue;
        for (Vertex v : cur[i].members()) {
          std::size_t hits = 0;
          for (Vertex w : g.neighbors(v)) {
            if (ints[j].contains(w)) ++hits;
          }
          if (static_cast<double>(hits) < cfg.C_prime) {
            cur[i].erase(v);
            ints[i] = interior(f, cur[i]);
            if (ints[i].size() < interior_floor) {
              throw ExpansionFailure("extract_forest_expanders",
                                     "part " + std::to_string(i) +
                                         " interior collapsed during cleaning");
            }
            if (++discarded[i][j] > cap) {
              throw ExpansionFailure(
                  "extract_forest_expanders",
                  "discard cap exceeded for part " + std::to_string(i) +
                      " against part " + std::to_string(j));
            }
            changed = true;
            break;
          }
        }
      }
    }
  }
  return cur;
}

std::string SpectralReport::to_json() const {
  nlohmann::json j;
  j["regular"] = regular;
  if (regular) {
    j["d"] = degree;
    j["lambda"] = lambda;
    j["residual"] = residual;
    j["mode"] = dense ? "dense" : "power";
  } else {
    j["max_degree"] = degree;
    j["min_degree"] = min_degree;
  }
  return j.dump();
}

namespace {

// Largest eigenvalue of (A + shift*sign) restricted to the complement of
// the all-ones direction, by deflated power iteration.
double deflated_power(const Graph& g, double sign, double shift, double tol,
                      std::size_t iter_cap, double& residual_out) {
  const std::size_t n = g.vertex_count();
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> gauss;
  std::vector<double> x(n), y(n);
  for (double& xi : x) xi = gauss(rng);
  auto deflate = [&](std::vector<double>& v) {
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    for (double& vi : v) vi -= mean;
  };
  auto norm = [&](const std::vector<double>& v) {
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  };
  deflate(x);
  double nx = norm(x);
  for (double& xi : x) xi /= nx;
  double mu = 0.0;
  residual_out = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < iter_cap; ++it) {
    for (std::size_t v = 0; v < n; ++v) {
      double acc = shift * x[v];
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
        acc += sign * x[w];
      }
      y[v] = acc;
    }
    deflate(y);
    mu = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double res = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      double r = y[v] - mu * x[v];
      res += r * r;
    }
    residual_out = std::sqrt(res);
    double ny = norm(y);
    if (ny == 0.0) { residual_out = 0.0; return mu; }
    for (std::size_t v = 0; v < n; ++v) x[v] = y[v] / ny;
    if (residual_out < tol) break;
  }
  return mu;
}

}  // namespace

SpectralReport estimate_lambda(const Graph& g, std::size_t dense_cap,
                               double tol, std::size_t iter_cap) {
  SpectralReport rep;
  const std::size_t n = g.vertex_count();
  rep.degree = g.max_degree();
  rep.min_degree = g.min_degree();
  rep.regular = n > 0 && rep.degree == rep.min_degree;
  if (!rep.regular || n < 2) return rep;
  const double d = static_cast<double>(rep.degree);

  if (n <= dense_cap) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
      a(u, v) = 1.0;
      a(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    const auto& ev = solver.eigenvalues();  // ascending
    rep.lambda = std::max(std::abs(ev(n - 2)), std::abs(ev(0)));
    rep.dense = true;
    return rep;
  }
  // Shifted spectra keep the target eigenvalue dominant and positive:
  // A + dI finds mu_2 + d, dI - A finds d - mu_n.
  double r1 = 0.0, r2 = 0.0;
  double top = deflated_power(g, 1.0, d, tol, iter_cap, r1) - d;
  double bot = d - deflated_power(g, -1.0, d, tol, iter_cap, r2);
  rep.lambda = std::max(std::abs(top), std::abs(bot));
  rep.residual = std::max(r1, r2);
  return rep;
}

double mixing_audit(const Graph& g, double lambda, std::size_t trials,
                    std::uint64_t seed) {
  if (!g.is_regular()) throw InvalidInput("mixing_audit: graph not regular");
  if (lambda <= 0) throw InvalidInput("mixing_audit: lambda must be positive");
  const std::size_t n = g.vertex_count();
  if (n < 2) return 0.0;
  const double d = static_cast<double>(g.max_degree());
  std::mt19937_64 rng(seed);
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> side(n, 0);  // 0 = neither, 1 = S, 2 = T
  double worst = 0.0;
  std::uniform_int_distribution<std::size_t> size_dist(1, n / 2);
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t s = size_dist(rng), tt = size_dist(rng);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::fill(side.begin(), side.end(), 0);
    for (std::size_t i = 0; i < s; ++i) side[pool[i]] = 1;
    for (std::size_t i = s; i < s + tt; ++i) side[pool[i]] = 2;
    std::size_t between = 0;
    for (auto [u, v] : g.edges()) {
      if ((side[u] == 1 && side[v] == 2) || (side[u] == 2 && side[v] == 1)) {
        ++between;
      }
    }
    double expect = d * static_cast<double>(s) * static_cast<double>(tt) / n;
    double dev = std::abs(static_cast<double>(between) - expect) /
                 (lambda * std::sqrt(static_cast<double>(s) *
                                     static_cast<double>(tt)));
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace hamex
