#include "hamex/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

namespace hamex {

HeldKarpResult held_karp(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw InvalidInput("held_karp: n > 20");
  HeldKarpResult res;
  if (n < 3) return res;

  std::vector<std::uint32_t> adjm(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adjm[v] |= 1u << w;
  }

  // dp[mask] = endpoints v of simple paths that start at 0 and cover mask.
  const std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
  std::vector<std::uint32_t> dp(std::size_t(1) << n, 0);
  dp[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!(mask & 1) || dp[mask] == 0) continue;
    std::uint32_t ends = dp[mask];
    while (ends) {
      Vertex v = static_cast<Vertex>(std::countr_zero(ends));
      ends &= ends - 1;
      std::uint32_t nxt = adjm[v] & ~mask;
      while (nxt) {
        Vertex w = static_cast<Vertex>(std::countr_zero(nxt));
        nxt &= nxt - 1;
        dp[mask | (1u << w)] |= 1u << w;
      }
    }
  }

  std::uint32_t closers = dp[full] & adjm[0];
  if (closers == 0) return res;

  // Reconstruct a witness backwards from any end adjacent to 0.
  res.hamiltonian = true;
  Vertex v = static_cast<Vertex>(std::countr_zero(closers));
  std::uint32_t mask = full;
  std::vector<Vertex> rev;
  while (v != 0) {
    rev.push_back(v);
    std::uint32_t prev_mask = mask ^ (1u << v);
    std::uint32_t prevs = dp[prev_mask] & adjm[v];
    v = static_cast<Vertex>(std::countr_zero(prevs));
    mask = prev_mask;
  }
  rev.push_back(0);
  res.cycle.assign(rev.rbegin(), rev.rend());
  return res;
}

namespace {

constexpr std::size_t kStateCap = 1000000;

using Adj = std::vector<std::array<Vertex, 2>>;

std::size_t adeg(const Adj& a, Vertex v) {
  return (a[v][0] != kNoVertex) + (a[v][1] != kNoVertex);
}

void aadd(Adj& a, Vertex u, Vertex v) {
  auto slot = [&](Vertex x) -> Vertex& {
    if (a[x][0] == kNoVertex) return a[x][0];
    if (a[x][1] == kNoVertex) return a[x][1];
    throw InvalidInput("enumerate_rotations: degree overflow");
  };
  slot(u) = v;
  slot(v) = u;
}

void aremove(Adj& a, Vertex u, Vertex v) {
  auto drop = [&](Vertex x, Vertex y) {
    if (a[x][0] == y) {
      a[x][0] = kNoVertex;
    } else if (a[x][1] == y) {
      a[x][1] = kNoVertex;
    } else {
      throw InvalidInput("enumerate_rotations: missing edge");
    }
  };
  drop(u, v);
  drop(v, u);
}

bool same_pair(const std::array<Vertex, 2>& a, const std::array<Vertex, 2>& b) {
  return (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0]);
}

}  // namespace

std::vector<Vertex> enumerate_rotations(const Graph& g, const LinearForest& f,
                                        Vertex v, const VertexSet& u,
                                        std::size_t k) {
  const std::size_t n = f.vertex_count();
  if (v >= n) throw InvalidInput("enumerate_rotations: v out of range");

  Adj orig(n);
  for (Vertex i = 0; i < n; ++i) orig[i] = f.neighbors(i);
  if (adeg(orig, v) > 1) {
    throw InvalidInput("enumerate_rotations: v is not an endpoint");
  }
  Adj cur = orig;

  std::vector<char> int_u(n, 0);
  for (Vertex w : u.members()) {
    bool all_in = true;
    for (Vertex nb : orig[w]) {
      if (nb != kNoVertex && !u.contains(nb)) all_in = false;
    }
    int_u[w] = all_in;
  }

  // Distance <= 2 in the original forest from c.
  auto ball2 = [&](Vertex c, std::vector<char>& out) {
    out[c] = 1;
    for (Vertex a : orig[c]) {
      if (a == kNoVertex) continue;
      out[a] = 1;
      for (Vertex b : orig[a]) {
        if (b != kNoVertex) out[b] = 1;
      }
    }
  };

  std::vector<char> reached(n, 0);
  reached[v] = 1;
  std::size_t states = 0;

  std::vector<char> base_excl(n, 0);
  ball2(v, base_excl);

  // Exhaustive DFS over every legal rotation sequence (no canonical-order
  // pruning); only the output set is deduplicated.
  std::function<void(Vertex, std::size_t, const std::vector<char>&)> dfs =
      [&](Vertex e, std::size_t depth, const std::vector<char>& excl) {
        if (++states > kStateCap) {
          throw InvalidInput("enumerate_rotations: state cap exceeded");
        }
        if (depth == k) return;

        // Walk e's current path for the same-path closer-neighbour rule.
        std::vector<int> pos(n, -1);
        {
          Vertex prev = kNoVertex, at = e;
          int idx = 0;
          while (at != kNoVertex) {
            pos[at] = idx++;
            Vertex nxt = kNoVertex;
            for (Vertex nb : cur[at]) {
              if (nb != kNoVertex && nb != prev) nxt = nb;
            }
            prev = at;
            at = nxt;
          }
        }

        for (Vertex z : g.neighbors(e)) {
          if (!int_u[z] || excl[z]) continue;
          if (!same_pair(cur[z], orig[z])) continue;

          std::array<Vertex, 2> cands{kNoVertex, kNoVertex};
          if (adeg(cur, z) == 0) {
            cands[0] = z;
          } else if (pos[z] >= 0) {
            for (Vertex nb : cur[z]) {
              if (nb != kNoVertex && pos[nb] + 1 == pos[z]) cands[0] = nb;
            }
          } else {
            cands = cur[z];
          }

          for (Vertex y : cands) {
            if (y == kNoVertex || y == e) continue;
            if (y != z) aremove(cur, z, y);
            aadd(cur, e, z);
            reached[y] = 1;
            std::vector<char> child_excl = excl;
            ball2(z, child_excl);
            dfs(y, depth + 1, child_excl);
            aremove(cur, e, z);
            if (y != z) aadd(cur, z, y);
          }
        }
      };
  dfs(v, 0, base_excl);

  std::vector<Vertex> out;
  for (Vertex i = 0; i < n; ++i) {
    if (reached[i]) out.push_back(i);
  }
  return out;
}

bool verify_linking_exhaustive(const LinkingStructure& ls) {
  const std::size_t w = ls.width();
  if (w > 5) throw InvalidInput("verify_linking_exhaustive: width > 5");
  const std::size_t nv = ls.graph.vertex_count();

  std::vector<std::size_t> phi(w);
  std::iota(phi.begin(), phi.end(), 0);
  do {
    std::vector<std::vector<Vertex>> routes;
    try {
      routes = link(ls, phi);
    } catch (const std::exception&) {
      return false;
    }
    if (routes.size() != w) return false;
    std::vector<char> used(nv, 0);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < w; ++i) {
      const auto& r = routes[i];
      if (r.empty() || r.size() != routes[0].size()) return false;
      if (r.front() != ls.a_side[i] || r.back() != ls.b_side[phi[i]]) {
        return false;
      }
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] >= nv || used[r[j]]) return false;
        used[r[j]] = 1;
        ++covered;
        if (j + 1 < r.size() && !ls.graph.has_edge(r[j], r[j + 1])) {
          return false;
        }
      }
    }
    if (covered != nv) return false;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return true;
}

}  // namespace hamex
