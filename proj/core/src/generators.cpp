#include "hamex/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace hamex {

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n * d % 2 != 0) throw InvalidInput("n*d must be even");
  if (d >= n) throw InvalidInput("degree must be below n");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    // Configuration model: pair up d stubs per vertex, reject collisions.
    std::vector<Vertex> stubs;
    stubs.reserve(n * d);
    for (Vertex v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < d; ++i) stubs.push_back(v);
    }
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<std::pair<Vertex, Vertex>> edges;
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < stubs.size(); i += 2) {
      // Repair collisions locally: swap the partner with a random later
      // stub instead of rejecting the whole pairing.
      bool placed = false;
      for (int tries = 0; tries < 200; ++tries) {
        Vertex u = stubs[i], v = stubs[i + 1];
        if (u > v) std::swap(u, v);
        if (u != v && !seen.contains({u, v})) {
          seen.emplace(u, v);
          edges.emplace_back(u, v);
          placed = true;
          break;
        }
        if (i + 2 >= stubs.size()) break;
        std::uniform_int_distribution<std::size_t> pick(i + 2,
                                                        stubs.size() - 1);
        std::swap(stubs[i + 1], stubs[pick(rng)]);
      }
      ok = placed;
    }
    if (ok) return Graph(n, std::move(edges));
  }
  throw InvalidInput("configuration model failed after 1000 restarts");
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw InvalidInput("p must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

// Element-indexed multiplication tables so every group uses the same
// Cayley construction below.
struct GroupTable {
  std::size_t order;
  std::vector<std::vector<std::uint32_t>> mul;  // mul[a][b] = a*b
  std::vector<std::uint32_t> inv;
};

GroupTable cyclic_table(std::size_t n) {
  GroupTable t{n, {}, {}};
  t.mul.assign(n, std::vector<std::uint32_t>(n));
  t.inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
    t.inv[a] = (n - a) % n;
  }
  return t;
}

GroupTable z2k_table(std::size_t k) {
  std::size_t n = std::size_t{1} << k;
  GroupTable t{n, {}, {}};
  t.mul.assign(n, std::vector<std::uint32_t>(n));
  t.inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t.mul[a][b] = a ^ b;
    t.inv[a] = a;
  }
  return t;
}

// D_n encoded as (r, s) -> index s*n + r with relations r^n = s^2 = e,
// s r = r^{-1} s.
GroupTable dihedral_table(std::size_t n) {
  std::size_t order = 2 * n;
  GroupTable t{order, {}, {}};
  t.mul.assign(order, std::vector<std::uint32_t>(order));
  t.inv.assign(order, 0);
  auto idx = [n](std::size_t r, std::size_t s) { return s * n + r; };
  for (std::size_t s1 = 0; s1 < 2; ++s1) {
    for (std::size_t r1 = 0; r1 < n; ++r1) {
      for (std::size_t s2 = 0; s2 < 2; ++s2) {
        for (std::size_t r2 = 0; r2 < n; ++r2) {
          std::size_t r = s2 == 0 ? (r1 + r2) % n : (n + r2 - r1) % n;
          t.mul[idx(r1, s1)][idx(r2, s2)] = idx(r, s1 ^ s2);
        }
      }
      t.inv[idx(r1, s1)] =
          s1 == 0 ? idx((n - r1) % n, 0) : idx(r1, 1);
    }
  }
  return t;
}

GroupTable symmetric_table(std::size_t k) {
  if (k > 8) throw InvalidInput("symmetric group supported up to k=8");
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::uint8_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::size_t n = perms.size();
  GroupTable t{n, {}, {}};
  t.mul.assign(n, std::vector<std::uint32_t>(n));
  t.inv.assign(n, 0);
  std::vector<std::uint8_t> comp(k), inv(k);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) comp[i] = perms[a][perms[b][i]];
      t.mul[a][b] = index[comp];
    }
    for (std::size_t i = 0; i < k; ++i) inv[perms[a][i]] = i;
    t.inv[a] = index[inv];
  }
  return t;
}

}  // namespace

Graph random_cayley(GroupKind kind, std::size_t param, std::size_t d,
                    std::uint64_t seed) {
  GroupTable table;
  switch (kind) {
    case GroupKind::Cyclic: table = cyclic_table(param); break;
    case GroupKind::PowerOfZ2: table = z2k_table(param); break;
    case GroupKind::Dihedral: table = dihedral_table(param); break;
    case GroupKind::Symmetric: table = symmetric_table(param); break;
  }
  std::size_t order = table.order;
  if (d >= order) throw InvalidInput("connection set size must be below order");
  std::mt19937_64 rng(seed);
  // Uniform d-subset of non-identity elements, then symmetrized.
  std::vector<std::uint32_t> pool(order - 1);
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::set<std::uint32_t> conn;
  for (std::size_t i = 0; i < d; ++i) {
    conn.insert(pool[i]);
    conn.insert(table.inv[pool[i]]);
  }
  std::set<std::pair<Vertex, Vertex>> edge_set;
  for (std::uint32_t x = 0; x < order; ++x) {
    for (std::uint32_t s : conn) {
      std::uint32_t y = table.mul[x][s];
      if (x < y) edge_set.emplace(x, y);
      else edge_set.emplace(y, x);
    }
  }
  return Graph(order, {edge_set.begin(), edge_set.end()});
}

Graph fixture(const std::string& name) {
  auto parse_args = [&](std::size_t expect) {
    std::vector<std::size_t> args;
    auto open = name.find('(');
    if (open == std::string::npos || name.back() != ')') {
      throw InvalidInput("fixture " + name + " needs arguments");
    }
    std::istringstream ss(name.substr(open + 1, name.size() - open - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) args.push_back(std::stoull(tok));
    if (args.size() != expect) throw InvalidInput("bad fixture arguments");
    return args;
  };

  if (name == "petersen") {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);        // outer cycle
      edges.emplace_back(i, i + 5);              // spokes
      edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, std::move(edges));
  }
  if (name.starts_with("complete_bipartite")) {
    auto args = parse_args(2);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < args[0]; ++u) {
      for (Vertex v = 0; v < args[1]; ++v) {
        edges.emplace_back(u, static_cast<Vertex>(args[0] + v));
      }
    }
    return Graph(args[0] + args[1], std::move(edges));
  }
  if (name.starts_with("complete")) {
    auto n = parse_args(1)[0];
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
  }
  if (name.starts_with("path")) {
    auto n = parse_args(1)[0];
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
  }
  if (name.starts_with("cycle")) {
    auto n = parse_args(1)[0];
    if (n < 3) throw InvalidInput("cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
  }
  throw InvalidInput("unknown fixture " + name);
}

}  // namespace hamex
