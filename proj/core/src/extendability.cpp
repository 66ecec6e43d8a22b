#include "hamex/extendability.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <random>

#include "json.hpp"

namespace hamex {

namespace {

/// Signed slack of the deficiency condition for one set S; negative means
/// the condition is violated.
long long deficiency_slack(const ExtendableEmbedding& emb, const VertexSet& s) {
  const Graph& g = *emb.host;
  VertexSet gamma = outer_neighborhood(g, s);
  long long lhs = 0;
  for (Vertex v : gamma.members()) {
    if (!emb.image.contains(v)) ++lhs;
  }
  long long rhs = static_cast<long long>((emb.D - 1) * s.size());
  for (Vertex v : s.members()) {
    if (emb.image.contains(v) && emb.h_degree[v] > 0) {
      rhs -= static_cast<long long>(emb.h_degree[v]) - 1;
    }
  }
  return lhs - rhs;
}

/// Number of size-s subsets, saturating at `cap`.
std::size_t binom_capped(std::size_t n, std::size_t s, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < s; ++i) {
    if (r > cap) return cap + 1;
    r = r * (n - i) / (i + 1);
  }
  return r;
}

}  // namespace

ExtendableEmbedding ExtendableEmbedding::empty(const Graph& g, std::size_t D,
                                               std::size_t m) {
  ExtendableEmbedding emb;
  emb.host = &g;
  emb.D = D;
  emb.m = m;
  emb.image = VertexSet(g.vertex_count());
  emb.h_degree.assign(g.vertex_count(), 0);
  return emb;
}

void ExtendableEmbedding::add_vertex(Vertex v) {
  if (v >= host->vertex_count()) throw InvalidInput("embed: vertex range");
  image.insert(v);
}

void ExtendableEmbedding::add_edge(Vertex a, Vertex b) {
  if (!host->has_edge(a, b)) throw InvalidInput("embed: not a host edge");
  if (h_degree[a] + 1 > D || h_degree[b] + 1 > D) {
    throw InvalidInput("embed: H-degree bound exceeded");
  }
  image.insert(a);
  image.insert(b);
  ++h_degree[a];
  ++h_degree[b];
  h_edges.emplace_back(std::min(a, b), std::max(a, b));
}

std::size_t ExtendableEmbedding::free_degree(Vertex v) const {
  std::size_t k = 0;
  for (Vertex w : host->neighbors(v)) {
    if (!image.contains(w)) ++k;
  }
  return k;
}

ExpansionVerdict deficiency_audit(const ExtendableEmbedding& emb,
                                  std::size_t s_max, std::size_t samples,
                                  std::uint64_t seed) {
  const Graph& g = *emb.host;
  const std::size_t n = g.vertex_count();
  const std::size_t s_top = 2 * emb.m;
  constexpr std::size_t kWorkCap = 300000;

  ExpansionVerdict v;
  auto refute = [&](const VertexSet& s) {
    v.status = VerdictStatus::Refuted;
    v.witness = s;
    v.detail = "deficiency condition violated, |S|=" +
               std::to_string(s.size());
    return v;
  };

  bool all_exhaustive = true;
  for (std::size_t s = 1; s <= std::min(s_max, s_top); ++s) {
    if (binom_capped(n, s, kWorkCap) > kWorkCap) {
      all_exhaustive = false;
      continue;
    }
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      VertexSet set(n);
      for (std::size_t i : idx) set.insert(static_cast<Vertex>(i));
      if (deficiency_slack(emb, set) < 0) return refute(set);
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == n - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (s_top > s_max) all_exhaustive = false;

  if (!all_exhaustive) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_pick(
        2, std::max<std::size_t>(2, s_top));
    std::uniform_int_distribution<Vertex> vert(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> members = emb.image.members();
    for (std::size_t t = 0; t < samples; ++t) {
      std::size_t s = size_pick(rng);
      VertexSet set(n);
      // Violations concentrate around V(H): bias half the draws there.
      bool near_h = !members.empty() && (t & 1);
      while (set.size() < s) {
        if (near_h && set.size() < std::min((s + 1) / 2, members.size())) {
          set.insert(members[rng() % members.size()]);
        } else {
          set.insert(vert(rng));
        }
      }
      if (deficiency_slack(emb, set) < 0) return refute(set);
    }
  }
  v.status = VerdictStatus::Certified;
  v.mode = all_exhaustive ? VerdictMode::Exact : VerdictMode::Sampled;
  v.detail = all_exhaustive ? "exhaustive to 2m" : "exhaustive small + sampled";
  return v;
}

ExtendResult extend_path(ExtendableEmbedding& emb, Vertex y,
                         std::optional<Vertex> x, std::size_t ell,
                         const SolverConfig& cfg, std::uint64_t seed,
                         const VertexSet* avoid) {
  const Graph& g = *emb.host;
  const std::size_t n = g.vertex_count();
  if (ell == 0) throw InvalidInput("extend: zero-length path");
  if (!emb.image.contains(y)) throw InvalidInput("extend: anchor not embedded");
  if (emb.h_degree[y] + 1 > emb.D) throw InvalidInput("extend: anchor full");
  if (x) {
    if (*x == y) throw InvalidInput("extend: coincident anchors");
    if (!emb.image.contains(*x)) {
      throw InvalidInput("extend: second anchor not embedded");
    }
    if (emb.h_degree[*x] + 1 > emb.D) throw InvalidInput("extend: anchor full");
  }
  if (emb.image.size() + ell + cfg.ext_degree > n) {
    throw InvalidInput("extend: embedding budget exceeded");
  }

  auto blocked = [&](Vertex w) {
    return emb.image.contains(w) || (avoid && avoid->contains(w));
  };

  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(
                                    1, cfg.embed_retries);
       ++attempt) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + attempt);

    // Two-anchor guidance: distance to x through currently free vertices.
    std::vector<std::uint32_t> dist;
    if (x) {
      dist.assign(n, UINT32_MAX);
      std::deque<Vertex> q{*x};
      dist[*x] = 0;
      while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        for (Vertex w : g.neighbors(u)) {
          if (dist[w] != UINT32_MAX || blocked(w)) continue;
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
      }
    }

    std::vector<Vertex> path{y};
    VertexSet used(n);
    used.insert(y);
    std::vector<std::vector<Vertex>> choices{{}};
    std::size_t expansions = 0;
    const std::size_t expansion_cap = 200 * ell + 1000;
    bool found = false;

    auto push_choices = [&] {
      Vertex cur = path.back();
      std::size_t remaining = ell - (path.size() - 1);
      std::vector<Vertex> cands;
      if (x && remaining == 1) {
        if (g.has_edge(cur, *x)) cands.push_back(*x);
      } else {
        for (Vertex w : g.neighbors(cur)) {
          if (blocked(w) || used.contains(w)) continue;
          if (x && (dist[w] == UINT32_MAX || dist[w] > remaining - 1)) continue;
          cands.push_back(w);
        }
        std::shuffle(cands.begin(), cands.end(), rng);
        std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
          return emb.free_degree(a) > emb.free_degree(b);
        });
        // DFS pops from the back, so best candidates go last.
        std::reverse(cands.begin(), cands.end());
      }
      choices.back() = std::move(cands);
    };
    push_choices();

    while (!choices.empty() && expansions < expansion_cap) {
      if (path.size() == ell + 1) {
        found = true;
        break;
      }
      if (choices.back().empty()) {
        choices.pop_back();
        if (path.size() > 1) {
          used.erase(path.back());
          path.pop_back();
        }
        continue;
      }
      Vertex next = choices.back().back();
      choices.back().pop_back();
      ++expansions;
      path.push_back(next);
      used.insert(next);
      choices.emplace_back();
      push_choices();
    }
    if (!found) continue;

    // Commit, audit, roll back on refutation.
    ExtendableEmbedding saved = emb;
    try {
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        emb.add_edge(path[i], path[i + 1]);
      }
    } catch (const InvalidInput&) {
      emb = saved;
      continue;
    }
    auto verdict =
        deficiency_audit(emb, cfg.s_max, cfg.sample_count, seed + attempt);
    if (verdict.passed()) {
      ExtendResult r;
      r.success = true;
      r.path = std::move(path);
      return r;
    }
    emb = saved;
  }
  ExtendResult r;
  r.failure = "retries exhausted without a certified extension";
  return r;
}

namespace {

EmbedResult embed_once(const Graph& g, const LinkingStructure& bp,
                       const SolverConfig& cfg, std::uint64_t seed,
                       const VertexSet* avoid) {
  const std::size_t n = g.vertex_count();
  const std::size_t bn = bp.graph.vertex_count();
  EmbedResult res;
  res.structure = bp;
  if (!validate_certificate(bp)) {
    throw InvalidInput("embed: blueprint certificate invalid");
  }
  const std::size_t width = bp.width();
  if (2 * bn + 4 * width + 2 * cfg.ext_degree > n) {
    throw InvalidInput("embed: host too small for the blueprint");
  }
  const std::size_t m = std::max<std::size_t>(1, cfg.ext_margin);
  ExtendableEmbedding emb =
      ExtendableEmbedding::empty(g, cfg.ext_degree, m);

  // Anchor path: one extendable path whose alternate vertices become the
  // 2*width terminals (a_0, b_0, a_1, b_1, ...).
  std::mt19937_64 rng(seed);
  Vertex start = static_cast<Vertex>(rng() % n);
  while (avoid && avoid->contains(start)) {
    start = static_cast<Vertex>(rng() % n);
  }
  emb.add_vertex(start);
  const std::size_t anchor_len = 4 * width - 2;
  auto anchor = extend_path(emb, start, std::nullopt, anchor_len, cfg,
                            seed ^ 0xabcdefull, avoid);
  if (!anchor.success) {
    res.failed_stage = "anchor-path";
    return res;
  }
  std::vector<Vertex>& image = res.structure.image;
  image.assign(bn, kNoVertex);
  for (std::size_t i = 0; i < width; ++i) {
    image[bp.a_side[i]] = anchor.path[4 * i];
    image[bp.b_side[i]] = anchor.path[4 * i + 2];
  }

  // Certificate paths, in order; each maps some fresh blueprint vertices to
  // fresh host vertices found by extend_path.
  std::size_t step = 0;
  for (const auto& cpath : bp.certificate) {
    ++step;
    Vertex front = image[cpath.front()], back = image[cpath.back()];
    const std::vector<Vertex>* local = &cpath;
    std::vector<Vertex> flipped;
    if (front == kNoVertex) {
      // Orient so the existing endpoint leads.
      flipped.assign(cpath.rbegin(), cpath.rend());
      local = &flipped;
      std::swap(front, back);
    }
    if (front == kNoVertex) {
      res.failed_stage = "certificate-order step " + std::to_string(step);
      return res;
    }
    std::optional<Vertex> tail;
    if (back != kNoVertex) tail = back;
    auto got = extend_path(emb, front, tail, local->size() - 1, cfg,
                           seed + 1000 * step, avoid);
    if (!got.success) {
      res.failed_stage = "certificate step " + std::to_string(step);
      return res;
    }
    for (std::size_t i = 0; i < local->size(); ++i) {
      Vertex bpv = (*local)[i];
      if (image[bpv] == kNoVertex) {
        image[bpv] = got.path[i];
      } else if (image[bpv] != got.path[i]) {
        res.failed_stage = "image-consistency step " + std::to_string(step);
        return res;
      }
    }
  }
  for (Vertex v : image) {
    if (v == kNoVertex) {
      res.failed_stage = "image-incomplete";
      return res;
    }
  }
  res.embedding = std::move(emb);
  res.success = true;
  return res;
}

}  // namespace

EmbedResult embed_constructible(const Graph& g, const LinkingStructure& bp,
                                const SolverConfig& cfg, std::uint64_t seed,
                                const VertexSet* avoid) {
  EmbedResult res;
  for (std::size_t round = 0; round < 4; ++round) {
    res = embed_once(g, bp, cfg, seed + 0x51ed2700ull * round, avoid);
    if (res.success) return res;
  }
  return res;
}

Partition partition_expander(const Graph& g, const SolverConfig& cfg,
                             std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  Partition part;

  auto host_check = check_c_expander_sampled(g, cfg.C, cfg);
  if (host_check.refuted()) {
    part.failed_stage = "host-expander-check";
    return part;
  }

  VertexSet avoid(n);
  std::optional<std::pair<Vertex, Vertex>> prot;
  if (!cfg.protected_edges.empty()) {
    prot = cfg.protected_edges.front();
    if (cfg.connector_len < 3) {
      throw InvalidInput("partition: connector too short for protected edge");
    }
    avoid.insert(prot->first);
    avoid.insert(prot->second);
  }

  const std::size_t width = cfg.linking_width(n);
  auto blueprint = build_linking_blueprint(width, cfg);
  auto emb_res = embed_constructible(g, blueprint, cfg, seed,
                                     avoid.empty() ? nullptr : &avoid);
  if (!emb_res.success) {
    part.failed_stage = "embed: " + emb_res.failed_stage;
    return part;
  }
  part.structure = std::move(emb_res.structure);
  ExtendableEmbedding emb = std::move(emb_res.embedding);

  part.a.resize(width);
  part.b.resize(width);
  for (std::size_t i = 0; i < width; ++i) {
    part.a[i] = part.structure.image[part.structure.a_side[i]];
    part.b[i] = part.structure.image[part.structure.b_side[i]];
  }

  // Connector paths: a_i to b_i, clen edges each, through fresh vertices.
  // A protected edge rides in the middle of connector 0; each half around
  // it is a two-anchor extension, which needs length >= 4 to find a route
  // reliably, so protected mode lengthens every connector to keep them
  // equal-sized.
  std::size_t clen = cfg.connector_len;
  if (prot && clen < 9) clen = 9;
  part.connectors = LinearForest::singletons(n);
  VertexSet connector_internal(n);
  for (std::size_t i = 0; i < width; ++i) {
    std::vector<Vertex> cpath;
    if (i == 0 && prot) {
      auto [px, py] = *prot;
      std::size_t l1 = (clen - 1) / 2;
      std::size_t l2 = clen - 1 - l1;
      emb.add_vertex(px);
      VertexSet avoid_py(n);
      avoid_py.insert(py);
      auto first =
          extend_path(emb, part.a[0], px, l1, cfg, seed + 7000, &avoid_py);
      if (!first.success) {
        part.failed_stage = "connector 0 (protected, front)";
        return part;
      }
      emb.add_edge(px, py);
      auto second = extend_path(emb, py, part.b[0], l2, cfg, seed + 7001);
      if (!second.success) {
        part.failed_stage = "connector 0 (protected, back)";
        return part;
      }
      cpath = first.path;
      cpath.insert(cpath.end(), second.path.begin(), second.path.end());
    } else {
      auto got = extend_path(emb, part.a[i], part.b[i], clen, cfg,
                             seed + 7000 + i);
      if (!got.success) {
        part.failed_stage = "connector " + std::to_string(i);
        return part;
      }
      cpath = std::move(got.path);
    }
    for (std::size_t j = 0; j + 1 < cpath.size(); ++j) {
      part.connectors.add_edge(cpath[j], cpath[j + 1]);
    }
    for (std::size_t j = 1; j + 1 < cpath.size(); ++j) {
      connector_internal.insert(cpath[j]);
    }
  }

  part.x = VertexSet::of(n, part.structure.image);
  part.y = connector_internal;
  part.z = VertexSet(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!part.x.contains(v) && !part.y.contains(v)) part.z.insert(v);
  }

  // Residual expansion audits at half the working constant; refutations are
  // reported so the pipeline can fall back.
  const double c_res = cfg.C / 2.0;
  part.z_audit =
      check_c_expander_sampled(induced_subgraph(g, part.z).graph, c_res, cfg);
  VertexSet zyab = part.z;
  for (Vertex v : part.y.members()) zyab.insert(v);
  for (Vertex v : part.a) zyab.insert(v);
  for (Vertex v : part.b) zyab.insert(v);
  part.zyab_audit =
      check_c_expander_sampled(induced_subgraph(g, zyab).graph, c_res, cfg);
  if (part.z_audit.refuted() || part.zyab_audit.refuted()) {
    part.failed_stage = "residual-expander-audit";
    return part;
  }
  part.success = true;
  return part;
}

void save_partition(std::ostream& out, const Partition& p) {
  nlohmann::json j;
  j["x"] = p.x.members();
  j["y"] = p.y.members();
  j["z"] = p.z.members();
  j["a"] = p.a;
  j["b"] = p.b;
  auto& jc = j["connector_forest"];
  jc = nlohmann::json::array();
  for (auto [u, v] : p.connectors.edges()) jc.push_back({u, v});
  out << j.dump(2) << "\n";
}

}  // namespace hamex
