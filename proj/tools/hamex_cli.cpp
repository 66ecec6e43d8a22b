#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hamex/expansion.hpp"
#include "hamex/generators.hpp"
#include "hamex/graph.hpp"
#include "hamex/oracle.hpp"
#include "hamex/pipeline.hpp"
#include "hamex/reduction.hpp"
#include "hamex/rotation.hpp"

namespace {

using namespace hamex;

// Exit codes follow the pipeline contract: 0 = found and verified,
// 2 = not found / refuted, 1 = input or usage error.
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNotFound = 2;

GraphFormat format_for(const std::string& path) {
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json"
             ? GraphFormat::Json
             : GraphFormat::EdgeList;
}

void write_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open " + path);
  save_graph(out, g, format_for(path));
}

int cmd_gen(const std::string& kind, std::size_t n, std::size_t d, double p,
            const std::string& group, std::size_t param, std::uint64_t seed,
            const std::string& name, const std::string& out_path) {
  Graph g(0, {});
  if (kind == "regular") {
    g = random_regular(n, d, seed);
  } else if (kind == "gnp") {
    g = gnp(n, p, seed);
  } else if (kind == "cayley") {
    GroupKind gk;
    if (group == "cyclic") {
      gk = GroupKind::Cyclic;
    } else if (group == "z2k") {
      gk = GroupKind::PowerOfZ2;
    } else if (group == "dihedral") {
      gk = GroupKind::Dihedral;
    } else if (group == "symmetric") {
      gk = GroupKind::Symmetric;
    } else {
      std::cerr << "unknown group: " << group << "\n";
      return kError;
    }
    g = random_cayley(gk, param, d, seed);
  } else if (kind == "fixture") {
    g = fixture(name);
  } else {
    std::cerr << "unknown kind: " << kind << "\n";
    return kError;
  }
  write_graph(g, out_path);
  std::cout << "wrote " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges to " << out_path << "\n";
  return kOk;
}

int cmd_check(const std::string& path, double c, const std::string& mode) {
  Graph g = load_graph_file(path);
  SolverConfig cfg;
  ExpansionVerdict v;
  if (mode == "exact") {
    v = check_c_expander_exact(g, c, cfg.exact_cap);
  } else if (mode == "spectral") {
    SpectralReport sr = estimate_lambda(g, cfg.dense_eigen_cap, cfg.power_tol,
                                        cfg.power_iter_cap);
    std::cout << sr.to_json() << "\n";
    return kOk;
  } else {
    v = check_c_expander_sampled(g, c, cfg);
  }
  std::cout << v.to_json() << "\n";
  return v.refuted() ? kNotFound : kOk;
}

int cmd_solve(const std::string& path, bool path_mode, std::uint32_t px,
              std::uint32_t py, const SolverConfig& cfg, bool json, bool trace,
              bool deterministic, const std::string& potential_log) {
  Graph g = load_graph_file(path);

  if (!potential_log.empty()) {
    std::vector<ReductionState::LogEntry> log;
    reduce_forest(g, initial_forest(g, cfg), cfg, nullptr, {}, &log);
    std::ofstream out(potential_log);
    if (!out) throw InvalidInput("cannot open " + potential_log);
    out << "step,path_count,sum_sq\n";
    for (const auto& e : log) {
      out << e.step << "," << e.path_count << "," << e.sum_sq << "\n";
    }
  }

  SolveReport rep = path_mode ? find_hamilton_path(g, px, py, cfg)
                              : find_hamilton_cycle(g, cfg);
  if (trace) {
    for (const auto& [stage, ms] : rep.timings_ms) {
      std::cerr << stage << " " << ms << "ms\n";
    }
    std::cerr << rep.detail << "\n";
  }
  if (json) {
    std::cout << rep.to_json(!deterministic) << "\n";
  } else if (rep.outcome == Outcome::Cycle || rep.outcome == Outcome::Path) {
    for (Vertex v : rep.sequence) std::cout << v << "\n";
  } else {
    std::cout << outcome_name(rep.outcome) << "\n";
  }
  if (rep.outcome == Outcome::RefutedInput) return kError;
  return (rep.outcome == Outcome::Cycle || rep.outcome == Outcome::Path) &&
                 rep.verified
             ? kOk
             : kNotFound;
}

int cmd_verify(const std::string& graph_path, const std::string& cycle_path,
               bool path_mode, std::uint32_t px, std::uint32_t py) {
  Graph g = load_graph_file(graph_path);
  std::ifstream in(cycle_path);
  if (!in) {
    std::cerr << "cannot open " << cycle_path << "\n";
    return kError;
  }
  std::vector<Vertex> seq;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    seq.push_back(static_cast<Vertex>(std::stoul(line)));
  }
  bool ok = path_mode ? verify_hamilton_path(g, seq, px, py)
                      : verify_hamilton_cycle(g, seq);
  std::cout << (ok ? "OK" : "FAIL") << "\n";
  return ok ? kOk : kNotFound;
}

int cmd_bench(const std::string& suite, const std::string& seed_range,
              const std::string& csv_path, std::size_t jobs,
              const SolverConfig& base_cfg) {
  // Suite name: regular-<n>-<d>.
  std::size_t n = 0, d = 0;
  if (std::sscanf(suite.c_str(), "regular-%zu-%zu", &n, &d) != 2) {
    std::cerr << "unknown suite: " << suite << " (expected regular-<n>-<d>)\n";
    return kError;
  }
  std::uint64_t lo = 0, hi = 0;
  if (std::sscanf(seed_range.c_str(), "%lu..%lu", &lo, &hi) != 2 || hi < lo) {
    std::cerr << "bad seed range: " << seed_range << " (expected a..b)\n";
    return kError;
  }

  struct Row {
    std::uint64_t seed;
    std::string outcome;
    std::size_t merges;
    bool fallback;
    double millis;
  };
  std::vector<Row> rows(hi - lo + 1);
  std::mutex next_mu;
  std::uint64_t next = lo;
  auto worker = [&] {
    for (;;) {
      std::uint64_t s;
      {
        std::lock_guard<std::mutex> lk(next_mu);
        if (next > hi) return;
        s = next++;
      }
      SolverConfig cfg = base_cfg;
      cfg.seed = s;
      Graph g = random_regular(n, d, s);
      auto t0 = std::chrono::steady_clock::now();
      SolveReport rep = find_hamilton_cycle(g, cfg);
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
      rows[s - lo] = {s, outcome_name(rep.outcome), rep.merge_count,
                      rep.fallback_used, ms};
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < std::max<std::size_t>(jobs, 1); ++j) {
    pool.emplace_back(worker);
  }
  for (auto& t : pool) t.join();

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) {
      std::cerr << "cannot open " << csv_path << "\n";
      return kError;
    }
    out = &file;
  }
  *out << "seed,n,d,outcome,merges,fallback,millis\n";
  for (const Row& r : rows) {
    *out << r.seed << "," << n << "," << d << "," << r.outcome << ","
         << r.merges << "," << (r.fallback ? 1 : 0) << "," << r.millis << "\n";
  }
  return kOk;
}

int cmd_selftest() {
  SolverConfig cfg;
  int failures = 0;
  auto report = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "PASS" : "FAIL") << " " << name << "\n";
    failures += !pass;
  };

  // Pipeline vs exact Hamiltonicity on small graphs.
  {
    bool ok = true;
    for (unsigned s = 1; s <= 60 && ok; ++s) {
      Graph g = s % 2 ? gnp(8 + s % 5, 0.4, s)
                      : random_regular(8 + 2 * (s % 3), 4, s);
      auto truth = held_karp(g);
      auto rep = find_hamilton_cycle(g, cfg);
      if (rep.outcome == Outcome::Cycle && !truth.hamiltonian) ok = false;
      if (!truth.hamiltonian && rep.outcome != Outcome::NotFound &&
          rep.outcome != Outcome::RefutedInput) {
        ok = false;
      }
    }
    report("oracle-agreement", ok);
  }

  // endpoint_reach against the exhaustive rotation enumerator.
  {
    bool ok = true;
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30 && ok; ++t) {
      Graph g = random_regular(10, 4, 500 + t);
      std::size_t n = g.vertex_count();
      std::vector<Vertex> perm(n);
      for (Vertex i = 0; i < n; ++i) perm[i] = i;
      for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
      LinearForest f = LinearForest::singletons(n);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (g.has_edge(perm[i], perm[i + 1]) && f.is_endpoint(perm[i]) &&
            f.is_endpoint(perm[i + 1]) &&
            f.path_of(perm[i]) != f.path_of(perm[i + 1])) {
          f.add_edge(perm[i], perm[i + 1]);
        }
      }
      Vertex v = kNoVertex;
      for (Vertex e : f.end_vertices()) {
        if (!f.is_isolated(e)) v = e;
      }
      if (v == kNoVertex) continue;
      VertexSet u(n);
      for (Vertex i = 0; i < n; ++i) u.insert(i);
      for (std::size_t k = 1; k <= 3 && ok; ++k) {
        ReachOptions opts;
        opts.max_order = k;
        auto reach = endpoint_reach(g, f, v, u, opts);
        std::set<Vertex> rset;
        for (const auto& e : reach) rset.insert(e.endpoint);
        auto oracle = enumerate_rotations(g, f, v, u, k);
        ok = rset == std::set<Vertex>(oracle.begin(), oracle.end());
      }
    }
    report("rotation-enumeration", ok);
  }

  // Linking structures, all bijections.
  {
    bool ok = true;
    for (std::size_t w = 2; w <= 5 && ok; ++w) {
      ok = verify_linking_exhaustive(build_linking_blueprint(w, cfg));
    }
    report("linking-exhaustive", ok);
  }

  return failures == 0 ? kOk : kNotFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycles in expander graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph file");
  std::string gen_kind, gen_group = "cyclic", gen_name = "petersen", gen_out;
  std::size_t gen_n = 100, gen_d = 4, gen_param = 16;
  double gen_p = 0.1;
  std::uint64_t gen_seed = 1;
  gen->add_option("kind", gen_kind, "regular | gnp | cayley | fixture")
      ->required();
  gen->add_option("-n,--n", gen_n, "vertex count");
  gen->add_option("-d,--d", gen_d, "degree");
  gen->add_option("-p,--p", gen_p, "edge probability (gnp)");
  gen->add_option("--group", gen_group, "cyclic | z2k | dihedral | symmetric");
  gen->add_option("--param", gen_param, "group parameter");
  gen->add_option("--name", gen_name, "fixture name, e.g. complete(8)");
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("-o,--output", gen_out, "output file (.json for JSON)")
      ->required();

  // check
  auto* check = app.add_subcommand("check", "certify or refute expansion");
  std::string check_file, check_mode = "sampled";
  double check_c = 1.0;
  check->add_option("file", check_file, "graph file")->required();
  check->add_option("--c", check_c, "expansion constant")->required();
  bool f_exact = false, f_sampled = false, f_spectral = false;
  check->add_flag("--exact", f_exact, "exhaustive check (small n)");
  check->add_flag("--sampled", f_sampled, "sampled check (default)");
  check->add_flag("--spectral", f_spectral, "second-eigenvalue report");

  // solve
  auto* solve = app.add_subcommand("solve", "find a Hamilton cycle or path");
  std::string solve_file, solve_config, solve_potlog;
  std::vector<std::uint32_t> solve_path;
  std::uint64_t solve_seed = 0;
  bool solve_seed_set = false, solve_json = false, solve_trace = false,
       solve_det = false;
  solve->add_option("file", solve_file, "graph file")->required();
  solve->add_option("--path", solve_path, "endpoints x y for path mode")
      ->expected(2);
  solve->add_option("--seed", solve_seed, "rng seed")
      ->each([&](const std::string&) { solve_seed_set = true; });
  solve->add_option("--config", solve_config, "key=value config file");
  solve->add_flag("--json", solve_json, "emit the full JSON report");
  solve->add_flag("--trace", solve_trace, "stage timings on stderr");
  solve->add_flag("--deterministic", solve_det,
                  "timestamp-free output for byte-identical reruns");
  solve->add_option("--emit-potential-log", solve_potlog,
                    "write the forest-reduction potential to this CSV");

  // verify
  auto* verify = app.add_subcommand("verify", "check a cycle file");
  std::string ver_graph, ver_cycle;
  std::vector<std::uint32_t> ver_path;
  verify->add_option("graph", ver_graph, "graph file")->required();
  verify->add_option("cycle", ver_cycle, "one vertex id per line")->required();
  verify->add_option("--path", ver_path, "verify an x-y path instead")
      ->expected(2);

  // bench
  auto* bench = app.add_subcommand("bench", "seeded benchmark sweep");
  std::string bench_suite, bench_seeds = "1..5", bench_csv;
  std::size_t bench_jobs = 1;
  bench->add_option("--suite", bench_suite, "regular-<n>-<d>")->required();
  bench->add_option("--seeds", bench_seeds, "inclusive range a..b");
  bench->add_option("--csv", bench_csv, "output CSV (default stdout)");
  bench->add_option("--jobs", bench_jobs, "parallel workers");

  // selftest
  app.add_subcommand("selftest", "run the oracle-equivalence suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_kind, gen_n, gen_d, gen_p, gen_group, gen_param,
                     gen_seed, gen_name, gen_out);
    }
    if (check->parsed()) {
      std::string mode = f_exact ? "exact" : f_spectral ? "spectral" : "sampled";
      return cmd_check(check_file, check_c, mode);
    }
    if (solve->parsed()) {
      SolverConfig cfg;
      if (!solve_config.empty()) cfg = load_config_file(solve_config);
      if (solve_seed_set) cfg.seed = solve_seed;
      bool pm = solve_path.size() == 2;
      return cmd_solve(solve_file, pm, pm ? solve_path[0] : 0,
                       pm ? solve_path[1] : 0, cfg, solve_json, solve_trace,
                       solve_det, solve_potlog);
    }
    if (verify->parsed()) {
      bool pm = ver_path.size() == 2;
      return cmd_verify(ver_graph, ver_cycle, pm, pm ? ver_path[0] : 0,
                        pm ? ver_path[1] : 0);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_suite, bench_seeds, bench_csv, bench_jobs,
                       SolverConfig{});
    }
    return cmd_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
