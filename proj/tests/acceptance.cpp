// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion N   run only criterion N

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "checks.hpp"
#include "diskoct/base_solvers.hpp"
#include "diskoct/bounds.hpp"
#include "diskoct/cli.hpp"
#include "diskoct/geometry.hpp"
#include "diskoct/harness.hpp"
#include "diskoct/solver.hpp"
#include "oracles.hpp"

using namespace diskoct;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int precision = 6) {
  std::ostringstream ss;
  ss.precision(precision);
  ss << x;
  return ss.str();
}

// Disk instance with a random radius range and density; n drawn from [n_lo, n_hi].
GeneratorParams mixed_params(std::uint64_t seed, std::size_t i, std::size_t n_lo, std::size_t n_hi) {
  Rng rng(mix_seed(seed, i));
  GeneratorParams p;
  p.n = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(n_lo), static_cast<std::int64_t>(n_hi)));
  p.r_min = 1;
  p.r_max = uniform_int(rng, 1, 8);
  const double spread = 0.6 + 0.2 * static_cast<double>(uniform_below(rng, 10));
  p.side = std::max<std::int64_t>(4, std::llround(spread * static_cast<double>(p.r_max) *
                                                  std::sqrt(static_cast<double>(p.n))));
  p.seed = mix_seed(seed, i, 1);
  return p;
}

Graph disk_graph(const GeneratorParams& p) { return build_disk_graph(generate_random_instance(p)); }

SolverConfig config(Variant v, BaseKind kind, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.variant = v;
  cfg.base.kind = kind;
  cfg.seed = seed;
  return cfg;
}

// 1. Closed-form figure from the `bound` command.
Verdict criterion1() {
  const auto start = Clock::now();
  const char* argv[] = {"diskoct", "bound", "--d", "22", "--rho0", "2.25"};
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_dispatch(6, argv, out, err);
  const double secs = seconds_since(start);
  if (code != kExitOk) return {false, "bound exited " + std::to_string(code) + ": " + err.str()};
  const auto doc = nlohmann::json::parse(out.str());
  const double rho = doc.at("rho").get<double>();
  constexpr double kTarget = 2.99993033741;
  const double diff = std::abs(rho - kTarget);
  const bool pass = diff <= 1e-9 && secs < 1.0;
  return {pass, "rho=" + doc.at("rho_digits").get<std::string>() + " target=2.99993033741 |diff|=" + fmt(diff, 3) +
                    " tol=1e-9 time=" + fmt(secs, 3) + "s"};
}

// 2. Quadratic residual and worst-case agreement.
Verdict criterion2() {
  using bounds::Real;
  const auto start = Clock::now();
  Rng rng(mix_seed(2, 0x71));
  double worst_residual = 0;
  double worst_gap = 0;
  for (int i = 0; i < 100; ++i) {
    // kappa in (0, 1], rho0 in [1, 3] on a 1e-9 grid.
    const Real kappa = Real(1 + uniform_below(rng, 1'000'000'000)) / 1'000'000'000;
    const Real rho0 = 1 + Real(uniform_below(rng, 2'000'000'001)) / 1'000'000'000;
    const bounds::BoundReport rep = bounds::evaluate(kappa, rho0);
    const double residual = abs(bounds::ratio_quadratic(kappa, rho0)(rep.bound.raw_root)).convert_to<double>();
    const auto& r = rep.ratios;
    const double gap = std::max({abs(r.rho1 - r.rho2), abs(r.rho2 - r.rho3), abs(r.rho1 - r.rho3)}).convert_to<double>();
    worst_residual = std::max(worst_residual, residual);
    worst_gap = std::max(worst_gap, gap);
  }
  const double secs = seconds_since(start);
  const bool pass = worst_residual < 1e-12 && worst_gap < 1e-9 && secs < 1.0;
  return {pass, "pairs=100 max|residual|=" + fmt(worst_residual, 3) + " (tol 1e-12) max ratio gap=" +
                    fmt(worst_gap, 3) + " (tol 1e-9) time=" + fmt(secs, 3) + "s"};
}

// 3. Validity over 1000 instances, both variants and both base kinds.
Verdict criterion3() {
  const auto start = Clock::now();
  std::size_t failures = 0;
  std::size_t runs = 0;
  std::size_t max_n = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const GeneratorParams p = mixed_params(3, i, 1, 200);
    const Graph g = disk_graph(p);
    max_n = std::max(max_n, g.vertex_count());
    for (Variant v : {Variant::randomized, Variant::derandomized}) {
      for (BaseKind kind : {BaseKind::exact, BaseKind::greedy_fallback}) {
        const FullResult r = solve(g, config(v, kind, i));
        ++runs;
        if (!independently_bipartite_after_removal(g, r.solution)) ++failures;
      }
    }
  }
  const double secs = seconds_since(start);
  return {failures == 0 && secs < 120.0, "instances=1000 runs=" + std::to_string(runs) + " max n=" +
                                             std::to_string(max_n) + " failures=" + std::to_string(failures) +
                                             " time=" + fmt(secs, 3) + "s (limit 120s)"};
}

// Instances shared by criteria 4 and 8.
GeneratorParams oracle_params(std::size_t i) { return mixed_params(4, i, 1, 40); }

// 4. size / opt <= 3 with the exact base.
Verdict criterion4() {
  const auto start = Clock::now();
  std::size_t violations = 0;
  std::size_t unknown = 0;
  std::map<Variant, double> max_ratio{{Variant::randomized, 0.0}, {Variant::derandomized, 0.0}};
  for (std::size_t i = 0; i < 200; ++i) {
    const Graph g = disk_graph(oracle_params(i));
    const ExactSolution opt = exact_oct(g);
    if (!opt.optimal) {
      ++unknown;
      continue;
    }
    for (Variant v : {Variant::randomized, Variant::derandomized}) {
      const std::size_t size = solve(g, config(v, BaseKind::exact, i)).solution.size();
      const std::size_t o = opt.vertices.size();
      if (size > 3 * o) ++violations;
      if (o > 0) max_ratio[v] = std::max(max_ratio[v], static_cast<double>(size) / static_cast<double>(o));
    }
  }
  const double secs = seconds_since(start);
  return {violations == 0 && unknown == 0 && secs < 300.0,
          "instances=200 violations=" + std::to_string(violations) + " opt unknown=" + std::to_string(unknown) +
              " max ratio randomized=" + fmt(max_ratio[Variant::randomized], 4) +
              " derandomized=" + fmt(max_ratio[Variant::derandomized], 4) + " time=" + fmt(secs, 3) +
              "s (limit 300s)"};
}

// 5. Degeneracy of K4-reduced disk graphs.
Verdict criterion5() {
  const auto start = Clock::now();
  std::size_t violations = 0;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    // Dense boxes so the reduction leaves something to measure.
    GeneratorParams p = mixed_params(5, i, 50, 300);
    p.side = std::max<std::int64_t>(4, p.side / 2);
    const Graph g = check::k4_reduced(p);
    const std::size_t d = degeneracy(g).value;
    worst = std::max(worst, d);
    if (d > 11) ++violations;
  }
  const double secs = seconds_since(start);
  return {violations == 0 && secs < 30.0, "instances=200 max degeneracy=" + std::to_string(worst) +
                                              " (bound 11) violations=" + std::to_string(violations) + " time=" +
                                              fmt(secs, 3) + "s (limit 30s)"};
}

// 6. Derandomization invariants.
Verdict criterion6() {
  const auto start = Clock::now();
  std::size_t violations = 0;
  std::size_t size_violations = 0;
  std::string first;
  std::size_t min_block = SIZE_MAX;
  std::size_t max_packing = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    // Fixed moderate density: enough packed triangles that I has at least
    // three members (a single isolated triangle already gives |I_i| = 0).
    GeneratorParams params = mixed_params(6, i, 100, 300);
    params.side = std::llround(1.5 * static_cast<double>(params.r_max) * std::sqrt(static_cast<double>(params.n)));
    const Graph g = check::k4_reduced(params);
    const TrianglePacking p = maximal_triangle_packing(g);
    const DerandState st = construct_derandomized_R(g, p);
    const auto v = check::derand_violations(g, p, st);
    violations += v.size();
    if (!v.empty() && first.empty()) first = "instance " + std::to_string(i) + ": " + v.front();
    const double floor = static_cast<double>(p.size()) / (400.0 * 400.0 * 400.0);
    for (const auto& block : st.blocks) {
      if (static_cast<double>(block.size()) < floor) ++size_violations;
      min_block = std::min(min_block, block.size());
    }
    max_packing = std::max(max_packing, p.size());
  }
  const double secs = seconds_since(start);
  const bool pass = violations == 0 && size_violations == 0 && secs < 60.0;
  return {pass, "instances=200 property violations=" + std::to_string(violations) +
                    " |I_i|<|T|/400^3 violations=" + std::to_string(size_violations) + " min |I_i|=" +
                    std::to_string(min_block) + " max |T|=" + std::to_string(max_packing) + " time=" +
                    fmt(secs, 3) + "s (limit 60s)" + (first.empty() ? "" : " first: " + first)};
}

// 7. Expected overlap of R with an optimum, and per-vertex dead frequency, by Monte Carlo.
Verdict criterion7() {
  const auto start = Clock::now();
  constexpr int kSamples = 2000;
  std::size_t obs1_fail = 0;
  std::size_t obs3_fail = 0;
  std::size_t vertices_checked = 0;
  double worst_obs3_margin = 1.0;
  for (std::size_t i = 0; i < 50; ++i) {
    const Graph g = check::k4_reduced(mixed_params(7, i, 10, 30));
    const ExactSolution opt = exact_oct(g);
    const TrianglePacking packing = maximal_triangle_packing(g);
    const VertexSet covered = packing.covered();
    const auto deg = induced_degrees(g, covered);
    Rng rng(mix_seed(7, i, 0x52));

    double sum = 0;
    double sum_sq = 0;
    std::vector<int> dead_hits(g.vertex_count(), 0);
    for (int s = 0; s < kSamples; ++s) {
      const VertexSet r = sample_R(packing, rng);
      const auto hit = static_cast<double>(set_intersection(r, opt.vertices).size());
      sum += hit;
      sum_sq += hit * hit;
      for (Vertex v : dead_vertices(g, packing, r)) ++dead_hits[static_cast<std::size_t>(v)];
    }
    const double mean = sum / kSamples;
    const double var = std::max(0.0, sum_sq / kSamples - mean * mean) * kSamples / (kSamples - 1);
    const double se = std::sqrt(var / kSamples);
    const double target = static_cast<double>(2 * packing.size()) / 3.0;
    if (mean < target - 3 * se - 1e-12) ++obs1_fail;

    for (Vertex v : covered) {
      const auto vi = static_cast<std::size_t>(v);
      const double q = bounds::dead_probability_lower_bound(static_cast<int>(deg[vi])).convert_to<double>();
      const double freq = static_cast<double>(dead_hits[vi]) / kSamples;
      // Standard error at the bound itself, since the empirical rate is often 0.
      const double se_q = std::sqrt(q * (1 - q) / kSamples);
      ++vertices_checked;
      worst_obs3_margin = std::min(worst_obs3_margin, freq - (q - 3 * se_q));
      if (freq < q - 3 * se_q) ++obs3_fail;
    }
  }
  const double secs = seconds_since(start);
  return {obs1_fail == 0 && obs3_fail == 0 && secs < 120.0,
          "instances=50 samples=2000 overlap failures=" + std::to_string(obs1_fail) +
              " dead-frequency failures=" + std::to_string(obs3_fail) + "/" + std::to_string(vertices_checked) +
              " min margin=" + fmt(worst_obs3_margin, 4) + " time=" + fmt(secs, 3) + "s (limit 120s)"};
}

// 8. Size bound on the packing of G - R, over the criterion 4 instances.
Verdict criterion8() {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const Graph full = disk_graph(oracle_params(i));
    for (Variant v : {Variant::randomized, Variant::derandomized}) {
      SolverConfig cfg = config(v, BaseKind::exact, i);
      cfg.collect_diagnostics = true;
      const FullResult r = solve(full, cfg);
      const SolveDiagnostics& d = *r.inner.diagnostics;
      if (!d.opt || !d.tri_outside) {
        ++skipped;
        continue;
      }
      for (const S2Attempt& att : r.inner.trace.s2_attempts) {
        ++checked;
        if (!check::second_packing_bound_holds(r.inner.trace.packing.size(), *d.tri_outside, att)) ++violations;
      }
    }
  }
  return {violations == 0 && checked > 0, "R attempts checked=" + std::to_string(checked) + " skipped runs=" +
                                              std::to_string(skipped) + " violations=" + std::to_string(violations)};
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, e);
}

// 9. exact_oct against subset enumeration.
Verdict criterion9() {
  const auto start = Clock::now();
  std::vector<std::pair<std::string, Graph>> graphs{
      {"K4", oracle::complete_graph(4)},
      {"C5", oracle::cycle_graph(5)},
      {"K5", oracle::complete_graph(5)},
      {"C7", oracle::cycle_graph(7)},
      {"Petersen", petersen()},
      {"W5", Graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}})},
      {"K33", Graph(6, std::vector<Edge>{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})},
      {"empty", Graph(0)},
  };
  Rng rng(mix_seed(9, 0x67));
  for (std::size_t i = 0; i < 250; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 10);
    graphs.emplace_back("gnp", oracle::random_graph(n, 0.1 + 0.1 * static_cast<double>(uniform_below(rng, 8)), rng));
  }
  for (std::size_t i = 0; i < 250; ++i) {
    GeneratorParams p = mixed_params(9, i, 1, 10);
    p.side = std::max<std::int64_t>(2, p.side / 2);
    graphs.emplace_back("disk", disk_graph(p));
  }
  std::size_t mismatches = 0;
  std::string first;
  for (const auto& [name, g] : graphs) {
    const ExactSolution s = exact_oct(g);
    const bool ok = s.optimal && s.vertices.size() == oracle::min_oct_size(g) && verify_solution(g, s.vertices);
    if (!ok) {
      ++mismatches;
      if (first.empty()) first = name;
    }
  }
  const double secs = seconds_since(start);
  return {mismatches == 0 && secs < 60.0, "graphs=" + std::to_string(graphs.size()) +
                                              " mismatches=" + std::to_string(mismatches) + " time=" +
                                              fmt(secs, 3) + "s (limit 60s)" +
                                              (first.empty() ? "" : " first mismatch: " + first)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int shell(const std::string& cmd) { return std::system(cmd.c_str()); }

// 10. Byte-identical reruns of the CLI in separate processes.
Verdict criterion10() {
  const fs::path dir = fs::temp_directory_path() / "diskoct_acceptance_c10";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = DISKOCT_CLI_PATH;
  const std::string d = dir.string();
  if (shell(cli + " generate --n 150 --side 70 --seed 10 -o " + d + "/g.disks") != 0 ||
      shell(cli + " build-graph -i " + d + "/g.disks -o " + d + "/g.edges") != 0) {
    return {false, "could not prepare the instance"};
  }
  std::vector<std::string> differing;
  std::size_t compared = 0;
  const std::vector<std::pair<std::string, std::string>> solves{
      {"rand", "--variant randomized --seed 17 --repeats 5 --diagnostics"},
      {"derand", "--variant derandomized --seed 17 --diagnostics"},
      {"greedy", "--variant randomized --base greedy-fallback --seed 3"},
  };
  for (const auto& [tag, flags] : solves) {
    for (int k = 0; k < 2; ++k) {
      shell(cli + " solve -i " + d + "/g.edges " + flags + " -o " + d + "/" + tag + std::to_string(k) + ".json");
    }
    ++compared;
    const std::string a = slurp(dir / (tag + "0.json"));
    if (a.empty() || a != slurp(dir / (tag + "1.json"))) differing.push_back("solve " + tag);
  }
  for (int k = 0; k < 2; ++k) {
    const std::string sk = std::to_string(k);
    shell(cli + " experiment --count 25 --n-max 40 --seed 10 --config derandomized:exact --config randomized:exact" +
          " --config randomized:greedy-fallback --csv " + d + "/exp" + sk + ".csv --json " + d + "/exp" + sk +
          ".json");
  }
  for (const char* ext : {".csv", ".json"}) {
    ++compared;
    const std::string a = slurp(dir / (std::string("exp0") + ext));
    if (a.empty() || a != slurp(dir / (std::string("exp1") + ext))) differing.push_back(std::string("experiment ") + ext);
  }
  std::string detail = "output pairs compared=" + std::to_string(compared) + " differing=" +
                       std::to_string(differing.size());
  for (const auto& name : differing) detail += " [" + name + "]";
  return {differing.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10};
  bool all = true;
  for (int c = 1; c <= static_cast<int>(criteria.size()); ++c) {
    if (only != 0 && c != only) continue;
    Verdict v;
    try {
      v = criteria[static_cast<std::size_t>(c - 1)]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << c << ": " << (v.pass ? "PASS" : "FAIL") << " | " << v.detail << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
