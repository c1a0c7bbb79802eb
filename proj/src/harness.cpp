#include "diskoct/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "diskoct/graph_io.hpp"
#include "diskoct/rng.hpp"

namespace diskoct {

NamedConfig parse_named_config(const std::string& text, std::uint64_t seed, std::size_t repeats,
                               std::uint64_t base_budget) {
  const auto colon = text.find(':');
  const std::string variant_text = text.substr(0, colon);
  const std::string base_text = colon == std::string::npos ? "exact" : text.substr(colon + 1);
  const auto variant = parse_variant(variant_text);
  const auto base = parse_base_kind(base_text);
  if (!variant || !base) throw std::invalid_argument("bad solver config '" + text + "'");
  NamedConfig nc;
  nc.name = std::string(to_string(*variant)) + ":" + std::string(to_string(*base));
  nc.config.variant = *variant;
  nc.config.seed = seed;
  nc.config.repeats = repeats;
  nc.config.base.kind = *base;
  nc.config.base.node_budget = base_budget;
  return nc;
}

DiskInstance experiment_instance(const ExperimentSpec& spec, std::size_t i) {
  Rng rng(mix_seed(spec.seed, i, 0x6e));
  GeneratorParams p;
  p.n = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(spec.n_min),
                                             static_cast<std::int64_t>(spec.n_max)));
  p.r_min = spec.r_min;
  p.r_max = spec.r_max;
  p.side = spec.side;
  p.seed = mix_seed(spec.seed, i, 0x67);
  return generate_random_instance(p);
}

bool independently_bipartite_after_removal(const Graph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex v : removed) {
    if (!g.contains(v)) return false;
    side[static_cast<std::size_t>(v)] = 2;
  }
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      const int su = side[static_cast<std::size_t>(u)];
      for (Vertex w : g.neighbors(u)) {
        int& sw = side[static_cast<std::size_t>(w)];
        if (sw == 2) continue;
        if (sw == -1) {
          sw = 1 - su;
          stack.push_back(w);
        } else if (sw == su) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

std::string write_repro(const ExperimentSpec& spec, std::size_t instance_id, const NamedConfig& cfg,
                        const DiskInstance& inst, const VertexSet& solution) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(spec.repro_dir) / ("repro_instance_" + std::to_string(instance_id));
  fs::create_directories(dir);
  write_disks_file((dir / "instance.disks").string(), inst);
  write_edge_list_file((dir / "graph.edges").string(), build_disk_graph(inst));
  std::ofstream info(dir / "README.txt");
  info << "config " << cfg.name << "\nseed " << cfg.config.seed << "\nexperiment_seed " << spec.seed
       << "\ninstance_id " << instance_id << "\nsolution";
  for (Vertex v : solution) info << ' ' << v;
  info << '\n';
  return dir.string();
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentSpec& spec) {
  if (spec.n_min > spec.n_max) throw std::invalid_argument("n_min > n_max");
  ExperimentOutcome outcome;
  for (std::size_t i = 0; i < spec.count; ++i) {
    const DiskInstance inst = experiment_instance(spec, i);
    const Graph g = build_disk_graph(inst);
    ExperimentRecord rec;
    rec.instance_id = i;
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    const ExactSolution oracle = exact_oct(g, spec.oracle_budget);
    if (oracle.optimal) rec.opt = oracle.vertices.size();

    for (const auto& named : spec.configs) {
      SolverConfig cfg = named.config;
      cfg.collect_diagnostics = true;
      cfg.diagnostics_budget = spec.oracle_budget;
      const auto start = std::chrono::steady_clock::now();
      const FullResult res = solve(g, cfg);
      const auto stop = std::chrono::steady_clock::now();

      if (!independently_bipartite_after_removal(g, res.solution)) {
        const std::string bundle = write_repro(spec, i, named, inst, res.solution);
        throw VerificationFailure("config " + named.name + " returned a non-transversal on instance " +
                                      std::to_string(i),
                                  bundle);
      }
      ConfigRun run;
      run.config = named.name;
      run.size = res.solution.size();
      run.diagnostics = *res.inner.diagnostics;
      if (spec.record_timing) run.ms = std::chrono::duration<double, std::milli>(stop - start).count();
      if (rec.opt) {
        if (run.size < *rec.opt) ++outcome.invariant_violations;
        if (*rec.opt > 0) {
          run.ratio = static_cast<double>(run.size) / static_cast<double>(*rec.opt);
        } else if (run.size != 0) {
          ++outcome.invariant_violations;
        }
        if (run.size > 3 * *rec.opt) ++outcome.invariant_violations;
      }
      rec.runs.push_back(std::move(run));
    }
    outcome.records.push_back(std::move(rec));
  }
  std::sort(outcome.records.begin(), outcome.records.end(),
            [](const ExperimentRecord& a, const ExperimentRecord& b) { return a.instance_id < b.instance_id; });
  return outcome;
}

namespace {

std::string fixed(double x, int digits = 6) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << x;
  return ss.str();
}

template <typename T>
std::string opt_field(const std::optional<T>& x) {
  if (!x) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return fixed(*x);
  } else {
    return std::to_string(*x);
  }
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentOutcome& outcome) {
  out << kCsvHeader << '\n';
  for (const auto& rec : outcome.records) {
    for (const auto& run : rec.runs) {
      const auto& d = run.diagnostics;
      out << rec.instance_id << ',' << rec.n << ',' << rec.m << ',' << run.config << ',' << run.size << ','
          << opt_field(rec.opt) << ',' << opt_field(run.ratio) << ',' << opt_field(d.a) << ','
          << opt_field(d.b_hat) << ',' << fixed(d.d_avg) << ',' << d.dead_count << ',' << d.depth << ','
          << fixed(run.ms, 3) << '\n';
    }
  }
}

nlohmann::json summarize(const ExperimentSpec& spec, const ExperimentOutcome& outcome) {
  struct Acc {
    std::size_t runs = 0;
    std::size_t with_ratio = 0;
    double max_ratio = 0.0;
    double sum_ratio = 0.0;
  };
  std::map<std::string, Acc> acc;
  for (const auto& named : spec.configs) acc[named.name];
  std::size_t unknown_opt = 0;
  for (const auto& rec : outcome.records) {
    if (!rec.opt) ++unknown_opt;
    for (const auto& run : rec.runs) {
      auto& a = acc[run.config];
      ++a.runs;
      if (run.ratio) {
        ++a.with_ratio;
        a.max_ratio = std::max(a.max_ratio, *run.ratio);
        a.sum_ratio += *run.ratio;
      }
    }
  }
  nlohmann::json configs = nlohmann::json::object();
  for (const auto& [name, a] : acc) {
    configs[name] = {
        {"runs", a.runs},
        {"runs_with_ratio", a.with_ratio},
        {"max_ratio", a.with_ratio ? nlohmann::json(a.max_ratio) : nlohmann::json(nullptr)},
        {"mean_ratio", a.with_ratio ? nlohmann::json(a.sum_ratio / static_cast<double>(a.with_ratio))
                                    : nlohmann::json(nullptr)},
    };
  }
  return {
      {"schema", 1},
      {"instances", outcome.records.size()},
      {"seed", spec.seed},
      {"oracle_budget", spec.oracle_budget},
      {"opt_unknown", unknown_opt},
      {"invariant_violations", outcome.invariant_violations},
      {"configs", configs},
  };
}

nlohmann::json solve_report(const Graph& g, const FullResult& result, const SolverConfig& cfg) {
  nlohmann::json diag = nullptr;
  if (result.inner.diagnostics) {
    const auto& d = *result.inner.diagnostics;
    diag = {
        {"a", opt_json(d.a)},
        {"b_hat", opt_json(d.b_hat)},
        {"d_avg", d.d_avg},
        {"dead_count", d.dead_count},
        {"s1", d.s1},
        {"s2", opt_json(d.s2)},
        {"s3", opt_json(d.s3)},
        {"depth", d.depth},
    };
  }
  return {
      {"n", g.vertex_count()},
      {"m", g.edge_count()},
      {"size", result.solution.size()},
      {"solution", result.solution},
      {"chosen", std::string(to_string(result.chosen))},
      {"variant", std::string(to_string(cfg.variant))},
      {"seed", cfg.seed},
      {"diagnostics", diag},
  };
}

}  // namespace diskoct
