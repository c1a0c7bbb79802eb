#include "diskoct/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "diskoct/bounds.hpp"
#include "diskoct/geometry.hpp"
#include "diskoct/graph_io.hpp"
#include "diskoct/harness.hpp"
#include "diskoct/solver.hpp"

namespace diskoct {

namespace {

using bounds::Real;

// Writes to `path`, or to `fallback` when path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  fn(out);
}

Graph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  return read_edge_list_file(path);
}

VertexSet load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto doc = nlohmann::json::parse(text);
    return make_set(doc.at("solution").get<std::vector<Vertex>>());
  }
  std::istringstream ss(text);
  return read_vertex_list(ss);
}

double to_double(const Real& x) { return x.convert_to<double>(); }

std::string digits(const Real& x, int precision = 15) {
  std::ostringstream ss;
  ss << std::setprecision(precision) << x;
  return ss.str();
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd cycle transversal approximation on disk graphs"};
  app.require_subcommand(1);
  app.fallthrough(false);

  // generate
  auto* gen = app.add_subcommand("generate", "Random disk instance");
  GeneratorParams gp;
  std::string gen_out;
  gen->add_option("--n", gp.n, "number of disks")->required();
  gen->add_option("--r-min", gp.r_min, "smallest radius")->capture_default_str();
  gen->add_option("--r-max", gp.r_max, "largest radius")->capture_default_str();
  gen->add_option("--side", gp.side, "box side")->capture_default_str();
  gen->add_option("--seed", gp.seed, "random seed")->capture_default_str();
  gen->add_option("-o,--output", gen_out, "output disk file (default stdout)");

  // build-graph
  auto* build = app.add_subcommand("build-graph", "Disk file to edge list");
  std::string build_in;
  std::string build_out;
  build->add_option("-i,--input", build_in, "disk file")->required();
  build->add_option("-o,--output", build_out, "edge-list output (default stdout)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Approximate odd cycle transversal");
  std::string solve_in;
  std::string variant_text = "derandomized";
  std::string base_text = "exact";
  SolverConfig cfg;
  bool with_diag = false;
  std::optional<std::uint64_t> shuffle;
  std::string solve_out;
  solve_cmd->add_option("-i,--input", solve_in, "edge-list file ('-' for stdin)")->required();
  solve_cmd->add_option("--variant", variant_text, "randomized | derandomized")->capture_default_str();
  solve_cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  solve_cmd->add_option("--repeats", cfg.repeats, "best-of-k repeats (randomized)")->capture_default_str();
  solve_cmd->add_option("--base", base_text, "exact | greedy-fallback")->capture_default_str();
  solve_cmd->add_option("--base-budget", cfg.base.node_budget, "node budget of the exact base")->capture_default_str();
  solve_cmd->add_flag("--diagnostics", with_diag, "compute a, b_hat, opt and friends");
  solve_cmd->add_option("--oracle-budget", cfg.diagnostics_budget, "node budget for diagnostics")->capture_default_str();
  solve_cmd->add_option("--shuffle-packing", shuffle, "scan triangles in a seeded random order");
  solve_cmd->add_option("-o,--output", solve_out, "JSON output (default stdout)");

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "Minimum odd cycle transversal by branch and bound");
  std::string exact_in;
  std::uint64_t exact_budget = kDefaultNodeBudget;
  exact_cmd->add_option("-i,--input", exact_in, "edge-list file ('-' for stdin)")->required();
  exact_cmd->add_option("--budget", exact_budget, "node budget")->capture_default_str();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check that removing a set leaves a bipartite graph");
  std::string verify_in;
  std::string verify_solution_path;
  std::vector<std::string> verify_set;
  verify_cmd->add_option("-i,--input", verify_in, "edge-list file")->required();
  auto* sol_opt = verify_cmd->add_option("-s,--solution", verify_solution_path,
                                         "file of vertex ids, or a solve JSON document");
  auto* set_opt = verify_cmd->add_option("--set", verify_set, "vertex ids")->delimiter(',');
  sol_opt->excludes(set_opt);

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "Closed-form approximation-ratio bound");
  std::optional<double> bound_d;
  std::optional<double> bound_kappa;
  bool bound_derand = false;
  std::string rho0_text = "2.25";
  std::optional<std::string> rho_text;
  auto* d_opt = bound_cmd->add_option("--d", bound_d, "average degree of G[V(T)]");
  auto* k_opt = bound_cmd->add_option("--kappa", bound_kappa, "dead-density coefficient directly");
  auto* dr_opt = bound_cmd->add_flag("--derandomized", bound_derand, "use the 400^-3 dead density");
  d_opt->excludes(k_opt)->excludes(dr_opt);
  k_opt->excludes(dr_opt);
  bound_cmd->add_option("--rho0", rho0_text, "base subroutine ratio")->capture_default_str();
  bound_cmd->add_option("--rho", rho_text, "rho for the worst-case point (default: the computed bound)");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Ratio measurement against the exact oracle");
  ExperimentSpec spec;
  std::vector<std::string> config_texts{"derandomized:exact", "randomized:exact"};
  std::size_t exp_repeats = 5;
  std::uint64_t exp_base_budget = kDefaultNodeBudget;
  std::string csv_path;
  std::string json_path;
  exp_cmd->add_option("--count", spec.count, "instances")->capture_default_str();
  exp_cmd->add_option("--n-min", spec.n_min, "fewest disks")->capture_default_str();
  exp_cmd->add_option("--n-max", spec.n_max, "most disks")->capture_default_str();
  exp_cmd->add_option("--r-min", spec.r_min, "smallest radius")->capture_default_str();
  exp_cmd->add_option("--r-max", spec.r_max, "largest radius")->capture_default_str();
  exp_cmd->add_option("--side", spec.side, "box side")->capture_default_str();
  exp_cmd->add_option("--seed", spec.seed, "random seed")->capture_default_str();
  exp_cmd->add_option("--config", config_texts, "variant:base, repeatable")->capture_default_str();
  exp_cmd->add_option("--repeats", exp_repeats, "best-of-k repeats (randomized)")->capture_default_str();
  exp_cmd->add_option("--base-budget", exp_base_budget, "node budget of the exact base")->capture_default_str();
  exp_cmd->add_option("--oracle-budget", spec.oracle_budget, "node budget of the oracle")->capture_default_str();
  exp_cmd->add_flag("--timing", spec.record_timing, "fill the ms column (output no longer reproducible)");
  exp_cmd->add_option("--csv", csv_path, "CSV output path")->required();
  exp_cmd->add_option("--json", json_path, "JSON summary path (default stdout)");
  exp_cmd->add_option("--repro-dir", spec.repro_dir, "where failure bundles go")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*gen) {
      const DiskInstance inst = generate_random_instance(gp);
      emit(gen_out, out, [&](std::ostream& os) { write_disks(os, inst); });
      return kExitOk;
    }
    if (*build) {
      const Graph g = build_disk_graph(read_disks_file(build_in));
      emit(build_out, out, [&](std::ostream& os) { write_edge_list(os, g); });
      return kExitOk;
    }
    if (*solve_cmd) {
      const auto variant = parse_variant(variant_text);
      const auto base = parse_base_kind(base_text);
      if (!variant || !base) {
        err << "error: unknown --variant or --base\n";
        return kExitUsage;
      }
      if (cfg.repeats == 0) {
        err << "error: --repeats must be >= 1\n";
        return kExitUsage;
      }
      cfg.variant = *variant;
      cfg.base.kind = *base;
      cfg.collect_diagnostics = with_diag;
      cfg.packing_shuffle_seed = shuffle;
      const Graph g = load_graph(solve_in);
      const FullResult res = solve(g, cfg);
      if (!independently_bipartite_after_removal(g, res.solution)) {
        err << "error: solver output failed verification\n";
        return kExitFailure;
      }
      emit(solve_out, out, [&](std::ostream& os) { os << solve_report(g, res, cfg).dump(2) << '\n'; });
      return kExitOk;
    }
    if (*exact_cmd) {
      const Graph g = load_graph(exact_in);
      const ExactSolution s = exact_oct(g, exact_budget);
      const nlohmann::json doc = {{"n", g.vertex_count()},  {"m", g.edge_count()},
                                  {"size", s.vertices.size()}, {"solution", s.vertices},
                                  {"optimal", s.optimal},     {"nodes", s.nodes_explored}};
      out << doc.dump(2) << '\n';
      return kExitOk;
    }
    if (*verify_cmd) {
      const Graph g = load_graph(verify_in);
      VertexSet s;
      if (verify_solution_path.empty()) {
        std::string joined;
        for (const auto& token : verify_set) joined += token + ' ';
        std::istringstream ss(joined);
        s = read_vertex_list(ss);
      } else {
        s = load_solution(verify_solution_path);
      }
      for (Vertex v : s) {
        if (!g.contains(v)) {
          err << "error: vertex " << v << " not in graph\n";
          return kExitUsage;
        }
      }
      const bool ok = verify_solution(g, s);
      out << (ok ? "valid" : "invalid") << '\n';
      return ok ? kExitOk : kExitFailure;
    }
    if (*bound_cmd) {
      Real kappa;
      nlohmann::json source;
      if (bound_kappa) {
        kappa = Real(*bound_kappa);
        source = {{"kappa", *bound_kappa}};
      } else if (bound_derand) {
        kappa = bounds::kappa_derandomized();
        source = {{"derandomized", true}};
      } else {
        const double d = bound_d.value_or(22.0);
        kappa = bounds::kappa_from_degree(Real(d));
        source = {{"d", d}};
      }
      const Real rho0(rho0_text);
      std::optional<Real> rho_override;
      if (rho_text) rho_override = Real(*rho_text);
      const auto rep = bounds::evaluate(kappa, rho0, rho_override ? &*rho_override : nullptr);
      const nlohmann::json doc = {
          {"input", source},
          {"kappa", to_double(rep.kappa)},
          {"rho0", to_double(rep.rho0)},
          {"rho", to_double(rep.bound.rho)},
          {"rho_digits", digits(rep.bound.rho)},
          {"raw_root", to_double(rep.bound.raw_root)},
          {"clamped_to_2", rep.bound.clamped},
          {"rho_used", to_double(rep.rho_used)},
          {"a_star", to_double(rep.worst.a)},
          {"b_star", to_double(rep.worst.b)},
          {"b_star_exceeds_1", rep.worst.b_exceeds_one},
          {"rho1", to_double(rep.ratios.rho1)},
          {"rho2", to_double(rep.ratios.rho2)},
          {"rho3", to_double(rep.ratios.rho3)},
      };
      out << doc.dump(2) << '\n';
      return kExitOk;
    }
    if (*exp_cmd) {
      for (const auto& text : config_texts) {
        spec.configs.push_back(parse_named_config(text, spec.seed, exp_repeats, exp_base_budget));
      }
      ExperimentOutcome outcome;
      try {
        outcome = run_experiment(spec);
      } catch (const VerificationFailure& f) {
        err << "verification failure: " << f.what() << "\nrepro bundle: " << f.bundle_path << '\n';
        return kExitFailure;
      }
      emit(csv_path, out, [&](std::ostream& os) { write_csv(os, outcome); });
      const auto summary = summarize(spec, outcome);
      emit(json_path, out, [&](std::ostream& os) { os << summary.dump(2) << '\n'; });
      return outcome.invariant_violations == 0 ? kExitOk : kExitFailure;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bounds::BoundsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace diskoct
