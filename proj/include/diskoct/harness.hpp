#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diskoct/geometry.hpp"
#include "diskoct/solver.hpp"

namespace diskoct {

struct NamedConfig {
  std::string name;
  SolverConfig config;
};

/// Parses "variant:base" (e.g. "derandomized:exact", "randomized:greedy-fallback").
NamedConfig parse_named_config(const std::string& text, std::uint64_t seed, std::size_t repeats,
                               std::uint64_t base_budget);

struct ExperimentSpec {
  std::size_t count = 0;
  std::size_t n_min = 1;
  std::size_t n_max = 40;
  std::int64_t r_min = 1;
  std::int64_t r_max = 5;
  std::int64_t side = 60;
  std::uint64_t seed = 0;
  std::vector<NamedConfig> configs;
  std::uint64_t oracle_budget = kDefaultNodeBudget;
  bool record_timing = false;  // wall time breaks byte-identical reruns, so off by default
  std::string repro_dir = ".";
};

struct ConfigRun {
  std::string config;
  std::size_t size = 0;
  std::optional<double> ratio;
  SolveDiagnostics diagnostics;
  double ms = 0.0;
};

struct ExperimentRecord {
  std::size_t instance_id = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> opt;
  std::vector<ConfigRun> runs;
};

struct ExperimentOutcome {
  std::vector<ExperimentRecord> records;
  std::size_t invariant_violations = 0;
};

/// A solver output failed re-verification; a repro bundle was written.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(const std::string& what, std::string bundle)
      : std::runtime_error(what), bundle_path(std::move(bundle)) {}
  std::string bundle_path;
};

/// Instance `i` of the experiment family.
DiskInstance experiment_instance(const ExperimentSpec& spec, std::size_t i);

ExperimentOutcome run_experiment(const ExperimentSpec& spec);

inline constexpr const char* kCsvHeader =
    "instance_id,n,m,config,size,opt,ratio,a,b_hat,d_avg,dead_count,depth,ms";

void write_csv(std::ostream& out, const ExperimentOutcome& outcome);
nlohmann::json summarize(const ExperimentSpec& spec, const ExperimentOutcome& outcome);

/// Two-colouring check by iterative DFS, deliberately separate from is_bipartite.
bool independently_bipartite_after_removal(const Graph& g, std::span<const Vertex> removed);

/// JSON document emitted by the `solve` command.
nlohmann::json solve_report(const Graph& g, const FullResult& result, const SolverConfig& cfg);

}  // namespace diskoct
