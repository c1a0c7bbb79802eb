#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "diskoct/base_solvers.hpp"
#include "diskoct/cliques.hpp"
#include "diskoct/graph.hpp"
#include "diskoct/rng.hpp"

namespace diskoct {

/// Vertices of degree above this in G[V(T)] are "high" in the derandomized construction.
inline constexpr std::size_t kHighDegreeThreshold = 100;

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Variant { randomized, derandomized };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

struct SolverConfig {
  Variant variant = Variant::derandomized;
  std::uint64_t seed = 0;
  std::size_t repeats = 5;  // best-of-k for the randomized variant; forced to 1 otherwise
  BaseSubroutine base;
  bool collect_diagnostics = false;
  std::uint64_t diagnostics_budget = kDefaultNodeBudget;
  std::optional<std::uint64_t> packing_shuffle_seed;  // lexicographic greedy when unset

  std::size_t effective_repeats() const { return variant == Variant::derandomized ? 1 : std::max<std::size_t>(repeats, 1); }
};

enum class Candidate { s1, s2, s3 };
std::string_view to_string(Candidate c);

/// Artifacts of the deterministic R construction on a K4-free graph.
struct DerandState {
  VertexSet high_prime;  // H': degree > 100 in G[V(T)]
  VertexSet high;        // H = V(triangles meeting H')
  VertexSet low;         // L = V(T) \ H
  std::vector<Triangle> low_triangles;
  VertexSet independent;              // I
  std::array<VertexSet, 3> blocks;    // I_1, I_2, I_3
  std::array<VertexSet, 3> r;         // R_1, R_2, R_3
  std::array<VertexSet, 3> r_low;     // R_i ∩ L
};

/// Keeps one uniform vertex of each packed triangle; returns the other two of each.
VertexSet sample_R(const TrianglePacking& packing, Rng& rng);

/// Three candidate R sets, at least one of which hits an optimum in a third
/// of its vertices while leaving every vertex of its block I_i dead.
/// Throws PreconditionError if g contains a K4.
DerandState construct_derandomized_R(const Graph& g, const TrianglePacking& packing);

/// Vertices v of V(packing) \ R that lie in no triangle of G[V(packing) \ R].
VertexSet dead_vertices(const Graph& g, const TrianglePacking& packing, std::span<const Vertex> R);

/// One S2 attempt: R, the maximal packing T' of g - R, and the candidate set.
struct S2Attempt {
  VertexSet r;
  TrianglePacking t_prime;
  VertexSet dead;
  VertexSet solution;
};

/// What the top level of one run computed, kept for diagnostics and tests.
struct SolveTrace {
  TrianglePacking packing;                 // T
  std::vector<Triangle> outside;           // O
  VertexSet s1;
  std::vector<S2Attempt> s2_attempts;      // one per R tried
  std::size_t best_attempt = 0;
  std::optional<TrianglePacking> t_double_prime;  // T''
  std::optional<VertexSet> s3;
  std::optional<DerandState> derand;
  std::size_t depth = 0;                   // deepest recursive call below this level
  bool base_always_exact = true;           // every base call certified optimal
};

struct SolveDiagnostics {
  std::optional<std::size_t> opt;          // of the K4-free graph handed to solve_k4free
  std::optional<std::size_t> tri_outside;  // maximum packing size of O
  std::optional<double> a;
  std::optional<double> b_hat;
  double d_avg = 0.0;
  std::size_t dead_count = 0;
  std::size_t s1 = 0;
  std::optional<std::size_t> s2;
  std::optional<std::size_t> s3;
  std::size_t depth = 0;
  std::size_t r_size = 0;
  std::size_t packing_size = 0;
  std::size_t t_prime_size = 0;
  std::optional<std::size_t> t_double_prime_size;
  std::size_t k4_removed = 0;
  bool base_exact = true;
};

struct OctResult {
  VertexSet solution;
  Candidate chosen = Candidate::s1;
  SolveTrace trace;  // of the winning repeat, in the ids of the K4-free graph
  std::optional<SolveDiagnostics> diagnostics;
  std::vector<std::size_t> repeat_sizes;  // one per randomized repeat
};

/// Algorithm for K4-free graphs: best of S1, S2 and the recursive S3.
/// Throws PreconditionError when g contains a K4.
OctResult solve_k4free(const Graph& g, const SolverConfig& cfg);

/// Removes a maximal K4 packing C, then returns V(C) plus solve_k4free on the rest.
/// The trace refers to the ids of the reduced graph `k4_free`.
struct FullResult {
  VertexSet solution;
  Candidate chosen = Candidate::s1;
  K4Packing k4_packing;
  Subgraph k4_free;
  OctResult inner;
};

FullResult solve(const Graph& g, const SolverConfig& cfg);

bool verify_solution(const Graph& g, std::span<const Vertex> s);

/// Fills the per-run diagnostics; opt and tri(O) are computed exactly within
/// `oracle_budget` nodes or left unknown.
SolveDiagnostics compute_diagnostics(const Graph& g, const SolveTrace& trace, std::uint64_t oracle_budget);

/// Average degree of g[V(packing)], 0 for an empty packing.
double packing_average_degree(const Graph& g, const TrianglePacking& packing);

}  // namespace diskoct
