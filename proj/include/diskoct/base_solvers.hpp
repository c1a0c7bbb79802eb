#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "diskoct/graph.hpp"

namespace diskoct {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Minimum odd cycle transversal search result.
struct ExactSolution {
  VertexSet vertices;
  bool optimal = false;  // false when the node budget ran out first
  std::uint64_t nodes_explored = 0;
};

/// Branch-and-bound minimum OCT. Branches on the deletable vertices of a
/// shortest odd cycle and prunes with a packing lower bound (disjoint cliques
/// of size k >= 4 count k - 2, then disjoint odd cycles count 1 each).
/// Connected components are solved independently under a shared budget.
ExactSolution exact_oct(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// Shortest odd cycle of g, if g is not bipartite.
std::optional<OddCycle> shortest_odd_cycle(const Graph& g);

/// Repeatedly delete the highest-degree vertex (lowest id on ties) of an odd
/// cycle until the rest is bipartite. No ratio guarantee.
VertexSet greedy_oct(const Graph& g);

enum class BaseKind { exact, greedy_fallback };

std::string_view to_string(BaseKind kind);
std::optional<BaseKind> parse_base_kind(std::string_view text);

/// The OCT subroutine applied to the triangle-free remainders.
struct BaseSubroutine {
  BaseKind kind = BaseKind::exact;
  std::uint64_t node_budget = kDefaultNodeBudget;

  /// 1 for the exact solver; none for the greedy fallback.
  std::optional<double> declared_ratio() const {
    return kind == BaseKind::exact ? std::optional<double>(1.0) : std::nullopt;
  }
};

struct BaseOutcome {
  VertexSet vertices;
  bool certified_optimal = false;
};

BaseOutcome base_solve(const BaseSubroutine& sub, const Graph& g);

}  // namespace diskoct
