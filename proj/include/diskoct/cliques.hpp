#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "diskoct/graph.hpp"

namespace diskoct {

/// Vertex ids of a K-clique, sorted ascending.
template <std::size_t K>
using Clique = std::array<Vertex, K>;

using Triangle = Clique<3>;
using K4 = Clique<4>;

/// Vertex-disjoint family of K-cliques.
template <std::size_t K>
struct Packing {
  std::vector<Clique<K>> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }

  /// V(packing), sorted.
  VertexSet covered() const {
    std::vector<Vertex> vs;
    vs.reserve(K * members.size());
    for (const auto& m : members) vs.insert(vs.end(), m.begin(), m.end());
    return make_set(std::move(vs));
  }
};

using TrianglePacking = Packing<3>;
using K4Packing = Packing<4>;

/// All triangles of g, each once, in lexicographic order.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// All K4s of g, each once, in lexicographic order.
std::vector<K4> enumerate_k4s(const Graph& g);

/// First K4 in lexicographic order, if any.
std::optional<K4> find_k4(const Graph& g);

/// Lexicographic greedy maximal packing of the triangles of g. With a shuffle
/// seed, the greedy scans triangles in a seeded random order instead.
TrianglePacking maximal_triangle_packing(const Graph& g, std::optional<std::uint64_t> shuffle_seed = {});

K4Packing maximal_k4_packing(const Graph& g);

/// Triangles of g with at least one vertex outside V(packing).
std::vector<Triangle> outside_triangles(const Graph& g, const TrianglePacking& packing);

/// Greedy maximal packing restricted to `family`, scanned in lexicographic order.
TrianglePacking maximal_packing_of(std::span<const Triangle> family);

/// Exact maximum packing size of `family`, or nullopt when the search needs
/// more than `node_budget` branch-and-bound nodes.
std::optional<std::size_t> maximum_packing_size(std::span<const Triangle> family, std::uint64_t node_budget);

}  // namespace diskoct
