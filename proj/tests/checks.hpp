#pragma once

// Invariant checkers shared by the unit and acceptance suites.

#include <algorithm>
#include <string>
#include <vector>

#include "diskoct/cliques.hpp"
#include "diskoct/geometry.hpp"
#include "diskoct/graph.hpp"
#include "diskoct/solver.hpp"

namespace diskoct::check {

/// Disk graph of a generated instance with a maximal K4 packing removed.
inline Graph k4_reduced(const GeneratorParams& params) {
  const Graph g = build_disk_graph(generate_random_instance(params));
  return delete_vertices(g, maximal_k4_packing(g).covered()).graph;
}

/// Violations of the R_i structure: two vertices per low triangle, each low vertex in two
/// of the R_i, N(I_i) inside R_i and I_i outside it, high triangles inside every R_i,
/// equal block sizes, and every I_i vertex dead.
inline std::vector<std::string> derand_violations(const Graph& g, const TrianglePacking& packing,
                                                  const DerandState& st) {
  std::vector<std::string> out;
  const std::size_t block = st.independent.size() / 3;
  for (std::size_t i = 0; i < 3; ++i) {
    if (st.blocks[i].size() != block) out.push_back("block size of I_" + std::to_string(i + 1));
    if (!set_intersection(st.r[i], st.blocks[i]).empty()) out.push_back("R_i meets I_i for i=" + std::to_string(i + 1));
    for (Vertex v : st.blocks[i]) {
      for (Vertex w : g.neighbors(v)) {
        if (set_contains(st.low, w) && !set_contains(st.r[i], w)) {
          out.push_back("N(I_i) not inside R_i at " + std::to_string(w));
        }
      }
    }
    const VertexSet dead = dead_vertices(g, packing, st.r[i]);
    for (Vertex v : st.blocks[i]) {
      if (!set_contains(dead, v)) out.push_back("I_i vertex " + std::to_string(v) + " not dead");
    }
  }
  for (const Triangle& t : packing.members) {
    const bool high = std::all_of(t.begin(), t.end(), [&](Vertex v) { return set_contains(st.high, v); });
    if (high) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (Vertex v : t) {
          if (!set_contains(st.r[i], v)) out.push_back("H-triangle vertex outside R_i");
        }
      }
      continue;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const auto in = std::count_if(t.begin(), t.end(), [&](Vertex v) { return set_contains(st.r[i], v); });
      if (in != 2) out.push_back("L-triangle contributes " + std::to_string(in) + " vertices to R_i");
    }
    for (Vertex v : t) {
      int hits = 0;
      for (std::size_t i = 0; i < 3; ++i) hits += set_contains(st.r[i], v) ? 1 : 0;
      if (hits != 2) out.push_back("L-vertex " + std::to_string(v) + " in " + std::to_string(hits) + " R_i");
    }
  }
  return out;
}

/// Size of the packing of g - R: 3|T'| <= 3|T| + 3 tri(O) - |R| - |D|.
inline bool second_packing_bound_holds(std::size_t t, std::size_t tri_outside, const S2Attempt& attempt) {
  const auto lhs = static_cast<long long>(3 * attempt.t_prime.size());
  const auto rhs = static_cast<long long>(3 * t + 3 * tri_outside) - static_cast<long long>(attempt.r.size()) -
                   static_cast<long long>(attempt.dead.size());
  return lhs <= rhs;
}

}  // namespace diskoct::check
