#pragma once

// Brute-force reference implementations used only by the tests. None of them
// share code paths with the library routines they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "diskoct/cliques.hpp"
#include "diskoct/geometry.hpp"
#include "diskoct/graph.hpp"
#include "diskoct/rng.hpp"

namespace diskoct::oracle {

inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (static_cast<double>(uniform_below(rng, 1'000'000)) < p * 1e6) {
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, edges);
}

// Adjacency matrix copy so the oracles never touch adjacency lists.
inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) a[u][v] = g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return a;
}

namespace detail {

inline bool odd_cycle_dfs(const std::vector<std::vector<bool>>& a, std::size_t start, std::size_t at,
                          std::size_t len, std::vector<bool>& on_path) {
  const std::size_t n = a.size();
  for (std::size_t w = start; w < n; ++w) {
    if (!a[at][w]) continue;
    if (w == start && len >= 3 && len % 2 == 1) return true;
    if (w == start || on_path[w]) continue;
    on_path[w] = true;
    if (odd_cycle_dfs(a, start, w, len + 1, on_path)) return true;
    on_path[w] = false;
  }
  return false;
}

}  // namespace detail

/// Exhaustive simple-cycle search; exponential, for n <= ~10.
inline bool has_odd_cycle(const Graph& g) {
  const auto a = matrix(g);
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> on_path(n, false);
    on_path[s] = true;
    if (detail::odd_cycle_dfs(a, s, s, 1, on_path)) return true;
  }
  return false;
}

/// Is g minus `removed_mask` two-colourable? Tries every colouring.
inline bool bipartite_by_enumeration(const std::vector<std::vector<bool>>& a, std::uint32_t removed_mask) {
  const std::size_t n = a.size();
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v)
    if (!(removed_mask >> v & 1U)) keep.push_back(v);
  const std::size_t k = keep.size();
  if (k == 0) return true;
  // Vertex keep[0] fixed to side 0.
  for (std::uint32_t col = 0; col < (1U << (k - 1)); ++col) {
    auto side = [&](std::size_t i) { return i == 0 ? 0U : (col >> (i - 1)) & 1U; };
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j)
        if (a[keep[i]][keep[j]] && side(i) == side(j)) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Minimum OCT size by subset enumeration in order of increasing size.
inline std::size_t min_oct_size(const Graph& g) {
  const auto a = matrix(g);
  const std::size_t n = a.size();
  for (std::size_t size = 0; size <= n; ++size) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      if (bipartite_by_enumeration(a, mask)) return size;
    }
  }
  return n;
}

inline std::vector<Triangle> triangles(const Graph& g) {
  const auto a = matrix(g);
  const auto n = static_cast<Vertex>(a.size());
  std::vector<Triangle> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w)
        if (a[u][v] && a[v][w] && a[u][w]) out.push_back({u, v, w});
  return out;
}

inline Graph naive_disk_graph(const DiskInstance& inst) {
  const auto& d = inst.disks();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const long double dx = static_cast<long double>(d[i].cx - d[j].cx);
      const long double dy = static_cast<long double>(d[i].cy - d[j].cy);
      const long double rs = static_cast<long double>(d[i].r + d[j].r);
      if (dx * dx + dy * dy <= rs * rs) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(d.size(), edges);
}

/// Graph distance within g[domain] by Floyd-Warshall; -1 if unreachable.
inline std::vector<std::vector<int>> distances_within(const Graph& g, const std::vector<Vertex>& domain) {
  const std::size_t n = g.vertex_count();
  constexpr int kInf = 1 << 20;
  std::vector<bool> in(n, false);
  for (Vertex v : domain) in[static_cast<std::size_t>(v)] = true;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t u = 0; u < n; ++u) {
    if (!in[u]) continue;
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (in[v] && g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  for (auto& row : d)
    for (int& x : row)
      if (x >= kInf) x = -1;
  return d;
}

/// Largest disjoint subfamily by enumerating all subsets (family size <= ~20).
inline std::size_t max_disjoint_subfamily(const std::vector<Triangle>& family) {
  std::size_t best = 0;
  const std::size_t k = family.size();
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    std::vector<Vertex> used;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (!(mask >> i & 1U)) continue;
      for (Vertex v : family[i]) {
        if (std::find(used.begin(), used.end(), v) != used.end()) ok = false;
        used.push_back(v);
      }
    }
    if (ok) best = std::max(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

}  // namespace diskoct::oracle
