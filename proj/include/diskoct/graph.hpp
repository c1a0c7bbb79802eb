#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace diskoct {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable after construction. Duplicate edges passed to the constructor
/// are merged; self-loops and out-of-range endpoints throw GraphError.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < adj_.size(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

struct TwoColoring {
  std::vector<std::uint8_t> color;
};

/// Closed walk v0 v1 ... v(k-1) v0 with k odd and all vertices distinct.
struct OddCycle {
  std::vector<Vertex> vertices;
};

using BipartitenessCertificate = std::variant<TwoColoring, OddCycle>;

BipartitenessCertificate is_bipartite(const Graph& g);

inline bool certifies_bipartite(const BipartitenessCertificate& c) {
  return std::holds_alternative<TwoColoring>(c);
}

/// Induced subgraph together with the map back to the parent's ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  Vertex lift(Vertex v) const { return to_parent[static_cast<std::size_t>(v)]; }
  VertexSet lift(std::span<const Vertex> vs) const;
};

/// g minus `removed`; survivors are renumbered densely in increasing id order.
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// g[kept], renumbered densely in increasing id order.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept);

struct Degeneracy {
  std::size_t value = 0;
  std::vector<Vertex> ordering;  // removal order of the min-degree peeling
};

Degeneracy degeneracy(const Graph& g);

/// Greedy maximal distance-3 independent set of g[domain]: take the lowest id
/// still available, then discard its radius-3 ball in g[domain].
VertexSet greedy_distance3_mis(const Graph& g, std::span<const Vertex> domain);

// Small helpers over sorted vertex sets.
VertexSet make_set(std::vector<Vertex> vs);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
bool set_contains(std::span<const Vertex> s, Vertex v);

/// Degree of every vertex of g inside g[within]; entries outside `within` are 0.
std::vector<std::size_t> induced_degrees(const Graph& g, std::span<const Vertex> within);

}  // namespace diskoct
