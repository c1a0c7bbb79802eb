#include "diskoct/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace diskoct {

Graph::Graph(std::size_t vertex_count) : adj_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adj_(vertex_count) {
  const auto n = static_cast<Vertex>(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for " + std::to_string(vertex_count) + " vertices");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                              : std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

BipartitenessCertificate is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> color(n, kUnset);
  std::vector<Vertex> parent(n, -1);
  std::deque<Vertex> queue;

  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != kUnset) continue;
    color[s] = 0;
    queue.push_back(static_cast<Vertex>(s));
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        const auto wi = static_cast<std::size_t>(w);
        if (color[wi] == kUnset) {
          color[wi] = static_cast<std::uint8_t>(1 - color[static_cast<std::size_t>(u)]);
          parent[wi] = u;
          queue.push_back(w);
        } else if (color[wi] == color[static_cast<std::size_t>(u)]) {
          // u and w sit on the same BFS level; climb both to their common ancestor.
          std::vector<Vertex> up_u{u};
          std::vector<Vertex> up_w{w};
          Vertex a = u;
          Vertex b = w;
          while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
            up_u.push_back(a);
            up_w.push_back(b);
          }
          OddCycle cycle;
          cycle.vertices.assign(up_u.rbegin(), up_u.rend());
          cycle.vertices.insert(cycle.vertices.end(), up_w.begin(), up_w.end() - 1);
          return cycle;
        }
      }
    }
  }
  return TwoColoring{std::move(color)};
}

VertexSet Subgraph::lift(std::span<const Vertex> vs) const {
  VertexSet out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(lift(v));
  std::sort(out.begin(), out.end());
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> kept) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> to_child(n, -1);
  Subgraph sub;
  for (Vertex v : kept) {
    if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<bool> keep(n, false);
  for (Vertex v : kept) keep[static_cast<std::size_t>(v)] = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    to_child[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(static_cast<Vertex>(v));
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    const Vertex cu = to_child[static_cast<std::size_t>(u)];
    const Vertex cv = to_child[static_cast<std::size_t>(v)];
    if (cu >= 0 && cv >= 0) edges.emplace_back(cu, cv);
  }
  sub.graph = Graph(sub.to_parent.size(), edges);
  return sub;
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> gone(n, false);
  for (Vertex v : removed) {
    if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    gone[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Vertex> kept;
  for (std::size_t v = 0; v < n; ++v) {
    if (!gone[v]) kept.push_back(static_cast<Vertex>(v));
  }
  return induced_subgraph(g, kept);
}

Degeneracy degeneracy(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling.
  const std::size_t n = g.vertex_count();
  Degeneracy result;
  if (n == 0) return result;

  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (std::size_t v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<std::size_t> pos(n);
  std::vector<Vertex> order(n);
  for (std::size_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]];
    order[pos[v]] = static_cast<Vertex>(v);
    ++bin[deg[v]];
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::size_t>(order[i]);
    result.value = std::max(result.value, deg[v]);
    for (Vertex wv : g.neighbors(static_cast<Vertex>(v))) {
      const auto w = static_cast<std::size_t>(wv);
      if (deg[w] > deg[v]) {
        const std::size_t dw = deg[w];
        const std::size_t pw = pos[w];
        const std::size_t ps = bin[dw];
        const auto u = static_cast<std::size_t>(order[ps]);
        if (u != w) {
          order[pw] = static_cast<Vertex>(u);
          pos[u] = pw;
          order[ps] = static_cast<Vertex>(w);
          pos[w] = ps;
        }
        ++bin[dw];
        --deg[w];
      }
    }
  }
  result.ordering = std::move(order);
  return result;
}

VertexSet greedy_distance3_mis(const Graph& g, std::span<const Vertex> domain) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_domain(n, false);
  for (Vertex v : domain) {
    if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    in_domain[static_cast<std::size_t>(v)] = true;
  }
  std::vector<bool> candidate = in_domain;
  std::vector<int> dist(n, -1);
  std::vector<Vertex> touched;
  VertexSet chosen;

  for (std::size_t s = 0; s < n; ++s) {
    if (!candidate[s]) continue;
    chosen.push_back(static_cast<Vertex>(s));
    // Radius-3 ball around s inside g[domain].
    touched.assign(1, static_cast<Vertex>(s));
    dist[s] = 0;
    for (std::size_t head = 0; head < touched.size(); ++head) {
      const Vertex u = touched[head];
      candidate[static_cast<std::size_t>(u)] = false;
      if (dist[static_cast<std::size_t>(u)] == 3) continue;
      for (Vertex w : g.neighbors(u)) {
        const auto wi = static_cast<std::size_t>(w);
        if (!in_domain[wi] || dist[wi] >= 0) continue;
        dist[wi] = dist[static_cast<std::size_t>(u)] + 1;
        touched.push_back(w);
      }
    }
    for (Vertex u : touched) dist[static_cast<std::size_t>(u)] = -1;
  }
  return chosen;
}

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(std::span<const Vertex> s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

std::vector<std::size_t> induced_degrees(const Graph& g, std::span<const Vertex> within) {
  std::vector<bool> mask(g.vertex_count(), false);
  for (Vertex v : within) mask[static_cast<std::size_t>(v)] = true;
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (Vertex v : within) {
    for (Vertex w : g.neighbors(v)) {
      if (mask[static_cast<std::size_t>(w)]) ++deg[static_cast<std::size_t>(v)];
    }
  }
  return deg;
}

}  // namespace diskoct
