#include "diskoct/base_solvers.hpp"

#include <algorithm>
#include <limits>

namespace diskoct {

namespace {

using Mask = std::vector<std::uint8_t>;

// Shared BFS scratch space for odd-cycle searches over a vertex mask.
class CycleFinder {
 public:
  explicit CycleFinder(const Graph& g)
      : g_(g), level_(g.vertex_count(), -1), parent_(g.vertex_count(), -1) {}

  // Shortest odd cycle of g[allowed]. Rooting the BFS at s and restricting it
  // to ids >= s still finds every cycle whose smallest vertex is s.
  std::optional<std::vector<Vertex>> shortest(const Mask& allowed) {
    const auto n = static_cast<Vertex>(g_.vertex_count());
    int best_len = std::numeric_limits<int>::max();
    std::optional<std::vector<Vertex>> best;
    for (Vertex s = 0; s < n; ++s) {
      if (!allowed[idx(s)] || g_.degree(s) < 2) continue;
      auto found = bfs_from(s, allowed, best_len, /*restrict_above=*/true);
      if (found && static_cast<int>(found->size()) < best_len) {
        best_len = static_cast<int>(found->size());
        best = std::move(found);
        if (best_len == 3) break;
      }
    }
    return best;
  }

  // Any odd cycle of g[allowed] found by plain BFS two-coloring.
  std::optional<std::vector<Vertex>> any(const Mask& allowed) {
    const auto n = static_cast<Vertex>(g_.vertex_count());
    std::fill(level_.begin(), level_.end(), -1);
    for (Vertex s = 0; s < n; ++s) {
      if (!allowed[idx(s)] || level_[idx(s)] >= 0) continue;
      if (auto found = bfs_component(s, allowed)) return found;
    }
    return std::nullopt;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  std::vector<Vertex> climb(Vertex u, Vertex w) const {
    std::vector<Vertex> up_u{u};
    std::vector<Vertex> up_w{w};
    while (u != w) {
      u = parent_[idx(u)];
      w = parent_[idx(w)];
      up_u.push_back(u);
      up_w.push_back(w);
    }
    std::vector<Vertex> cycle(up_u.rbegin(), up_u.rend());
    cycle.insert(cycle.end(), up_w.begin(), up_w.end() - 1);
    return cycle;
  }

  std::optional<std::vector<Vertex>> bfs_from(Vertex s, const Mask& allowed, int cap, bool restrict_above) {
    queue_.assign(1, s);
    level_[idx(s)] = 0;
    parent_[idx(s)] = -1;
    std::optional<std::vector<Vertex>> found;
    for (std::size_t head = 0; head < queue_.size() && !found; ++head) {
      const Vertex u = queue_[head];
      const int lu = level_[idx(u)];
      if (2 * lu + 1 >= cap) break;
      for (Vertex w : g_.neighbors(u)) {
        if (!allowed[idx(w)] || (restrict_above && w < s)) continue;
        if (level_[idx(w)] < 0) {
          level_[idx(w)] = lu + 1;
          parent_[idx(w)] = u;
          queue_.push_back(w);
        } else if (level_[idx(w)] == lu) {
          found = climb(u, w);
          break;
        }
      }
    }
    for (Vertex v : queue_) level_[idx(v)] = -1;
    return found;
  }

  std::optional<std::vector<Vertex>> bfs_component(Vertex s, const Mask& allowed) {
    // Leaves levels set so the caller skips finished components.
    queue_.assign(1, s);
    level_[idx(s)] = 0;
    parent_[idx(s)] = -1;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex u = queue_[head];
      for (Vertex w : g_.neighbors(u)) {
        if (!allowed[idx(w)]) continue;
        if (level_[idx(w)] < 0) {
          level_[idx(w)] = level_[idx(u)] + 1;
          parent_[idx(w)] = u;
          queue_.push_back(w);
        } else if ((level_[idx(w)] & 1) == (level_[idx(u)] & 1)) {
          return climb(u, w);
        }
      }
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::vector<int> level_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> queue_;
};

std::size_t masked_degree(const Graph& g, const Mask& alive, Vertex v) {
  std::size_t d = 0;
  for (Vertex w : g.neighbors(v)) d += alive[static_cast<std::size_t>(w)];
  return d;
}

VertexSet greedy_oct_masked(const Graph& g) {
  Mask alive(g.vertex_count(), 1);
  CycleFinder finder(g);
  std::vector<Vertex> removed;
  while (auto cycle = finder.any(alive)) {
    Vertex pick = cycle->front();
    std::size_t pick_deg = 0;
    bool first = true;
    for (Vertex v : *cycle) {
      const std::size_t d = masked_degree(g, alive, v);
      if (first || d > pick_deg || (d == pick_deg && v < pick)) {
        pick = v;
        pick_deg = d;
        first = false;
      }
    }
    alive[static_cast<std::size_t>(pick)] = 0;
    removed.push_back(pick);
  }
  return make_set(std::move(removed));
}

class OctSearch {
 public:
  OctSearch(const Graph& g, std::uint64_t budget)
      : g_(g), finder_(g), budget_(budget), alive_(g.vertex_count(), 1), locked_(g.vertex_count(), 0) {}

  ExactSolution run() {
    best_ = greedy_oct_masked(g_);
    search();
    return ExactSolution{best_, !exhausted_, nodes_};
  }

 private:
  static constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max() / 2;
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  std::size_t lower_bound() {
    const auto n = static_cast<Vertex>(g_.vertex_count());
    Mask free = alive_;
    std::size_t bound = 0;
    std::vector<Vertex> clique;
    for (Vertex v = 0; v < n; ++v) {
      if (!free[idx(v)]) continue;
      clique.assign(1, v);
      for (Vertex w : g_.neighbors(v)) {
        if (!free[idx(w)]) continue;
        if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g_.has_edge(c, w); })) {
          clique.push_back(w);
        }
      }
      if (clique.size() < 4) continue;
      const auto locked = std::count_if(clique.begin(), clique.end(), [&](Vertex c) { return locked_[idx(c)] != 0; });
      if (locked >= 3) return kInfeasible;
      bound += clique.size() - 2;
      for (Vertex c : clique) free[idx(c)] = 0;
    }
    while (auto cycle = finder_.shortest(free)) {
      if (std::all_of(cycle->begin(), cycle->end(), [&](Vertex c) { return locked_[idx(c)] != 0; })) {
        return kInfeasible;
      }
      ++bound;
      for (Vertex c : *cycle) free[idx(c)] = 0;
    }
    return bound;
  }

  void search() {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    auto cycle = finder_.shortest(alive_);
    if (!cycle) {
      if (deleted_.size() < best_.size()) best_ = make_set(deleted_);
      return;
    }
    if (deleted_.size() + 1 >= best_.size()) return;
    const std::size_t lb = lower_bound();
    if (lb >= kInfeasible || deleted_.size() + lb >= best_.size()) return;

    std::vector<Vertex> branch;
    for (Vertex v : *cycle) {
      if (!locked_[idx(v)]) branch.push_back(v);
    }
    std::vector<std::size_t> deg(g_.vertex_count(), 0);
    for (Vertex v : branch) deg[idx(v)] = masked_degree(g_, alive_, v);
    std::sort(branch.begin(), branch.end(), [&](Vertex a, Vertex b) {
      return deg[idx(a)] != deg[idx(b)] ? deg[idx(a)] > deg[idx(b)] : a < b;
    });
    // Branch i deletes branch[i] and keeps branch[0..i) for good.
    for (Vertex v : branch) {
      alive_[idx(v)] = 0;
      deleted_.push_back(v);
      search();
      deleted_.pop_back();
      alive_[idx(v)] = 1;
      locked_[idx(v)] = 1;
      if (exhausted_ || deleted_.size() + 1 >= best_.size()) break;
    }
    for (Vertex v : branch) locked_[idx(v)] = 0;
  }

  const Graph& g_;
  CycleFinder finder_;
  std::uint64_t budget_;
  Mask alive_;
  Mask locked_;
  std::vector<Vertex> deleted_;
  VertexSet best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back(1, static_cast<Vertex>(s));
    comp[s] = id;
    auto& members = out.back();
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return out;
}

}  // namespace

std::optional<OddCycle> shortest_odd_cycle(const Graph& g) {
  CycleFinder finder(g);
  const Mask all(g.vertex_count(), 1);
  if (auto c = finder.shortest(all)) return OddCycle{std::move(*c)};
  return std::nullopt;
}

VertexSet greedy_oct(const Graph& g) { return greedy_oct_masked(g); }

ExactSolution exact_oct(const Graph& g, std::uint64_t node_budget) {
  ExactSolution total;
  total.optimal = true;
  std::vector<Vertex> chosen;
  for (const auto& members : components(g)) {
    if (members.size() < 3) continue;
    const Subgraph sub = induced_subgraph(g, members);
    if (certifies_bipartite(is_bipartite(sub.graph))) continue;
    const std::uint64_t left = node_budget > total.nodes_explored ? node_budget - total.nodes_explored : 0;
    ExactSolution part = OctSearch(sub.graph, left).run();
    total.nodes_explored += std::min(part.nodes_explored, left);
    total.optimal = total.optimal && part.optimal;
    for (Vertex v : part.vertices) chosen.push_back(sub.lift(v));
  }
  total.vertices = make_set(std::move(chosen));
  return total;
}

std::string_view to_string(BaseKind kind) {
  return kind == BaseKind::exact ? "exact" : "greedy-fallback";
}

std::optional<BaseKind> parse_base_kind(std::string_view text) {
  if (text == "exact") return BaseKind::exact;
  if (text == "greedy-fallback" || text == "greedy") return BaseKind::greedy_fallback;
  return std::nullopt;
}

BaseOutcome base_solve(const BaseSubroutine& sub, const Graph& g) {
  if (sub.kind == BaseKind::greedy_fallback) return BaseOutcome{greedy_oct(g), false};
  ExactSolution s = exact_oct(g, sub.node_budget);
  return BaseOutcome{std::move(s.vertices), s.optimal};
}

}  // namespace diskoct
