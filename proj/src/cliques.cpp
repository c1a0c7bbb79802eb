#include "diskoct/cliques.hpp"

#include <algorithm>

#include "diskoct/rng.hpp"

namespace diskoct {

namespace {

// Neighbors of u greater than `above`, as a sorted span suffix.
std::span<const Vertex> higher_neighbors(const Graph& g, Vertex u, Vertex above) {
  const auto nbrs = g.neighbors(u);
  const auto it = std::upper_bound(nbrs.begin(), nbrs.end(), above);
  return nbrs.subspan(static_cast<std::size_t>(it - nbrs.begin()));
}

template <std::size_t K>
Packing<K> greedy_pack(std::span<const Clique<K>> family, std::size_t vertex_bound) {
  std::vector<bool> used(vertex_bound, false);
  Packing<K> out;
  for (const auto& c : family) {
    if (std::any_of(c.begin(), c.end(), [&](Vertex v) { return used[static_cast<std::size_t>(v)]; })) continue;
    for (Vertex v : c) used[static_cast<std::size_t>(v)] = true;
    out.members.push_back(c);
  }
  return out;
}

template <std::size_t K>
std::size_t vertex_bound_of(std::span<const Clique<K>> family) {
  Vertex hi = -1;
  for (const auto& c : family) hi = std::max(hi, c.back());
  return static_cast<std::size_t>(hi + 1);
}

}  // namespace

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  std::vector<Vertex> common;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    const auto nu = higher_neighbors(g, u, u);
    for (Vertex v : nu) {
      const auto nv = higher_neighbors(g, v, v);
      common.clear();
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
      for (Vertex w : common) out.push_back({u, v, w});
    }
  }
  return out;
}

std::vector<K4> enumerate_k4s(const Graph& g) {
  std::vector<K4> out;
  std::vector<Vertex> uv;
  std::vector<Vertex> uvw;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    const auto nu = higher_neighbors(g, u, u);
    for (Vertex v : nu) {
      const auto nv = higher_neighbors(g, v, v);
      uv.clear();
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(uv));
      for (Vertex w : uv) {
        const auto nw = higher_neighbors(g, w, w);
        uvw.clear();
        std::set_intersection(uv.begin(), uv.end(), nw.begin(), nw.end(), std::back_inserter(uvw));
        for (Vertex x : uvw) out.push_back({u, v, w, x});
      }
    }
  }
  return out;
}

std::optional<K4> find_k4(const Graph& g) {
  // Cheap enough for the graph sizes handled here; stops at the first hit.
  std::vector<Vertex> uv;
  std::vector<Vertex> uvw;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    const auto nu = higher_neighbors(g, u, u);
    for (Vertex v : nu) {
      const auto nv = higher_neighbors(g, v, v);
      uv.clear();
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(uv));
      for (Vertex w : uv) {
        const auto nw = higher_neighbors(g, w, w);
        uvw.clear();
        std::set_intersection(uv.begin(), uv.end(), nw.begin(), nw.end(), std::back_inserter(uvw));
        if (!uvw.empty()) return K4{u, v, w, uvw.front()};
      }
    }
  }
  return std::nullopt;
}

TrianglePacking maximal_triangle_packing(const Graph& g, std::optional<std::uint64_t> shuffle_seed) {
  auto triangles = enumerate_triangles(g);
  if (shuffle_seed) {
    Rng rng(mix_seed(*shuffle_seed, 0x7061636bULL));
    for (std::size_t i = triangles.size(); i > 1; --i) {
      std::swap(triangles[i - 1], triangles[uniform_below(rng, i)]);
    }
  }
  return greedy_pack<3>(triangles, g.vertex_count());
}

K4Packing maximal_k4_packing(const Graph& g) {
  const auto k4s = enumerate_k4s(g);
  return greedy_pack<4>(k4s, g.vertex_count());
}

std::vector<Triangle> outside_triangles(const Graph& g, const TrianglePacking& packing) {
  std::vector<bool> covered(g.vertex_count(), false);
  for (const auto& t : packing.members) {
    for (Vertex v : t) covered[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Triangle> out;
  for (const auto& t : enumerate_triangles(g)) {
    if (std::any_of(t.begin(), t.end(), [&](Vertex v) { return !covered[static_cast<std::size_t>(v)]; })) {
      out.push_back(t);
    }
  }
  return out;
}

TrianglePacking maximal_packing_of(std::span<const Triangle> family) {
  std::vector<Triangle> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  return greedy_pack<3>(std::span<const Triangle>(sorted), vertex_bound_of<3>(std::span<const Triangle>(sorted)));
}

namespace {

class PackingSearch {
 public:
  PackingSearch(std::vector<Triangle> family, std::uint64_t budget)
      : family_(std::move(family)), budget_(budget), used_(vertex_bound_of<3>(std::span<const Triangle>(family_)), 0) {}

  std::optional<std::size_t> run() {
    best_ = greedy_pack<3>(std::span<const Triangle>(family_), used_.size()).size();
    search(0, 0);
    if (exhausted_) return std::nullopt;
    return best_;
  }

 private:
  bool fits(const Triangle& t) const {
    return std::none_of(t.begin(), t.end(), [&](Vertex v) { return used_[static_cast<std::size_t>(v)] != 0; });
  }

  std::size_t upper_bound(std::size_t from) {
    std::size_t compatible = 0;
    ++stamp_;
    if (seen_.size() < used_.size()) seen_.assign(used_.size(), 0);
    std::size_t free_vertices = 0;
    for (std::size_t i = from; i < family_.size(); ++i) {
      if (!fits(family_[i])) continue;
      ++compatible;
      for (Vertex v : family_[i]) {
        auto& s = seen_[static_cast<std::size_t>(v)];
        if (s != stamp_) {
          s = stamp_;
          ++free_vertices;
        }
      }
    }
    return std::min(compatible, free_vertices / 3);
  }

  void search(std::size_t from, std::size_t taken) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    while (from < family_.size() && !fits(family_[from])) ++from;
    if (from == family_.size()) {
      best_ = std::max(best_, taken);
      return;
    }
    if (taken + upper_bound(from) <= best_) return;
    const Triangle& t = family_[from];
    for (Vertex v : t) used_[static_cast<std::size_t>(v)] = 1;
    search(from + 1, taken + 1);
    for (Vertex v : t) used_[static_cast<std::size_t>(v)] = 0;
    search(from + 1, taken);
  }

  std::vector<Triangle> family_;
  std::uint64_t budget_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint64_t> seen_;
  std::uint64_t stamp_ = 0;
  std::uint64_t nodes_ = 0;
  std::size_t best_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::optional<std::size_t> maximum_packing_size(std::span<const Triangle> family, std::uint64_t node_budget) {
  std::vector<Triangle> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return PackingSearch(std::move(sorted), node_budget).run();
}

}  // namespace diskoct
