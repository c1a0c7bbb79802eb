#include "diskoct/solver.hpp"

#include <algorithm>
#include <string>

namespace diskoct {

std::string_view to_string(Variant v) { return v == Variant::randomized ? "randomized" : "derandomized"; }

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "randomized") return Variant::randomized;
  if (text == "derandomized") return Variant::derandomized;
  return std::nullopt;
}

std::string_view to_string(Candidate c) {
  switch (c) {
    case Candidate::s1: return "S1";
    case Candidate::s2: return "S2";
    case Candidate::s3: return "S3";
  }
  return "?";
}

VertexSet sample_R(const TrianglePacking& packing, Rng& rng) {
  std::vector<Vertex> r;
  r.reserve(2 * packing.size());
  for (const auto& t : packing.members) {
    const auto keep = uniform_below(rng, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != keep) r.push_back(t[j]);
    }
  }
  return make_set(std::move(r));
}

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

void require_k4_free(const Graph& g) {
  if (const auto k4 = find_k4(g)) {
    throw PreconditionError("graph contains K4 {" + std::to_string((*k4)[0]) + ", " + std::to_string((*k4)[1]) +
                            ", " + std::to_string((*k4)[2]) + ", " + std::to_string((*k4)[3]) + "}");
  }
}

}  // namespace

DerandState construct_derandomized_R(const Graph& g, const TrianglePacking& packing) {
  require_k4_free(g);
  DerandState st;
  const VertexSet covered = packing.covered();
  const auto deg = induced_degrees(g, covered);
  for (Vertex v : covered) {
    if (deg[idx(v)] > kHighDegreeThreshold) st.high_prime.push_back(v);
  }

  std::vector<Vertex> high;
  for (const auto& t : packing.members) {
    const bool meets = std::any_of(t.begin(), t.end(), [&](Vertex v) { return set_contains(st.high_prime, v); });
    if (meets) {
      high.insert(high.end(), t.begin(), t.end());
    } else {
      st.low_triangles.push_back(t);
    }
  }
  std::sort(st.low_triangles.begin(), st.low_triangles.end());
  st.high = make_set(std::move(high));
  st.low = set_difference(covered, st.high);

  st.independent = greedy_distance3_mis(g, st.low);
  const std::size_t block = st.independent.size() / 3;
  for (std::size_t i = 0; i < 3; ++i) {
    st.blocks[i].assign(st.independent.begin() + static_cast<std::ptrdiff_t>(i * block),
                        st.independent.begin() + static_cast<std::ptrdiff_t>((i + 1) * block));
  }

  // owner[v] = (block index, I-vertex) for v in N_{G[L]}(I_i).
  std::vector<int> owner_block(g.vertex_count(), -1);
  std::vector<Vertex> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Vertex> nbhd;
    for (Vertex v : st.blocks[i]) {
      for (Vertex w : g.neighbors(v)) {
        if (!set_contains(st.low, w)) continue;
        nbhd.push_back(w);
        owner_block[idx(w)] = static_cast<int>(i);
        owner[idx(w)] = v;
      }
    }
    st.r[i] = set_union(st.high, make_set(std::move(nbhd)));
  }

  std::array<std::vector<Vertex>, 3> added;
  for (const auto& t : st.low_triangles) {
    int hit_block = -1;
    Vertex anchor = -1;
    for (Vertex x : t) {
      if (owner_block[idx(x)] < 0) continue;
      if (hit_block >= 0 && (owner_block[idx(x)] != hit_block || owner[idx(x)] != anchor)) {
        throw std::logic_error("distance-3 independence violated near triangle vertex " + std::to_string(x));
      }
      hit_block = owner_block[idx(x)];
      anchor = owner[idx(x)];
    }
    std::array<Vertex, 3> x = t;
    std::array<std::size_t, 3> target{0, 1, 2};
    if (hit_block >= 0) {
      // x1, x2 cover N(anchor) ∩ T; the non-adjacent vertex of lowest id fills in.
      std::vector<Vertex> adjacent;
      std::vector<Vertex> others;
      for (Vertex y : t) (g.has_edge(anchor, y) ? adjacent : others).push_back(y);
      if (adjacent.size() == 3) throw PreconditionError("K4 through vertex " + std::to_string(anchor));
      while (adjacent.size() < 2) {
        adjacent.push_back(others.front());
        others.erase(others.begin());
      }
      std::sort(adjacent.begin(), adjacent.end());
      x = {adjacent[0], adjacent[1], others.front()};
      const auto i = static_cast<std::size_t>(hit_block);
      std::size_t i1 = i == 0 ? 1 : 0;
      std::size_t i2 = i == 2 ? 1 : 2;
      target = {i, i1, i2};
    }
    added[target[0]].insert(added[target[0]].end(), {x[0], x[1]});
    added[target[1]].insert(added[target[1]].end(), {x[1], x[2]});
    added[target[2]].insert(added[target[2]].end(), {x[2], x[0]});
  }
  for (std::size_t i = 0; i < 3; ++i) {
    st.r[i] = set_union(st.r[i], make_set(std::move(added[i])));
    st.r_low[i] = set_intersection(st.r[i], st.low);
  }
  return st;
}

VertexSet dead_vertices(const Graph& g, const TrianglePacking& packing, std::span<const Vertex> R) {
  const VertexSet rest = set_difference(packing.covered(), R);
  std::vector<std::uint8_t> in_rest(g.vertex_count(), 0);
  std::vector<std::uint8_t> in_triangle(g.vertex_count(), 0);
  for (Vertex v : rest) in_rest[idx(v)] = 1;
  for (Vertex u : rest) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u || !in_rest[idx(v)]) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || !in_rest[idx(w)] || !g.has_edge(u, w)) continue;
        in_triangle[idx(u)] = in_triangle[idx(v)] = in_triangle[idx(w)] = 1;
      }
    }
  }
  VertexSet dead;
  for (Vertex v : rest) {
    if (!in_triangle[idx(v)]) dead.push_back(v);
  }
  return dead;
}

bool verify_solution(const Graph& g, std::span<const Vertex> s) {
  return certifies_bipartite(is_bipartite(delete_vertices(g, s).graph));
}

double packing_average_degree(const Graph& g, const TrianglePacking& packing) {
  const VertexSet covered = packing.covered();
  if (covered.empty()) return 0.0;
  const auto deg = induced_degrees(g, covered);
  std::size_t total = 0;
  for (Vertex v : covered) total += deg[idx(v)];
  return static_cast<double>(total) / static_cast<double>(covered.size());
}

namespace {

struct LevelResult {
  VertexSet solution;
  Candidate chosen = Candidate::s1;
  SolveTrace trace;
};

class Bipartizer {
 public:
  Bipartizer(const SolverConfig& cfg, std::uint64_t run_seed) : cfg_(cfg), run_seed_(run_seed) {}

  LevelResult run(const Graph& g, std::size_t depth) {
    LevelResult out;
    SolveTrace& tr = out.trace;
    tr.packing = packing_of(g, depth, 0);
    tr.outside = outside_triangles(g, tr.packing);
    const VertexSet covered = tr.packing.covered();

    tr.s1 = set_union(covered, base_on(g, covered, tr));

    std::vector<VertexSet> rs;
    if (cfg_.variant == Variant::randomized) {
      Rng rng(mix_seed(run_seed_, depth));
      rs.push_back(sample_R(tr.packing, rng));
    } else {
      tr.derand = construct_derandomized_R(g, tr.packing);
      rs.assign(tr.derand->r.begin(), tr.derand->r.end());
    }
    for (auto& r : rs) {
      S2Attempt attempt;
      const Subgraph rest = delete_vertices(g, r);
      const TrianglePacking local = packing_of(rest.graph, depth, 1 + tr.s2_attempts.size());
      for (const auto& t : local.members) {
        attempt.t_prime.members.push_back({rest.lift(t[0]), rest.lift(t[1]), rest.lift(t[2])});
      }
      const VertexSet removed = set_union(r, attempt.t_prime.covered());
      attempt.solution = set_union(removed, base_on(g, removed, tr));
      attempt.dead = dead_vertices(g, tr.packing, r);
      attempt.r = std::move(r);
      if (tr.s2_attempts.empty() || attempt.solution.size() < tr.s2_attempts[tr.best_attempt].solution.size()) {
        tr.best_attempt = tr.s2_attempts.size();
      }
      tr.s2_attempts.push_back(std::move(attempt));
    }

    if (!tr.outside.empty()) {
      TrianglePacking tpp = maximal_packing_of(tr.outside);
      const VertexSet cut = set_intersection(tpp.covered(), covered);
      const Subgraph rest = delete_vertices(g, cut);
      LevelResult inner = run(rest.graph, depth + 1);
      tr.depth = inner.trace.depth + 1;
      tr.base_always_exact = tr.base_always_exact && inner.trace.base_always_exact;
      tr.s3 = set_union(cut, rest.lift(inner.solution));
      tr.t_double_prime = std::move(tpp);
    }

    out.solution = tr.s1;
    out.chosen = Candidate::s1;
    const VertexSet& s2 = tr.s2_attempts[tr.best_attempt].solution;
    if (s2.size() < out.solution.size()) {
      out.solution = s2;
      out.chosen = Candidate::s2;
    }
    if (tr.s3 && tr.s3->size() < out.solution.size()) {
      out.solution = *tr.s3;
      out.chosen = Candidate::s3;
    }
    return out;
  }

 private:
  TrianglePacking packing_of(const Graph& g, std::size_t depth, std::size_t site) const {
    if (!cfg_.packing_shuffle_seed) return maximal_triangle_packing(g);
    return maximal_triangle_packing(g, mix_seed(*cfg_.packing_shuffle_seed, depth, site));
  }

  // base subroutine on g - removed, lifted back to g's ids.
  VertexSet base_on(const Graph& g, const VertexSet& removed, SolveTrace& tr) const {
    const Subgraph rest = delete_vertices(g, removed);
    BaseOutcome b = base_solve(cfg_.base, rest.graph);
    tr.base_always_exact = tr.base_always_exact && b.certified_optimal;
    return rest.lift(b.vertices);
  }

  const SolverConfig& cfg_;
  std::uint64_t run_seed_;
};

}  // namespace

OctResult solve_k4free(const Graph& g, const SolverConfig& cfg) {
  require_k4_free(g);
  OctResult best;
  bool have = false;
  const std::size_t repeats = cfg.effective_repeats();
  for (std::size_t rep = 0; rep < repeats; ++rep) {
    const std::uint64_t run_seed = cfg.variant == Variant::derandomized ? cfg.seed : mix_seed(cfg.seed, rep + 1);
    LevelResult level = Bipartizer(cfg, run_seed).run(g, 0);
    best.repeat_sizes.push_back(level.solution.size());
    if (!have || level.solution.size() < best.solution.size()) {
      best.solution = std::move(level.solution);
      best.chosen = level.chosen;
      best.trace = std::move(level.trace);
      have = true;
    }
  }
  if (cfg.collect_diagnostics) best.diagnostics = compute_diagnostics(g, best.trace, cfg.diagnostics_budget);
  return best;
}

FullResult solve(const Graph& g, const SolverConfig& cfg) {
  FullResult out;
  out.k4_packing = maximal_k4_packing(g);
  const VertexSet removed = out.k4_packing.covered();
  out.k4_free = delete_vertices(g, removed);
  out.inner = solve_k4free(out.k4_free.graph, cfg);
  out.solution = set_union(removed, out.k4_free.lift(out.inner.solution));
  out.chosen = out.inner.chosen;
  if (out.inner.diagnostics) out.inner.diagnostics->k4_removed = out.k4_packing.size();
  return out;
}

SolveDiagnostics compute_diagnostics(const Graph& g, const SolveTrace& trace, std::uint64_t oracle_budget) {
  SolveDiagnostics d;
  const ExactSolution exact = exact_oct(g, oracle_budget);
  if (exact.optimal) d.opt = exact.vertices.size();
  d.tri_outside = maximum_packing_size(trace.outside, oracle_budget);
  if (d.opt && *d.opt > 0) {
    const auto opt = static_cast<double>(*d.opt);
    d.a = static_cast<double>(trace.packing.size()) / opt;
    if (d.tri_outside) d.b_hat = static_cast<double>(*d.tri_outside) / opt;
  }
  d.d_avg = packing_average_degree(g, trace.packing);
  d.packing_size = trace.packing.size();
  d.s1 = trace.s1.size();
  if (!trace.s2_attempts.empty()) {
    const S2Attempt& best = trace.s2_attempts[trace.best_attempt];
    d.s2 = best.solution.size();
    d.dead_count = best.dead.size();
    d.r_size = best.r.size();
    d.t_prime_size = best.t_prime.size();
  }
  if (trace.s3) d.s3 = trace.s3->size();
  if (trace.t_double_prime) d.t_double_prime_size = trace.t_double_prime->size();
  d.depth = trace.depth;
  d.base_exact = trace.base_always_exact;
  return d;
}

}  // namespace diskoct
