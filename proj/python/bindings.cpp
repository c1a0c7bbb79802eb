#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diskoct/base_solvers.hpp"
#include "diskoct/bounds.hpp"
#include "diskoct/cliques.hpp"
#include "diskoct/geometry.hpp"
#include "diskoct/graph.hpp"
#include "diskoct/solver.hpp"

namespace py = pybind11;
using namespace diskoct;

namespace {

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

DiskInstance make_instance(const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& disks) {
  std::vector<Disk> out;
  out.reserve(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const auto& [cx, cy, r] = disks[i];
    out.push_back({static_cast<std::int64_t>(i), cx, cy, r});
  }
  return DiskInstance(std::move(out));
}

std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> disk_tuples(const DiskInstance& inst) {
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
  for (const Disk& d : inst.disks()) out.emplace_back(d.cx, d.cy, d.r);
  return out;
}

py::object opt_or_none(const auto& value) {
  if (value) return py::cast(*value);
  return py::none();
}

py::dict diagnostics_dict(const SolveDiagnostics& d) {
  py::dict out;
  out["opt"] = opt_or_none(d.opt);
  out["a"] = opt_or_none(d.a);
  out["b_hat"] = opt_or_none(d.b_hat);
  out["d_avg"] = d.d_avg;
  out["dead_count"] = d.dead_count;
  out["s1"] = d.s1;
  out["s2"] = opt_or_none(d.s2);
  out["s3"] = opt_or_none(d.s3);
  out["depth"] = d.depth;
  out["k4_removed"] = d.k4_removed;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Odd cycle transversal approximation on disk graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (!g.contains(v)) throw py::index_error("vertex out of range");
        const auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def(
      "is_bipartite",
      [](const Graph& g) -> py::tuple {
        const auto cert = is_bipartite(g);
        if (const auto* c = std::get_if<TwoColoring>(&cert)) return py::make_tuple(true, c->color);
        return py::make_tuple(false, std::get<OddCycle>(cert).vertices);
      },
      py::arg("g"), "(True, colouring) or (False, odd cycle).");

  m.def("degeneracy", [](const Graph& g) {
    const Degeneracy d = degeneracy(g);
    return py::make_tuple(d.value, d.ordering);
  });

  m.def(
      "build_disk_graph", [](const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& disks) {
        return build_disk_graph(make_instance(disks));
      },
      py::arg("disks"), "Intersection graph of closed disks given as (cx, cy, r) tuples.");

  m.def(
      "generate_disks",
      [](std::size_t n, std::int64_t r_min, std::int64_t r_max, std::int64_t side, std::uint64_t seed) {
        return disk_tuples(generate_random_instance({n, r_min, r_max, side, seed}));
      },
      py::arg("n"), py::arg("r_min") = 1, py::arg("r_max") = 5, py::arg("side") = 60, py::arg("seed") = 0);

  m.def("enumerate_triangles", &enumerate_triangles);
  m.def("maximal_triangle_packing", [](const Graph& g) { return maximal_triangle_packing(g).members; });

  m.def(
      "exact_oct",
      [](const Graph& g, std::uint64_t budget) {
        const ExactSolution s = exact_oct(g, budget);
        return py::make_tuple(s.vertices, s.optimal);
      },
      py::arg("g"), py::arg("node_budget") = kDefaultNodeBudget, "(vertices, proven optimal).");

  m.def(
      "solve",
      [](const Graph& g, const std::string& variant, std::uint64_t seed, std::size_t repeats, const std::string& base,
         bool diagnostics) {
        const auto v = parse_variant(variant);
        const auto b = parse_base_kind(base);
        if (!v) throw py::value_error("unknown variant '" + variant + "'");
        if (!b) throw py::value_error("unknown base '" + base + "'");
        SolverConfig cfg;
        cfg.variant = *v;
        cfg.seed = seed;
        cfg.repeats = repeats;
        cfg.base.kind = *b;
        cfg.collect_diagnostics = diagnostics;
        const FullResult r = solve(g, cfg);
        py::dict out;
        out["solution"] = r.solution;
        out["size"] = r.solution.size();
        out["chosen"] = std::string(to_string(r.chosen));
        out["diagnostics"] = r.inner.diagnostics ? py::object(diagnostics_dict(*r.inner.diagnostics)) : py::none();
        return out;
      },
      py::arg("g"), py::arg("variant") = "derandomized", py::arg("seed") = 0, py::arg("repeats") = 5,
      py::arg("base") = "exact", py::arg("diagnostics") = false);

  m.def("verify_solution", [](const Graph& g, const std::vector<Vertex>& s) {
    for (Vertex v : s) {
      if (!g.contains(v)) throw py::value_error("vertex " + std::to_string(v) + " out of range");
    }
    return verify_solution(g, s);
  });

  auto b = m.def_submodule("bounds", "Closed-form ratio bound, evaluated in 50-digit arithmetic");
  b.def("kappa_from_degree", [](double d) { return bounds::kappa_from_degree(bounds::Real(d)).convert_to<double>(); });
  b.def("kappa_derandomized", [] { return bounds::kappa_derandomized().convert_to<double>(); });
  b.def("dead_probability_lower_bound",
        [](int deg) { return bounds::dead_probability_lower_bound(deg).convert_to<double>(); });
  b.def(
      "ratio_bound",
      [](double kappa, double rho0) {
        return bounds::ratio_bound(bounds::Real(kappa), bounds::Real(rho0)).rho.convert_to<double>();
      },
      py::arg("kappa"), py::arg("rho0"));
  b.def(
      "ratio_bound_for_degree",
      [](double d, double rho0) {
        return bounds::ratio_bound(bounds::kappa_from_degree(bounds::Real(d)), bounds::Real(rho0)).rho.convert_to<double>();
      },
      py::arg("d"), py::arg("rho0") = 2.25);
  py::register_exception<bounds::BoundsError>(b, "BoundsError", PyExc_ValueError);
}
