"""Odd cycle transversal approximation on disk graphs."""

from ._core import (
    Graph,
    GraphError,
    PreconditionError,
    bounds,
    build_disk_graph,
    degeneracy,
    enumerate_triangles,
    exact_oct,
    generate_disks,
    is_bipartite,
    maximal_triangle_packing,
    solve,
    verify_solution,
)

__all__ = [
    "Graph",
    "GraphError",
    "PreconditionError",
    "bounds",
    "build_disk_graph",
    "degeneracy",
    "enumerate_triangles",
    "exact_oct",
    "generate_disks",
    "is_bipartite",
    "maximal_triangle_packing",
    "solve",
    "verify_solution",
]
