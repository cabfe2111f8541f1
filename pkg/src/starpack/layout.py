"""Planar straight-line drawings by barycentric pinning.

The outer face is pinned to a regular convex polygon and every interior
vertex is placed at the average of its neighbors' positions.  For a
3-connected planar graph this produces a crossing-free straight-line
drawing; the linear system is solved by fixed-point iteration (all interior
vertices start at the outer polygon's centroid), which keeps the drawing
reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import StarpackError
from .graphs import EmbeddedCubicGraph, Face, GenusNonZeroError, vertex_connectivity_at_least


class SingularSystemError(StarpackError):
    """The input is not 3-connected; barycentric placement would degenerate."""


class DidNotConvergeError(StarpackError):
    """The iteration cap was reached before the tolerance."""


@dataclass(frozen=True)
class Layout:
    """Vertex -> planar coordinate pair (dimensionless)."""

    positions: dict[int, tuple[float, float]]

    def __getitem__(self, v: int) -> tuple[float, float]:
        return self.positions[v]

    def __contains__(self, v: int) -> bool:
        return v in self.positions


def layout_tutte(
    g: EmbeddedCubicGraph,
    outer_face: Face,
    *,
    tolerance: float = 1e-9,
    max_iterations: int = 500_000,
) -> Layout:
    """Barycentric layout with `outer_face` pinned to a regular polygon.

    Stops once the largest per-sweep displacement drops to `tolerance`,
    which bounds each interior vertex's distance from its neighbor average
    by the same tolerance.  Raises GenusNonZeroError on a non-planar
    embedding, ValueError when outer_face is not a face of g,
    SingularSystemError on non-3-connected input, DidNotConvergeError when
    the iteration cap is hit.
    """
    if not g.census.euler_ok:
        raise GenusNonZeroError("layout requires a genus-zero embedding")
    if outer_face not in g.faces:
        raise ValueError("outer_face is not a face of the graph")
    if not vertex_connectivity_at_least(g, 3):
        raise SingularSystemError("layout requires a 3-connected graph")

    n = g.vertex_count
    boundary = outer_face.boundary
    pos = np.zeros((n + 1, 2))
    size = len(boundary)
    for i, v in enumerate(boundary):
        angle = 2.0 * math.pi * i / size
        pos[v] = (math.cos(angle), math.sin(angle))
    # interior vertices start at the polygon centroid, which is the origin

    interior = np.array([v for v in g.vertices if v not in set(boundary)])
    if interior.size:
        nbrs = np.array([g.rotations[v - 1] for v in interior])
        for iteration in range(max_iterations):
            avg = pos[nbrs].mean(axis=1)
            delta = np.abs(avg - pos[interior]).max()
            pos[interior] = avg
            if delta <= tolerance:
                break
        else:
            raise DidNotConvergeError(
                f"no convergence to {tolerance} within {max_iterations} sweeps"
            )

    return Layout(positions={v: (float(pos[v][0]), float(pos[v][1])) for v in g.vertices})
