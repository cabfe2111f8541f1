"""Built-in graph fixtures.

Only the 20-vertex dodecahedral graph is hard-coded; every larger fixture
used by the test suite and the CLI pipeline is constructed from it through
the transformations, so the construction code paths are exercised instead
of trusting baked-in data.
"""

from __future__ import annotations

from .graphs import EmbeddedCubicGraph, build_graph

# Rotation table of the dodecahedron, counterclockwise per vertex, derived
# from the standard nested drawing: outer pentagon 1-5, decagon 6-15 (vertex
# 6 below vertex 1), inner pentagon 16-20 (vertex 16 below vertex 7).
# Spokes: i <-> 4+2i on the decagon, decagon odd ring positions <-> inner.
_DODECAHEDRON_ROTATIONS: tuple[tuple[int, int, int], ...] = (
    (2, 6, 5),
    (3, 8, 1),
    (4, 10, 2),
    (5, 12, 3),
    (14, 4, 1),
    (7, 15, 1),
    (8, 16, 6),
    (9, 7, 2),
    (10, 17, 8),
    (3, 11, 9),
    (12, 18, 10),
    (11, 4, 13),
    (12, 14, 19),
    (13, 5, 15),
    (20, 14, 6),
    (17, 20, 7),
    (9, 18, 16),
    (11, 19, 17),
    (18, 13, 20),
    (19, 15, 16),
)


def fixture_dodecahedron() -> EmbeddedCubicGraph:
    """The 20-vertex fullerene (dodecahedral graph), smallest of them all."""
    return build_graph(20, _DODECAHEDRON_ROTATIONS)
