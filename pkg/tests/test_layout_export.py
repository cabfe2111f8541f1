"""Barycentric layout and DOT/SVG export."""

from __future__ import annotations

import math

import pytest

from starpack import (
    Annotations,
    MissingLayoutError,
    SingularSystemError,
    build_graph,
    export_dot,
    export_svg,
    layout_tutte,
)
from starpack.layout import Layout

from .conftest import TWOCUT_ROTATIONS


def _outer(g):
    return g.faces[0]


def test_layout_residual_bound(c20):
    layout = layout_tutte(c20, _outer(c20))
    outer = set(_outer(c20).boundary)
    for v in c20.vertices:
        if v in outer:
            continue
        x, y = layout[v]
        ax = sum(layout[w][0] for w in c20.neighbors(v)) / 3
        ay = sum(layout[w][1] for w in c20.neighbors(v)) / 3
        assert math.hypot(x - ax, y - ay) <= 1e-9


def test_layout_interior_strictly_inside(c20):
    layout = layout_tutte(c20, _outer(c20))
    boundary = _outer(c20).boundary
    # pinning places boundary[i] at angle 2*pi*i/s, so this order is
    # counterclockwise; strict left-of-edge tests mean strictly inside
    corners = [layout[v] for v in boundary]
    for v in c20.vertices:
        if v in set(boundary):
            continue
        px, py = layout[v]
        for (ax, ay), (bx, by) in zip(corners, corners[1:] + corners[:1]):
            assert (bx - ax) * (py - ay) - (by - ay) * (px - ax) > 0


def _segments_cross(p1, p2, p3, p4):
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1, d2 = orient(p3, p4, p1), orient(p3, p4, p2)
    d3, d4 = orient(p1, p2, p3), orient(p1, p2, p4)
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0))


def test_layout_chamfered_graph_has_no_crossings(c80):
    layout = layout_tutte(c80, _outer(c80))
    edges = c80.edges
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if len({a, b, c, d}) < 4:
                continue  # shared endpoint
            assert not _segments_cross(layout[a], layout[b], layout[c], layout[d])


def test_layout_requires_three_connectivity():
    g = build_graph(8, TWOCUT_ROTATIONS)
    with pytest.raises(SingularSystemError):
        layout_tutte(g, g.faces[0])


def test_layout_rejects_foreign_outer_face(c20, c80):
    with pytest.raises(ValueError):
        layout_tutte(c20, c80.faces[0])


def test_layout_deterministic(c20):
    a = layout_tutte(c20, _outer(c20))
    b = layout_tutte(c20, _outer(c20))
    assert a.positions == b.positions


def test_layout_iteration_cap(c20):
    from starpack import DidNotConvergeError

    with pytest.raises(DidNotConvergeError):
        layout_tutte(c20, _outer(c20), max_iterations=2)


def test_dot_edge_count(c20):
    text = export_dot(c20)
    assert text.count(" -- ") == 30
    assert export_dot(c20) == text  # byte-identical reruns


def test_dot_annotations(c20):
    ann = Annotations.build(
        vertex_classes={"center": [1, 2]}, edge_classes={"chord": [(2, 1)]}
    )
    text = export_dot(c20, ann)
    assert '1 [class="center"]' in text
    assert '1 -- 2 [class="chord"]' in text


def test_svg_classes_for_packing(c80, c80_packing):
    layout = layout_tutte(c80, _outer(c80))
    ann = Annotations.build(
        vertex_classes={"center": c80_packing.centers},
        edge_classes={"star-edge": c80_packing.star_edges},
    )
    text = export_svg(c80, layout, ann)
    assert text.count('circle class="center"') == 20
    assert text.count('line class="star-edge"') == 60
    assert text.count("<line") == 120
    assert text.count("<circle") == 80
    assert export_svg(c80, layout, ann) == text


def test_svg_missing_layout(c20):
    partial = Layout(positions={1: (0.0, 0.0)})
    with pytest.raises(MissingLayoutError):
        export_svg(c20, partial)
