"""Deterministic DOT and SVG exports with annotation classes.

Annotations mark vertex subsets and edge subsets with named classes;
exports style them (predefined classes: center, star-edge, chord, pentagon,
hexagon) and are pure functions of (graph, layout, annotations), so two
identical calls produce byte-identical text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import StarpackError
from .graphs import EmbeddedCubicGraph
from .layout import Layout


class MissingLayoutError(StarpackError):
    """SVG export needs a coordinate for every vertex."""


def _norm_edge(e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Annotations:
    """Named vertex and edge subsets to be styled in exports."""

    vertex_classes: dict[str, frozenset[int]] = field(default_factory=dict)
    edge_classes: dict[str, frozenset[tuple[int, int]]] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        vertex_classes: Mapping[str, Iterable[int]] | None = None,
        edge_classes: Mapping[str, Iterable[tuple[int, int]]] | None = None,
    ) -> Annotations:
        return cls(
            vertex_classes={
                name: frozenset(vs) for name, vs in (vertex_classes or {}).items()
            },
            edge_classes={
                name: frozenset(_norm_edge(e) for e in es)
                for name, es in (edge_classes or {}).items()
            },
        )

    def classes_of_vertex(self, v: int) -> str:
        names = sorted(name for name, vs in self.vertex_classes.items() if v in vs)
        return " ".join(names)

    def classes_of_edge(self, e: tuple[int, int]) -> str:
        e = _norm_edge(e)
        names = sorted(name for name, es in self.edge_classes.items() if e in es)
        return " ".join(names)


_EMPTY = Annotations()


def export_dot(g: EmbeddedCubicGraph, annotations: Annotations | None = None) -> str:
    """Undirected DOT text: one node per vertex, one edge per undirected
    edge, annotation classes as `class` attributes."""
    ann = annotations or _EMPTY
    lines = ["graph cubic {", "  node [shape=circle];"]
    for v in g.vertices:
        classes = ann.classes_of_vertex(v)
        suffix = f' [class="{classes}"]' if classes else ""
        lines.append(f"  {v}{suffix};")
    for u, v in g.edges:
        classes = ann.classes_of_edge((u, v))
        suffix = f' [class="{classes}"]' if classes else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_SVG_STYLE = """\
line { stroke: #555555; stroke-width: 1; }
circle { fill: #222222; }
.center { fill: #d62728; }
.star-edge { stroke: #d62728; stroke-width: 2.5; }
.chord { stroke: #1f77b4; stroke-width: 2; stroke-dasharray: 6 3; }
.pentagon { fill: #ff9900; }
.hexagon { fill: #7f7f7f; }"""

_SCALE = 100.0
_VERTEX_RADIUS = 2.5


def export_svg(
    g: EmbeddedCubicGraph, layout: Layout, annotations: Annotations | None = None
) -> str:
    """SVG text: one line element per edge, one circle per vertex."""
    ann = annotations or _EMPTY
    missing = [v for v in g.vertices if v not in layout]
    if missing:
        raise MissingLayoutError(f"no coordinates for vertices {missing[:5]}")

    def sx(v: int) -> str:
        return f"{layout[v][0] * _SCALE:.3f}"

    def sy(v: int) -> str:
        return f"{-layout[v][1] * _SCALE:.3f}"  # SVG y axis points down

    xs = [layout[v][0] * _SCALE for v in g.vertices]
    ys = [-layout[v][1] * _SCALE for v in g.vertices]
    pad = 4 * _VERTEX_RADIUS
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.3f} {y0:.3f} {w:.3f} {h:.3f}">',
        "<style>",
        _SVG_STYLE,
        "</style>",
    ]
    for u, v in g.edges:
        classes = ann.classes_of_edge((u, v))
        cls = f' class="{classes}"' if classes else ""
        lines.append(
            f'<line{cls} x1="{sx(u)}" y1="{sy(u)}" x2="{sx(v)}" y2="{sy(v)}"/>'
        )
    for v in g.vertices:
        classes = ann.classes_of_vertex(v)
        cls = f' class="{classes}"' if classes else ""
        lines.append(f'<circle{cls} cx="{sx(v)}" cy="{sy(v)}" r="{_VERTEX_RADIUS}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
