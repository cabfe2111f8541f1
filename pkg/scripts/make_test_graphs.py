#!/usr/bin/env python3
"""Regenerate the planar_code files under tests/data/.

Each graph is constructed from explicit coordinates (nested rings for the
barrel-shaped ones, 3D positions for the truncated icosahedron), rotation
systems are read off by sorting neighbors counterclockwise, and everything
is validated before being written.  Output bytes are deterministic, so the
files can be checked into the repository and regenerated at will.

Usage: python scripts/make_test_graphs.py [out_dir]   (default tests/data)
"""

from __future__ import annotations

import math
import sys
from pathlib import Path

from starpack.codec import encode_planar_code
from starpack.fixtures import fixture_dodecahedron
from starpack.graphs import build_graph, face_census, verify_fullerene


def polar(r: float, deg: float) -> tuple[float, float]:
    a = math.radians(deg)
    return (r * math.cos(a), r * math.sin(a))


def rotations_from_2d(n, coords, edge_list):
    """Counterclockwise rotations from a straight-line drawing."""
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edge_list:
        adj[u].append(v)
        adj[v].append(u)
    rots = []
    for v in range(1, n + 1):
        x0, y0 = coords[v]
        rots.append(
            tuple(
                sorted(
                    adj[v],
                    key=lambda w: math.atan2(coords[w][1] - y0, coords[w][0] - x0),
                )
            )
        )
    return rots


# ---------------------------------------------------------------------------
# Barrel-shaped fullerenes: nested-ring drawings
# ---------------------------------------------------------------------------


def c24():
    """The unique 24-vertex fullerene: two hexagon caps around a 12-ring."""
    coords = {}
    edges = []
    for i in range(6):  # top hexagon 1..6
        coords[1 + i] = polar(4.0, 90 + 60 * i)
    for j in range(12):  # middle ring 7..18
        coords[7 + j] = polar(2.4, 90 + 30 * j)
    for i in range(6):  # bottom hexagon 19..24
        coords[19 + i] = polar(1.0, 120 + 60 * i)
    for i in range(6):
        edges.append((1 + i, 1 + (i + 1) % 6))
        edges.append((19 + i, 19 + (i + 1) % 6))
        edges.append((1 + i, 7 + 2 * i))
        edges.append((8 + 2 * i, 19 + i))
    for j in range(12):
        edges.append((7 + j, 7 + (j + 1) % 12))
    return 24, coords, edges


def pentagon_cap(base_v: int, r_pent: float, r_ring: float, angle0: float):
    """Half-dodecahedron cap: central pentagon plus a ring of 10.  Returns
    coords, edges and the five open ring vertices in angular order."""
    coords = {}
    edges = []
    for i in range(5):
        coords[base_v + i] = polar(r_pent, angle0 + 72 * i)
    for j in range(10):
        coords[base_v + 5 + j] = polar(r_ring, angle0 + 36 * j)
    for i in range(5):
        edges.append((base_v + i, base_v + (i + 1) % 5))
        edges.append((base_v + i, base_v + 5 + 2 * i))
    for j in range(10):
        edges.append((base_v + 5 + j, base_v + 5 + (j + 1) % 10))
    free = [base_v + 6 + 2 * i for i in range(5)]
    return coords, edges, free


def c30():
    """30-vertex fullerene: two pentagon caps joined rim to rim."""
    coords, edges = {}, []
    ca, ea, fa = pentagon_cap(1, 1.0, 2.0, 90)
    cb, eb, fb = pentagon_cap(16, 5.5, 3.5, 90)
    coords.update(ca)
    coords.update(cb)
    edges += ea + eb
    for u, v in zip(fa, fb):
        edges.append((u, v))
    return 30, coords, edges


def c40():
    """40-vertex fullerene: two pentagon caps around a 10-ring belt."""
    coords, edges = {}, []
    ca, ea, fa = pentagon_cap(1, 1.0, 2.0, 90)
    cb, eb, fb = pentagon_cap(26, 7.0, 5.0, 90 + 36)
    coords.update(ca)
    coords.update(cb)
    edges += ea + eb
    for j in range(10):
        coords[16 + j] = polar(3.4, 126 + 36 * j)
        edges.append((16 + j, 16 + (j + 1) % 10))
    for i in range(5):
        edges.append((16 + 2 * i, fa[i]))
        edges.append((17 + 2 * i, fb[i]))
    return 40, coords, edges


# ---------------------------------------------------------------------------
# C60: truncation of the icosahedron
# ---------------------------------------------------------------------------


def icosahedron_rotations():
    """Icosahedron rotation system (counterclockwise seen from outside)."""
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            pts.append((0.0, s1 * 1.0, s2 * phi))
            pts.append((s1 * 1.0, s2 * phi, 0.0))
            pts.append((s1 * phi, 0.0, s2 * 1.0))

    def dist2(p, q):
        return sum((a - b) ** 2 for a, b in zip(p, q))

    adj = {i: [j for j in range(12) if j != i and abs(dist2(pts[i], pts[j]) - 4.0) < 1e-9]
           for i in range(12)}

    def norm(v):
        length = math.sqrt(sum(c * c for c in v))
        return tuple(c / length for c in v)

    def cross(a, b):
        return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0])

    def dot(a, b):
        return sum(x * y for x, y in zip(a, b))

    rots = {}
    for i in range(12):
        nrm = norm(pts[i])
        ref = (1.0, 0.0, 0.0) if abs(nrm[0]) < 0.9 else (0.0, 1.0, 0.0)
        t1 = norm(cross(nrm, ref))
        t2 = cross(nrm, t1)

        def angle(j, i=i, t1=t1, t2=t2):
            d = tuple(pts[j][k] - pts[i][k] for k in range(3))
            return math.atan2(dot(d, t2), dot(d, t1))

        rots[i] = sorted(adj[i], key=angle)
    return rots


def c60():
    """Truncated icosahedron: one vertex per (icosahedron vertex, edge) flag;
    each original vertex becomes a pentagon, each original edge survives
    shortened between its two flags."""
    rots = icosahedron_rotations()
    flags = {}
    for v in range(12):
        for w in rots[v]:
            flags[(v, w)] = len(flags) + 1
    rotations = []
    for v in range(12):
        ring = rots[v]
        for idx, w in enumerate(ring):
            prev_w = ring[(idx - 1) % 5]
            next_w = ring[(idx + 1) % 5]
            rotations.append(
                (flags[(w, v)], flags[(v, next_w)], flags[(v, prev_w)])
            )
    return 60, rotations


# ---------------------------------------------------------------------------
# Extra non-fullerene graphs used by the tests
# ---------------------------------------------------------------------------


def tetrahedron():
    coords = {1: (0, 0), 2: (0, 2), 3: (-2, -2), 4: (2, -2)}
    edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    return 4, coords, edges


def cube():
    coords = {}
    for i in range(4):
        coords[1 + i] = polar(3.0, 45 + 90 * i)
        coords[5 + i] = polar(1.0, 45 + 90 * i)
    edges = []
    for i in range(4):
        edges.append((1 + i, 1 + (i + 1) % 4))
        edges.append((5 + i, 5 + (i + 1) % 4))
        edges.append((1 + i, 5 + i))
    return 8, coords, edges


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "tests" / "data"
    )
    out_dir.mkdir(parents=True, exist_ok=True)

    graphs = {}
    for name, built in [("c24", c24()), ("c30", c30()), ("c40", c40()),
                        ("tetrahedron", tetrahedron()), ("cube", cube())]:
        n, coords, edges = built
        graphs[name] = build_graph(n, rotations_from_2d(n, coords, edges))
    graphs["c20"] = fixture_dodecahedron()
    n60, rot60 = c60()
    graphs["c60"] = build_graph(n60, rot60)

    for name in sorted(graphs):
        g = graphs[name]
        census = face_census(g)
        report = verify_fullerene(g)
        expect_fullerene = name.startswith("c") and name not in ("cube",)
        if expect_fullerene and not report.passed:
            raise SystemExit(f"{name}: fullerene check failed: {report.summary()}")
        if not census.euler_ok:
            raise SystemExit(f"{name}: embedding is not planar")
        path = out_dir / f"{name}.plc"
        path.write_bytes(encode_planar_code(g))
        print(f"{path}  n={g.vertex_count}  census={dict(sorted(census.counts.items()))}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
