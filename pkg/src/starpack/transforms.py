"""Graph rewrites: chamfer, star transformation, semi-star transformation.

Conventions shared by all three rewrites:

* Rotations are counterclockwise and faces are the traced orbits of the
  host graph, so every local rule below is phrased against corners: at a
  vertex with rotation (a, b, c), the corner swept counterclockwise from a
  to b belongs to the face containing the directed edge a -> u.
* Outputs are densely renumbered 1..n' (kept vertices first in ascending
  input order, then per-star/per-edge additions ordered by center id) and
  the mapping is kept in a provenance record, which is serializable so the
  constructive extractors can run in a later process.
* Every rewrite re-checks its claimed output properties (vertex/edge/face
  counts, fullerene axioms, surviving faces); a violation raises
  PostconditionFailedError rather than returning a broken graph.

The star transformation deletes every star center and glues a hexagon of
six new vertices into the hole: odd positions attach to the three leaves,
even positions carry one cross edge each into the face at the matching
corner of the deleted star, and the two cross stubs that end up inside one
2-center hexagon are joined.  The semi-star transformation keeps all
vertices, subdivides every star edge once, and closes the degree-2
subdivision vertices with one chord per 2-center hexagon; which of the two
antipodal chords each hexagon takes is a parity constraint system solved
globally (every subdivision vertex must land in exactly one chord).
"""

from __future__ import annotations

from dataclasses import dataclass
from .errors import StarpackError
from .graphs import EmbeddedCubicGraph, build_graph, canonical_cycle
from .packing import (
    InvalidInputError,
    Spider,
    SpiderPacking,
    StarPacking,
    classify_packing,
)
from .cycles import CycleFactor
from . import verifiers


class TransformError(StarpackError):
    """A transformation precondition or postcondition failed."""


class NotP0Error(TransformError):
    """Some star center lies on a pentagon."""


class NotBalancedError(TransformError):
    """Some hexagon holds exactly one center, or two non-antipodal ones."""


class OddStarCountError(TransformError):
    """The semi-star rewrite needs an even number of stars."""


class ChordInfeasibleError(TransformError):
    """The chord parity constraints admit no consistent assignment."""

    def __init__(self, message: str, cycle: tuple[int, ...] = ()):
        super().__init__(message)
        self.cycle = cycle


class PostconditionFailedError(TransformError):
    """The constructed graph violates a property the rewrite guarantees."""


class NotDirectError(TransformError):
    """The constructive face cover overlaps or misses vertices."""


class ProvenanceMismatchError(TransformError):
    """The provenance record does not describe the given graph."""


# ---------------------------------------------------------------------------
# Chamfer
# ---------------------------------------------------------------------------


def chamfer(g: EmbeddedCubicGraph) -> EmbeddedCubicGraph:
    """Quadrupling rewrite: every face shrinks to a copy on fresh vertices,
    every original vertex connects to its three face copies, and every
    original edge becomes a hexagon.  Takes an n-vertex fullerene to a
    4n-vertex fullerene with the same pentagons."""
    if not g.fullerene_report.passed:
        raise InvalidInputError(
            f"chamfer input is not a fullerene graph: {g.fullerene_report.summary()}"
        )
    n = g.vertex_count
    faces = g.faces
    face_of = g.face_index_of

    copy_id: dict[tuple[int, int], int] = {}
    next_id = n
    for fi, face in enumerate(faces):
        for u in face.boundary:
            next_id += 1
            copy_id[(fi, u)] = next_id

    rotations: list[tuple[int, int, int]] = [None] * next_id  # type: ignore[list-item]
    for u in g.vertices:
        a, b, c = g.rotations[u - 1]
        rotations[u - 1] = (
            copy_id[(face_of(a, u), u)],
            copy_id[(face_of(b, u), u)],
            copy_id[(face_of(c, u), u)],
        )
    for fi, face in enumerate(faces):
        bnd = face.boundary
        size = len(bnd)
        for i, u in enumerate(bnd):
            rotations[copy_id[(fi, u)] - 1] = (
                u,
                copy_id[(fi, bnd[(i - 1) % size])],
                copy_id[(fi, bnd[(i + 1) % size])],
            )

    out = build_graph(next_id, rotations)
    if out.vertex_count != 4 * n:
        raise PostconditionFailedError(
            f"chamfer produced {out.vertex_count} vertices, expected {4 * n}"
        )
    expected = dict(g.census.counts)
    expected[6] = expected.get(6, 0) + g.edge_count
    if out.census.counts != expected:
        raise PostconditionFailedError(
            f"chamfer face census {out.census.counts}, expected {expected}"
        )
    if not out.fullerene_report.passed:
        raise PostconditionFailedError(
            f"chamfer output fails fullerene axioms: {out.fullerene_report.summary()}"
        )
    return out


# ---------------------------------------------------------------------------
# Star transformation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StarRecord:
    """How one input star was rewritten.

    new_vertices are the six replacement vertices in hexagon order; odd
    positions (1st, 3rd, 5th) attach to leaves[0..2], even positions carry
    the cross edges into corner_faces[0..2] (input face indices for the
    corners leaves0-1, 1-2, 2-0).
    """

    center: int
    leaves: tuple[int, int, int]
    new_vertices: tuple[int, int, int, int, int, int]
    corner_faces: tuple[int, int, int]


@dataclass(frozen=True)
class StarTransformProvenance:
    input_vertex_count: int
    output_vertex_count: int
    centers: tuple[int, ...]
    kept: dict[int, int]  # input id -> output id for every non-center
    stars: tuple[StarRecord, ...]
    cross_edges: tuple[tuple[int, int], ...]  # output ids
    surviving_pentagons: tuple[tuple[int, ...], ...]  # output-id cycles
    surviving_zero_center_hexagons: tuple[tuple[int, ...], ...]


def _require_balanced_p0(
    g: EmbeddedCubicGraph, packing: StarPacking, what: str
) -> None:
    cls = classify_packing(g, packing)
    if not cls.is_p0:
        offenders = [c for c, p in cls.center_face_profile.items() if p != (6, 6, 6)]
        raise NotP0Error(f"{what}: centers on pentagons: {offenders}")
    if not cls.is_balanced:
        raise NotBalancedError(
            f"{what}: hexagon center histogram {cls.hexagon_center_histogram} "
            "(every hexagon must hold 0 or 2 antipodal centers)"
        )


def _face_center_positions(
    g: EmbeddedCubicGraph, centers: set[int]
) -> dict[int, list[int]]:
    """face index -> boundary positions of centers, for faces that have any."""
    out: dict[int, list[int]] = {}
    for fi, face in enumerate(g.faces):
        positions = [i for i, v in enumerate(face.boundary) if v in centers]
        if positions:
            out[fi] = positions
    return out


def star_transform(
    g: EmbeddedCubicGraph, packing: StarPacking
) -> tuple[EmbeddedCubicGraph, StarTransformProvenance]:
    """Rewrite an n-vertex fullerene with a balanced P0 packing into a
    9n/4-vertex fullerene; see the module docstring for the local rule."""
    _require_balanced_p0(g, packing, "star transform")
    n = g.vertex_count
    faces = g.faces
    face_of = g.face_index_of
    centers = set(packing.centers)

    kept: dict[int, int] = {}
    for v in g.vertices:
        if v not in centers:
            kept[v] = len(kept) + 1
    base = len(kept)

    center_of: dict[int, int] = {}
    for star in packing.stars:
        for leaf in star.leaves:
            center_of[leaf] = star.center

    leaf_attach: dict[int, int] = {}
    corners_by_face: dict[int, list[int]] = {}
    records: list[StarRecord] = []
    next_id = base
    for c in sorted(centers):
        u1, u2, u3 = g.neighbors(c)
        v = tuple(range(next_id + 1, next_id + 7))
        next_id += 6
        f12 = face_of(u1, c)
        f23 = face_of(u2, c)
        f31 = face_of(u3, c)
        leaf_attach[u1] = v[0]
        leaf_attach[u2] = v[2]
        leaf_attach[u3] = v[4]
        corners_by_face.setdefault(f12, []).append(v[1])
        corners_by_face.setdefault(f23, []).append(v[3])
        corners_by_face.setdefault(f31, []).append(v[5])
        records.append(
            StarRecord(
                center=c, leaves=(u1, u2, u3), new_vertices=v,
                corner_faces=(f12, f23, f31),
            )
        )

    cross_partner: dict[int, int] = {}
    cross_edges: list[tuple[int, int]] = []
    for fi in sorted(corners_by_face):
        corners = corners_by_face[fi]
        if len(corners) != 2:
            raise NotBalancedError(
                f"star transform: face {fi} collects {len(corners)} cross stubs, "
                "expected 2"
            )
        a, b = corners
        cross_partner[a] = b
        cross_partner[b] = a
        cross_edges.append((min(a, b), max(a, b)))

    rotations: list[tuple[int, int, int]] = [None] * next_id  # type: ignore[list-item]
    for x, out_x in kept.items():
        rot = []
        for w in g.rotations[x - 1]:
            rot.append(leaf_attach[x] if w == center_of[x] else kept[w])
        rotations[out_x - 1] = tuple(rot)
    for rec in records:
        v = rec.new_vertices
        l1, l2, l3 = rec.leaves
        rotations[v[0] - 1] = (kept[l1], v[1], v[5])
        rotations[v[1] - 1] = (cross_partner[v[1]], v[2], v[0])
        rotations[v[2] - 1] = (kept[l2], v[3], v[1])
        rotations[v[3] - 1] = (cross_partner[v[3]], v[4], v[2])
        rotations[v[4] - 1] = (kept[l3], v[5], v[3])
        rotations[v[5] - 1] = (cross_partner[v[5]], v[0], v[4])

    out = build_graph(next_id, rotations)

    # postconditions: counts, axioms, and the claimed surviving faces
    star_count = len(records)
    if out.vertex_count * 4 != 9 * n:
        raise PostconditionFailedError(
            f"star transform produced {out.vertex_count} vertices, expected {9 * n // 4}"
        )
    if len(cross_edges) * 2 != 3 * star_count:
        raise PostconditionFailedError(
            f"{len(cross_edges)} cross edges, expected {3 * star_count // 2}"
        )
    if not out.fullerene_report.passed:
        raise PostconditionFailedError(
            f"star transform output fails fullerene axioms: "
            f"{out.fullerene_report.summary()}"
        )
    out_faces = {canonical_cycle(f.boundary) for f in out.faces}
    pentagons: list[tuple[int, ...]] = []
    zero_hexagons: list[tuple[int, ...]] = []
    face_positions = _face_center_positions(g, centers)
    for fi, face in enumerate(faces):
        if fi in face_positions:
            continue  # 2-center hexagons split; they do not survive whole
        mapped = tuple(kept[v] for v in face.boundary)
        if canonical_cycle(mapped) not in out_faces:
            raise PostconditionFailedError(
                f"face {face.boundary} of the input did not survive the rewrite"
            )
        (pentagons if face.size == 5 else zero_hexagons).append(mapped)
    if len(pentagons) != 12:
        raise PostconditionFailedError(f"{len(pentagons)} surviving pentagons")
    for rec in records:
        if canonical_cycle(rec.new_vertices) not in out_faces:
            raise PostconditionFailedError(
                f"replacement hexagon of star {rec.center} is not a face"
            )
    two_center = sum(1 for p in face_positions.values() if len(p) == 2)
    expected_faces = 12 + star_count + 2 * two_center + len(zero_hexagons)
    if out.census.face_count != expected_faces:
        raise PostconditionFailedError(
            f"{out.census.face_count} faces, expected {expected_faces}"
        )

    prov = StarTransformProvenance(
        input_vertex_count=n,
        output_vertex_count=out.vertex_count,
        centers=tuple(sorted(centers)),
        kept=kept,
        stars=tuple(records),
        cross_edges=tuple(sorted(cross_edges)),
        surviving_pentagons=tuple(pentagons),
        surviving_zero_center_hexagons=tuple(zero_hexagons),
    )
    return out, prov


# ---------------------------------------------------------------------------
# Chord assignment for the semi-star transformation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChordAssignment:
    """Per-hexagon chord choice over the subdivided star edges.

    choices maps each 2-center hexagon (input face index) to 0 or 1; chords
    lists, per hexagon, the two star edges whose subdivision vertices the
    chosen chord joins (edges as (center, leaf) in input ids).
    """

    choices: dict[int, int]
    chords: tuple[tuple[int, tuple[tuple[int, int], tuple[int, int]]], ...]


class _ParityUnionFind:
    """Union-find storing each node's parity relative to its root."""

    def __init__(self) -> None:
        self.parent: dict[int, int] = {}
        self.rank: dict[int, int] = {}
        self.parity: dict[int, int] = {}

    def find(self, x: int) -> tuple[int, int]:
        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0
            self.parity[x] = 0
            return x, 0
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        p = 0
        for y in reversed(path):
            p ^= self.parity[y]
            self.parity[y] = p
            self.parent[y] = root
        return root, self.parity[path[0]] if path else 0

    def union(self, a: int, b: int, rel: int) -> bool:
        """Require parity(a) xor parity(b) == rel; False on contradiction."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == rel
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
            pa, pb = pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ rel
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def _star_edge(center: int, leaf: int) -> tuple[int, int]:
    return (center, leaf)


def solve_chord_assignment(
    g: EmbeddedCubicGraph, packing: StarPacking
) -> ChordAssignment:
    """Pick one of the two antipodal chords in every 2-center hexagon so
    that each subdivided star edge ends up in exactly one chord.

    Each subdivision vertex lies on two 2-center hexagons, and per hexagon
    exactly one of the two chord choices contains it, so the requirement
    "exactly one chord per subdivision vertex" is a parity relation between
    the two hexagons; the relations are solved by union-find with parity.
    """
    _require_balanced_p0(g, packing, "chord assignment")
    faces = g.faces
    centers = set(packing.centers)
    face_positions = _face_center_positions(g, centers)

    # per 2-center hexagon: the two antipodal choices as star-edge pairs
    choice_pairs: dict[int, tuple[tuple, tuple]] = {}
    for fi, positions in sorted(face_positions.items()):
        bnd = faces[fi].boundary
        c_positions = sorted(positions, key=lambda i: bnd[i])
        i0 = c_positions[0]  # position of the smaller center
        b = tuple(bnd[(i0 + k) % 6] for k in range(6))
        # subdivided 10-gon: choice 0 joins the subdivisions of (b0,b1) and
        # (b3,b4); choice 1 joins those of (b2,b3) and (b5,b0)
        pair0 = (_star_edge(b[0], b[1]), _star_edge(b[3], b[4]))
        pair1 = (_star_edge(b[3], b[2]), _star_edge(b[0], b[5]))
        choice_pairs[fi] = (pair0, pair1)

    membership: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for fi, (pair0, pair1) in choice_pairs.items():
        for e in pair0:
            membership.setdefault(e, []).append((fi, 0))
        for e in pair1:
            membership.setdefault(e, []).append((fi, 1))

    uf = _ParityUnionFind()
    constraint_graph: dict[int, list[tuple[int, int]]] = {}
    for edge in sorted(membership):
        occurrences = membership[edge]
        if len(occurrences) != 2:
            raise ChordInfeasibleError(
                f"star edge {edge} lies on {len(occurrences)} two-center hexagons, "
                "expected 2"
            )
        (h1, v1), (h2, v2) = occurrences
        rel = 1 ^ v1 ^ v2  # exactly one hexagon selects the pair containing edge
        if not uf.union(h1, h2, rel):
            cycle = _constraint_cycle(constraint_graph, h1, h2)
            raise ChordInfeasibleError(
                f"inconsistent chord parity around hexagons {cycle}",
                cycle=cycle,
            )
        constraint_graph.setdefault(h1, []).append((h2, rel))
        constraint_graph.setdefault(h2, []).append((h1, rel))

    choices: dict[int, int] = {}
    for fi in sorted(choice_pairs):
        _, parity = uf.find(fi)
        choices[fi] = parity
    chords = tuple(
        (fi, choice_pairs[fi][choices[fi]]) for fi in sorted(choice_pairs)
    )

    # exactly-one-chord audit (the parity system should guarantee it)
    seen: dict[tuple[int, int], int] = {}
    for _, pair in chords:
        for e in pair:
            seen[e] = seen.get(e, 0) + 1
    bad = {e: k for e, k in seen.items() if k != 1}
    if bad or len(seen) != len(membership):
        raise ChordInfeasibleError(f"chord multiplicity audit failed: {bad}")
    return ChordAssignment(choices=choices, chords=chords)


def _constraint_cycle(
    graph: dict[int, list[tuple[int, int]]], start: int, goal: int
) -> tuple[int, ...]:
    """Path start..goal through already-added constraints (plus the failing
    constraint this closes a cycle with)."""
    from collections import deque

    prev: dict[int, int] = {start: start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            break
        for y, _ in graph.get(x, ()):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    if goal not in prev:
        return (start, goal)
    path = [goal]
    while path[-1] != start:
        path.append(prev[path[-1]])
    return tuple(reversed(path))


# ---------------------------------------------------------------------------
# Semi-star transformation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubdivisionRecord:
    vertex: int  # output id
    center: int  # input id (output id is identical for kept vertices)
    leaf: int    # input id


@dataclass(frozen=True)
class SemiStarProvenance:
    input_vertex_count: int
    output_vertex_count: int
    centers: tuple[int, ...]
    kept: dict[int, int]  # identity map, recorded for format uniformity
    subdivisions: tuple[SubdivisionRecord, ...]
    chords: tuple[tuple[int, int], ...]  # output ids
    hexagon_choices: tuple[tuple[int, int], ...]  # (input face index, choice)


def semi_star_transform(
    g: EmbeddedCubicGraph, packing: StarPacking
) -> tuple[EmbeddedCubicGraph, SemiStarProvenance]:
    """Subdivide every star edge once and close the new degree-2 vertices
    with one chord per 2-center hexagon, yielding a 7n/4-vertex fullerene."""
    _require_balanced_p0(g, packing, "semi-star transform")
    if len(packing.stars) % 2:
        raise OddStarCountError(
            f"semi-star transform needs an even star count, got {len(packing.stars)}"
        )
    assignment = solve_chord_assignment(g, packing)

    n = g.vertex_count
    face_of = g.face_index_of
    sub_of: dict[tuple[int, int], int] = {}
    records: list[SubdivisionRecord] = []
    next_id = n
    for c in sorted(packing.centers):
        for leaf in g.neighbors(c):
            next_id += 1
            sub_of[(c, leaf)] = next_id
            records.append(SubdivisionRecord(vertex=next_id, center=c, leaf=leaf))

    chord_of: dict[int, tuple[int, int]] = {}  # subdivision vertex -> (partner, face)
    chords: list[tuple[int, int]] = []
    for fi, (e1, e2) in assignment.chords:
        s1, s2 = sub_of[e1], sub_of[e2]
        chord_of[s1] = (s2, fi)
        chord_of[s2] = (s1, fi)
        chords.append((min(s1, s2), max(s1, s2)))

    centers = set(packing.centers)
    center_of: dict[int, int] = {}
    for star in packing.stars:
        for leaf in star.leaves:
            center_of[leaf] = star.center

    rotations: list[tuple[int, int, int]] = [None] * next_id  # type: ignore[list-item]
    for v in g.vertices:
        if v in centers:
            rotations[v - 1] = tuple(sub_of[(v, w)] for w in g.rotations[v - 1])
        else:
            c = center_of[v]
            rotations[v - 1] = tuple(
                sub_of[(c, v)] if w == c else w for w in g.rotations[v - 1]
            )
    for (c, leaf), s in sub_of.items():
        partner, fi = chord_of[s]
        if face_of(c, leaf) == fi:
            rotations[s - 1] = (c, partner, leaf)
        else:
            if face_of(leaf, c) != fi:
                raise PostconditionFailedError(
                    f"chord face {fi} is not incident to star edge ({c}, {leaf})"
                )
            rotations[s - 1] = (c, leaf, partner)

    out = build_graph(next_id, rotations)

    if out.vertex_count * 4 != 7 * n:
        raise PostconditionFailedError(
            f"semi-star produced {out.vertex_count} vertices, expected {7 * n // 4}"
        )
    if len(chords) * 2 != 3 * len(packing.stars):
        raise PostconditionFailedError(
            f"{len(chords)} chords, expected {3 * len(packing.stars) // 2}"
        )
    if not out.fullerene_report.passed:
        raise PostconditionFailedError(
            f"semi-star output fails fullerene axioms: {out.fullerene_report.summary()}"
        )
    face_positions = _face_center_positions(g, centers)
    two_center = sum(1 for p in face_positions.values() if len(p) == 2)
    zero_center = g.census.hexagons - two_center
    expected_hex = 2 * two_center + zero_center
    if out.census.hexagons != expected_hex:
        raise PostconditionFailedError(
            f"{out.census.hexagons} hexagons, expected {expected_hex}"
        )
    out_faces = {canonical_cycle(f.boundary) for f in out.faces}
    for face in g.faces:
        if face.size == 5:
            if canonical_cycle(face.boundary) not in out_faces:
                raise PostconditionFailedError(
                    f"pentagon {face.boundary} did not survive the rewrite"
                )

    prov = SemiStarProvenance(
        input_vertex_count=n,
        output_vertex_count=out.vertex_count,
        centers=tuple(sorted(centers)),
        kept={v: v for v in g.vertices},
        subdivisions=tuple(records),
        chords=tuple(sorted(chords)),
        hexagon_choices=tuple(sorted(assignment.choices.items())),
    )
    return out, prov


# ---------------------------------------------------------------------------
# Constructive extractors
# ---------------------------------------------------------------------------


def extract_cycle_factor_from_provenance(
    f: EmbeddedCubicGraph, prov: StarTransformProvenance
) -> CycleFactor:
    """The constructive {C5, C6} cover of a star-transform output: the 12
    surviving pentagons, one replacement hexagon per star, and the
    surviving 0-center hexagons.  Raises NotDirectError when that
    collection overlaps or misses vertices (a legitimate outcome on hosts
    where some leaf lies on no pentagon and no 0-center hexagon)."""
    if prov.output_vertex_count != f.vertex_count:
        raise ProvenanceMismatchError(
            f"provenance describes {prov.output_vertex_count} vertices, "
            f"graph has {f.vertex_count}"
        )
    cycles: list[tuple[int, ...]] = []
    cycles.extend(prov.surviving_pentagons)
    for rec in prov.stars:
        cycles.append(rec.new_vertices)
    cycles.extend(prov.surviving_zero_center_hexagons)
    for cycle in cycles:
        for i, u in enumerate(cycle):
            if not f.adjacent(u, cycle[(i + 1) % len(cycle)]):
                raise ProvenanceMismatchError(
                    f"recorded face {cycle} is not a cycle of the graph"
                )
    covered: set[int] = set()
    total = 0
    for cycle in cycles:
        covered.update(cycle)
        total += len(cycle)
    if total != f.vertex_count or len(covered) != f.vertex_count:
        raise NotDirectError(
            f"face cover spans {len(covered)} of {f.vertex_count} vertices "
            f"({total} with multiplicity)"
        )
    factor = CycleFactor(cycles=tuple(cycles))
    verifiers.verify_cycle_factor(f, factor)
    return factor


def extract_subdivided_star_packing(
    f: EmbeddedCubicGraph, prov: SemiStarProvenance
) -> SpiderPacking:
    """The spider (subdivided star) packing a semi-star output carries by
    construction: per input star, the center, its three subdivision
    vertices and its three leaves."""
    if prov.output_vertex_count != f.vertex_count:
        raise ProvenanceMismatchError(
            f"provenance describes {prov.output_vertex_count} vertices, "
            f"graph has {f.vertex_count}"
        )
    by_center: dict[int, list[SubdivisionRecord]] = {}
    for rec in prov.subdivisions:
        by_center.setdefault(rec.center, []).append(rec)
    spiders: list[Spider] = []
    for c in sorted(by_center):
        recs = by_center[c]
        if len(recs) != 3:
            raise ProvenanceMismatchError(
                f"center {c} has {len(recs)} subdivision records, expected 3"
            )
        for rec in recs:
            if not (f.adjacent(c, rec.vertex) and f.adjacent(rec.vertex, rec.leaf)):
                raise ProvenanceMismatchError(
                    f"recorded leg {c}-{rec.vertex}-{rec.leaf} is not a path"
                )
        spiders.append(
            Spider(center=c, legs=tuple((r.vertex, r.leaf) for r in recs))
        )
    packing = SpiderPacking(spiders=tuple(spiders))
    verifiers.verify_spider_packing(f, packing)
    return packing


# ---------------------------------------------------------------------------
# Provenance serialization (line-oriented text, stable across runs)
# ---------------------------------------------------------------------------

_PROV_HEADER = "starpack-provenance 1"


def provenance_to_text(prov: StarTransformProvenance | SemiStarProvenance) -> str:
    lines = [_PROV_HEADER]
    if isinstance(prov, StarTransformProvenance):
        lines.append("kind star")
    else:
        lines.append("kind semistar")
    lines.append(f"input-vertices {prov.input_vertex_count}")
    lines.append(f"output-vertices {prov.output_vertex_count}")
    lines.append("centers " + " ".join(map(str, prov.centers)))
    for v in sorted(prov.kept):
        lines.append(f"kept {v} {prov.kept[v]}")
    if isinstance(prov, StarTransformProvenance):
        for rec in prov.stars:
            lines.append(
                f"star {rec.center} leaves "
                + " ".join(map(str, rec.leaves))
                + " new "
                + " ".join(map(str, rec.new_vertices))
                + " faces "
                + " ".join(map(str, rec.corner_faces))
            )
        for a, b in prov.cross_edges:
            lines.append(f"cross {a} {b}")
        for cyc in prov.surviving_pentagons:
            lines.append("pentagon " + " ".join(map(str, cyc)))
        for cyc in prov.surviving_zero_center_hexagons:
            lines.append("zerohex " + " ".join(map(str, cyc)))
    else:
        for rec in prov.subdivisions:
            lines.append(f"subdivision {rec.vertex} {rec.center} {rec.leaf}")
        for a, b in prov.chords:
            lines.append(f"chord {a} {b}")
        for fi, choice in prov.hexagon_choices:
            lines.append(f"choice {fi} {choice}")
    return "\n".join(lines) + "\n"


def provenance_from_text(
    text: str,
) -> StarTransformProvenance | SemiStarProvenance:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != _PROV_HEADER:
        raise ProvenanceMismatchError("missing provenance header")
    fields: dict[str, list[list[str]]] = {}
    for ln in lines[1:]:
        parts = ln.split()
        fields.setdefault(parts[0], []).append(parts[1:])
    try:
        kind = fields["kind"][0][0]
        n_in = int(fields["input-vertices"][0][0])
        n_out = int(fields["output-vertices"][0][0])
        centers = tuple(int(x) for x in fields["centers"][0])
        kept = {int(a): int(b) for a, b in fields.get("kept", [])}
        if kind == "star":
            stars = []
            for row in fields.get("star", []):
                c = int(row[0])
                assert row[1] == "leaves" and row[5] == "new" and row[12] == "faces"
                stars.append(
                    StarRecord(
                        center=c,
                        leaves=tuple(int(x) for x in row[2:5]),
                        new_vertices=tuple(int(x) for x in row[6:12]),
                        corner_faces=tuple(int(x) for x in row[13:16]),
                    )
                )
            return StarTransformProvenance(
                input_vertex_count=n_in,
                output_vertex_count=n_out,
                centers=centers,
                kept=kept,
                stars=tuple(stars),
                cross_edges=tuple(
                    (int(a), int(b)) for a, b in fields.get("cross", [])
                ),
                surviving_pentagons=tuple(
                    tuple(int(x) for x in row) for row in fields.get("pentagon", [])
                ),
                surviving_zero_center_hexagons=tuple(
                    tuple(int(x) for x in row) for row in fields.get("zerohex", [])
                ),
            )
        if kind == "semistar":
            return SemiStarProvenance(
                input_vertex_count=n_in,
                output_vertex_count=n_out,
                centers=centers,
                kept=kept,
                subdivisions=tuple(
                    SubdivisionRecord(
                        vertex=int(a), center=int(b), leaf=int(c)
                    )
                    for a, b, c in fields.get("subdivision", [])
                ),
                chords=tuple((int(a), int(b)) for a, b in fields.get("chord", [])),
                hexagon_choices=tuple(
                    (int(a), int(b)) for a, b in fields.get("choice", [])
                ),
            )
        raise ProvenanceMismatchError(f"unknown provenance kind {kind!r}")
    except (KeyError, IndexError, ValueError, AssertionError) as exc:
        raise ProvenanceMismatchError(f"malformed provenance record: {exc}") from exc
