"""Cubic graphs carrying a combinatorial embedding (rotation system).

A rotation system assigns every vertex the cyclic order of its three
neighbors, read counterclockwise.  Faces are traced from that data alone:
the directed edge (u -> v) is followed by (v -> w), where w is the neighbor
immediately after u in the rotation at v.  With counterclockwise rotations
this walks every face once, so planarity becomes a checkable property
(Euler's formula on the traced faces) instead of an assumption.

Vertices are dense 1-based integers.  Graphs are immutable after
construction and safe to share; all derived data (edges, faces, census,
connectivity) is cached on first use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import StarpackError


class GraphError(StarpackError):
    """Invalid graph input."""


class BadIdentifierError(GraphError):
    """Vertex identifiers are not contiguous 1..n or a rotation is missing."""


class NonCubicError(GraphError):
    """Some vertex does not have exactly three distinct neighbors."""


class AsymmetricAdjacencyError(GraphError):
    """u lists v as a neighbor but v does not list u."""


class DisconnectedError(GraphError):
    """The graph is not connected."""


class GenusNonZeroError(GraphError):
    """Traced faces violate Euler's formula, so the embedding is not planar."""


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """One face of the embedding.

    The boundary is a cyclic vertex sequence in traced order, rotated so it
    starts at its smallest vertex.  Consecutive entries (including the wrap
    from last to first) are adjacent in the graph.
    """

    boundary: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    def directed_edges(self) -> list[tuple[int, int]]:
        b = self.boundary
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]

    def __contains__(self, vertex: int) -> bool:
        return vertex in self.boundary


@dataclass(frozen=True)
class FaceCensus:
    """Face counts by size together with the Euler check for the embedding."""

    counts: dict[int, int]
    vertex_count: int
    edge_count: int

    @property
    def face_count(self) -> int:
        return sum(self.counts.values())

    @property
    def pentagons(self) -> int:
        return self.counts.get(5, 0)

    @property
    def hexagons(self) -> int:
        return self.counts.get(6, 0)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    @property
    def euler_ok(self) -> bool:
        return self.euler_characteristic == 2


FULLERENE_AXIOMS = (
    "cubic",
    "connected",
    "genus_zero",
    "three_connected",
    "faces_only_5_6",
    "exactly_12_pentagons",
)


@dataclass(frozen=True)
class VerificationReport:
    """Per-axiom outcome of the fullerene check, with a witness per failure."""

    results: dict[str, bool]
    witnesses: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def failures(self) -> list[str]:
        return [axiom for axiom in FULLERENE_AXIOMS if not self.results[axiom]]

    def summary(self) -> str:
        parts = []
        for axiom in FULLERENE_AXIOMS:
            mark = "ok" if self.results[axiom] else "FAIL"
            parts.append(f"{axiom}={mark}")
        return " ".join(parts)


@dataclass(frozen=True)
class EmbeddedCubicGraph:
    """Cubic graph plus rotation system; see the module docstring.

    rotations[v - 1] is the counterclockwise neighbor triple of vertex v.
    Use build_graph() to construct a validated instance.
    """

    vertex_count: int
    rotations: tuple[tuple[int, int, int], ...]

    # -- basic accessors ----------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.rotations[v - 1]

    @cached_property
    def edge_count(self) -> int:
        return 3 * self.vertex_count // 2

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All undirected edges as (u, v) with u < v, sorted."""
        out = []
        for u in self.vertices:
            for v in self.rotations[u - 1]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return tuple(out)

    @cached_property
    def _adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(triple) for triple in self.rotations)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adjacency[u - 1]

    def successor(self, v: int, u: int) -> int:
        """Neighbor immediately after u in the rotation at v."""
        rot = self.rotations[v - 1]
        return rot[(rot.index(u) + 1) % 3]

    def canonical_rotations(self) -> tuple[tuple[int, int, int], ...]:
        """Each triple rotated to start at its smallest entry.

        Two graphs describe the same embedding iff their canonical rotations
        are equal; encode/decode round-trips preserve exactly this form.
        """
        out = []
        for triple in self.rotations:
            i = triple.index(min(triple))
            out.append(triple[i:] + triple[:i])
        return tuple(out)

    # -- faces ---------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return _trace_faces(self)

    @cached_property
    def _face_index(self) -> dict[tuple[int, int], int]:
        """Directed edge (u, v) -> index into self.faces."""
        index: dict[tuple[int, int], int] = {}
        for i, face in enumerate(self.faces):
            for de in face.directed_edges():
                index[de] = i
        return index

    def face_index_of(self, u: int, v: int) -> int:
        """Index of the face whose traced boundary contains u -> v."""
        return self._face_index[(u, v)]

    def faces_at(self, v: int) -> tuple[int, int, int]:
        """Indices of the three faces incident to v, in corner order."""
        return tuple(self.face_index_of(u, v) for u in self.rotations[v - 1])

    @cached_property
    def census(self) -> FaceCensus:
        counts: dict[int, int] = {}
        for face in self.faces:
            counts[face.size] = counts.get(face.size, 0) + 1
        return FaceCensus(
            counts=counts, vertex_count=self.vertex_count, edge_count=self.edge_count
        )

    @cached_property
    def fullerene_report(self) -> VerificationReport:
        return _verify_fullerene(self)


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------


def build_graph(
    vertex_count: int, rotations: Sequence[Iterable[int]]
) -> EmbeddedCubicGraph:
    """Validate a rotation table and return the immutable graph.

    rotations[i] is the neighbor triple of vertex i + 1.  Raises
    BadIdentifierError, NonCubicError, AsymmetricAdjacencyError or
    DisconnectedError; a returned graph satisfies all type invariants.
    """
    if vertex_count <= 0:
        raise BadIdentifierError(f"vertex_count must be positive, got {vertex_count}")
    if len(rotations) != vertex_count:
        raise BadIdentifierError(
            f"expected {vertex_count} rotations, got {len(rotations)}"
        )
    table: list[tuple[int, int, int]] = []
    for i, rot in enumerate(rotations):
        triple = tuple(rot)
        v = i + 1
        for w in triple:
            if not isinstance(w, int) or not 1 <= w <= vertex_count:
                raise BadIdentifierError(
                    f"vertex {v} lists invalid neighbor {w!r} (valid: 1..{vertex_count})"
                )
        if len(triple) != 3 or len(set(triple)) != 3 or v in triple:
            raise NonCubicError(
                f"vertex {v} must have exactly 3 distinct neighbors, got {triple}"
            )
        table.append(triple)

    for v in range(1, vertex_count + 1):
        for w in table[v - 1]:
            if v not in table[w - 1]:
                raise AsymmetricAdjacencyError(
                    f"vertex {v} lists {w} but {w} does not list {v}"
                )

    seen = bytearray(vertex_count + 1)
    stack = [1]
    seen[1] = 1
    reached = 1
    while stack:
        u = stack.pop()
        for w in table[u - 1]:
            if not seen[w]:
                seen[w] = 1
                reached += 1
                stack.append(w)
    if reached != vertex_count:
        missing = next(v for v in range(1, vertex_count + 1) if not seen[v])
        raise DisconnectedError(
            f"vertex {missing} is not reachable from vertex 1"
        )

    return EmbeddedCubicGraph(vertex_count=vertex_count, rotations=tuple(table))


# ---------------------------------------------------------------------------
# Face tracing and census
# ---------------------------------------------------------------------------


def _trace_faces(g: EmbeddedCubicGraph) -> tuple[Face, ...]:
    seen: set[tuple[int, int]] = set()
    faces: list[Face] = []
    for u in g.vertices:
        for v in g.rotations[u - 1]:
            if (u, v) in seen:
                continue
            boundary = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                boundary.append(a)
                a, b = b, g.successor(b, a)
            # rotate so the smallest vertex (first occurrence) leads
            k = boundary.index(min(boundary))
            faces.append(Face(tuple(boundary[k:] + boundary[:k])))
    return tuple(faces)


def trace_faces(g: EmbeddedCubicGraph) -> tuple[Face, ...]:
    """Faces of the embedding: orbits of directed edges under the successor
    rule.  Deterministic: discovery order scans directed edges (u, v) by
    vertex then rotation position."""
    return g.faces


def face_census(
    g: EmbeddedCubicGraph, *, require_genus_zero: bool = False
) -> FaceCensus:
    """Face counts by size; the census carries the Euler check.

    With require_genus_zero=True a non-planar embedding raises
    GenusNonZeroError instead of being reported in the census.
    """
    census = g.census
    if require_genus_zero and not census.euler_ok:
        raise GenusNonZeroError(
            f"V - E + F = {census.euler_characteristic}, expected 2 "
            f"(V={census.vertex_count}, E={census.edge_count}, F={census.face_count})"
        )
    return census


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------


def _find_articulation_vertex(
    g: EmbeddedCubicGraph, removed: int | None = None
) -> int | None:
    """A cut vertex of g minus `removed`, or None if there is none.

    Also returns a vertex when the remaining graph is already disconnected
    (any vertex of a second component would witness that; callers check
    connectivity separately when they need to distinguish the two).
    Iterative lowpoint DFS.
    """
    n = g.vertex_count
    root = 1 if removed != 1 else 2
    num = [0] * (n + 1)  # DFS preorder number, 0 = unvisited
    low = [0] * (n + 1)
    parent = [0] * (n + 1)
    counter = 1
    num[root] = 1
    low[root] = 1
    stack: list[tuple[int, int]] = [(root, 0)]  # (vertex, next neighbor slot)
    root_children = 0
    visited = 1
    while stack:
        v, slot = stack[-1]
        rot = g.rotations[v - 1]
        if slot < 3:
            stack[-1] = (v, slot + 1)
            w = rot[slot]
            if w == removed:
                continue
            if num[w] == 0:
                counter += 1
                visited += 1
                num[w] = counter
                low[w] = counter
                parent[w] = v
                if v == root:
                    root_children += 1
                stack.append((w, 0))
            elif w != parent[v]:
                if num[w] < low[v]:
                    low[v] = num[w]
        else:
            stack.pop()
            p = parent[v]
            if p:
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= num[p]:
                    return p
    if root_children > 1:
        return root
    expected = n - (1 if removed is not None else 0)
    if visited != expected:
        # already disconnected without any further removal
        skip = {removed, root}
        return next(v for v in g.vertices if num[v] == 0 and v not in skip)
    return None


def vertex_connectivity_at_least(g: EmbeddedCubicGraph, k: int) -> bool:
    """True iff removing any k - 1 vertices leaves the graph connected.

    Decides exactly the exhaustive removal-set predicate for k in 1..3; the
    k = 3 case checks, for every deleted vertex, that the remainder has no
    cut vertex, which covers all vertex pairs without enumerating them.
    """
    if not 1 <= k <= 3:
        raise ValueError(f"k must be in 1..3, got {k}")
    return _find_cut_set(g, k) is None


def _find_cut_set(g: EmbeddedCubicGraph, k: int) -> tuple[int, ...] | None:
    """A cut set of size < k (possibly empty, meaning disconnected), else None."""
    # build_graph guarantees connectivity, but stay honest for direct callers
    if k >= 1:
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for w in g.rotations[u - 1]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != g.vertex_count:
            return ()
    if k >= 2:
        cut = _find_articulation_vertex(g)
        if cut is not None:
            return (cut,)
    if k >= 3:
        for a in g.vertices:
            b = _find_articulation_vertex(g, removed=a)
            if b is not None:
                return (a, b)
    return None


# ---------------------------------------------------------------------------
# Fullerene verification
# ---------------------------------------------------------------------------


def _verify_fullerene(g: EmbeddedCubicGraph) -> VerificationReport:
    results: dict[str, bool] = {}
    witnesses: dict[str, str] = {}

    bad_degree = next(
        (v for v in g.vertices if len(set(g.rotations[v - 1])) != 3), None
    )
    results["cubic"] = bad_degree is None
    if bad_degree is not None:
        witnesses["cubic"] = f"vertex {bad_degree}"

    cut0 = _find_cut_set(g, 1)
    results["connected"] = cut0 is None
    if cut0 is not None:
        witnesses["connected"] = "graph is disconnected"

    census = g.census
    results["genus_zero"] = census.euler_ok
    if not census.euler_ok:
        witnesses["genus_zero"] = (
            f"V - E + F = {census.euler_characteristic} != 2"
        )

    cut = _find_cut_set(g, 3)
    results["three_connected"] = cut is None
    if cut is not None:
        witnesses["three_connected"] = f"cut set {cut}"

    bad_face = next((f for f in g.faces if f.size not in (5, 6)), None)
    results["faces_only_5_6"] = bad_face is None
    if bad_face is not None:
        witnesses["faces_only_5_6"] = f"face of size {bad_face.size}: {bad_face.boundary}"

    results["exactly_12_pentagons"] = census.pentagons == 12
    if census.pentagons != 12:
        witnesses["exactly_12_pentagons"] = f"{census.pentagons} pentagons"

    return VerificationReport(results=results, witnesses=witnesses)


def verify_fullerene(g: EmbeddedCubicGraph) -> VerificationReport:
    """Run all fullerene axioms; failures become report entries, not errors."""
    return g.fullerene_report


# ---------------------------------------------------------------------------
# Shared cycle helpers
# ---------------------------------------------------------------------------


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Canonical form of a cyclic vertex sequence: among all rotations of
    both traversal directions, the lexicographically smallest tuple.  Two
    cycles are equal as subgraphs iff their canonical forms match."""
    best: tuple[int, ...] | None = None
    seq = tuple(cycle)
    for direction in (seq, seq[::-1]):
        for shift in range(len(direction)):
            cand = direction[shift:] + direction[:shift]
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best
