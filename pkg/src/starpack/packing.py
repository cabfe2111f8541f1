"""Perfect star packings: exact search and classification.

A star is a K1,3 component; in a cubic graph a star is determined by its
center (the three leaves must be the center's whole neighborhood), so a
perfect star packing is exactly a set of centers whose closed neighborhoods
partition the vertex set.  The search below branches on the lowest-numbered
uncovered vertex, which either becomes a center itself or a leaf of one of
its neighbors; neighbor order follows the rotation system, so results are
reproducible.

Divisibility gate: a fullerene can only carry a perfect star packing when
its vertex count is divisible by 8, so such inputs are rejected
arithmetically before any search.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .budget import DEFAULT_BUDGET, BudgetTracker, SearchBudget
from .errors import BudgetExceededError, StarpackError
from .graphs import EmbeddedCubicGraph
from . import verifiers


class InvalidInputError(StarpackError):
    """The packing search requires a graph that passes all fullerene axioms."""


@dataclass(frozen=True)
class Star:
    """One K1,3 component: a center and its three leaves."""

    center: int
    leaves: tuple[int, int, int]

    def vertices(self) -> tuple[int, int, int, int]:
        return (self.center, *self.leaves)


@dataclass(frozen=True)
class StarPacking:
    """A set of disjoint stars covering every vertex of a specific graph."""

    stars: tuple[Star, ...]

    @cached_property
    def centers(self) -> tuple[int, ...]:
        return tuple(sorted(s.center for s in self.stars))

    @cached_property
    def star_edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for s in self.stars:
            for leaf in s.leaves:
                out.append((min(s.center, leaf), max(s.center, leaf)))
        return tuple(sorted(out))

    @classmethod
    def from_centers(
        cls, g: EmbeddedCubicGraph, centers: Iterator[int] | tuple[int, ...] | list[int]
    ) -> StarPacking:
        """Build the packing defined by a center set (leaves in rotation
        order).  Validity is not checked here; use verifiers or
        classify_packing."""
        stars = tuple(
            Star(center=c, leaves=g.neighbors(c)) for c in sorted(centers)
        )
        return cls(stars=stars)


@dataclass(frozen=True)
class Spider:
    """A subdivided star: center plus three 2-edge legs (7 vertices)."""

    center: int
    legs: tuple[tuple[int, int], ...]  # (middle, leaf) per leg

    def vertices(self) -> tuple[int, ...]:
        out = [self.center]
        for mid, leaf in self.legs:
            out.append(mid)
            out.append(leaf)
        return tuple(out)


@dataclass(frozen=True)
class SpiderPacking:
    """Disjoint spiders covering every vertex."""

    spiders: tuple[Spider, ...]


@dataclass(frozen=True)
class PackingClassification:
    """Face-level profile of a star packing.

    is_p0: no center lies on a pentagon (all three incident faces are
    hexagons).  is_balanced: every hexagon holds 0 or 2 centers and the two
    centers of a 2-center hexagon are antipodal on its boundary.  Both
    transformations require a balanced packing of this kind.
    """

    is_p0: bool
    is_balanced: bool
    center_face_profile: dict[int, tuple[int, int, int]]
    hexagon_center_histogram: dict[int, int]


class SearchOutcome(enum.Enum):
    FOUND_LIMIT = "found-limit"          # stopped after `limit` packings
    EXHAUSTED = "exhausted"              # whole tree searched: list is complete
    BUDGET_EXCEEDED = "budget-exceeded"  # inconclusive
    MODULO_REJECT = "modulo-reject"      # vertex count not divisible by 8


@dataclass(frozen=True)
class StarPackingSearchResult:
    packings: tuple[StarPacking, ...]
    outcome: SearchOutcome
    nodes: int

    @property
    def proven_empty(self) -> bool:
        return not self.packings and self.outcome in (
            SearchOutcome.EXHAUSTED,
            SearchOutcome.MODULO_REJECT,
        )


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------


def _require_fullerene(g: EmbeddedCubicGraph) -> None:
    report = g.fullerene_report
    if not report.passed:
        raise InvalidInputError(
            f"input is not a fullerene graph: {report.summary()}"
        )


def iter_star_packings(
    g: EmbeddedCubicGraph, tracker: BudgetTracker
) -> Iterator[StarPacking]:
    """Yield every perfect star packing of g in deterministic search order.

    Charges one budget node per placed star; raises BudgetExceededError
    mid-iteration when the budget runs out.
    """
    n = g.vertex_count
    rot = g.rotations
    covered = bytearray(n + 1)
    chosen: list[int] = []  # center stack

    def candidate_centers(v: int) -> list[int]:
        cands = []
        if not (covered[rot[v - 1][0]] or covered[rot[v - 1][1]] or covered[rot[v - 1][2]]):
            cands.append(v)
        for u in rot[v - 1]:
            if covered[u]:
                continue
            nu = rot[u - 1]
            if not (covered[nu[0]] or covered[nu[1]] or covered[nu[2]]):
                cands.append(u)
        return cands

    def place(c: int) -> None:
        covered[c] = 1
        for w in rot[c - 1]:
            covered[w] = 1
        chosen.append(c)

    def unplace(c: int) -> None:
        covered[c] = 0
        for w in rot[c - 1]:
            covered[w] = 0
        chosen.pop()

    def search(lowest: int) -> Iterator[StarPacking]:
        v = lowest
        while v <= n and covered[v]:
            v += 1
        if v > n:
            yield StarPacking.from_centers(g, tuple(chosen))
            return
        for c in candidate_centers(v):
            tracker.charge()
            place(c)
            yield from search(v)
            unplace(c)

    yield from search(1)


def find_star_packings(
    g: EmbeddedCubicGraph,
    limit: int = 1,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> StarPackingSearchResult:
    """Up to `limit` perfect star packings by exhaustive backtracking.

    Outcomes: MODULO_REJECT when the vertex count is not divisible by 8
    (decided before validating or searching); EXHAUSTED when the whole tree
    was explored (an empty list is then a proof of nonexistence);
    BUDGET_EXCEEDED when the budget ran out first; FOUND_LIMIT when `limit`
    packings were collected.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    if g.vertex_count % 8 != 0:
        return StarPackingSearchResult(
            packings=(), outcome=SearchOutcome.MODULO_REJECT, nodes=0
        )
    _require_fullerene(g)
    tracker = budget.start()
    found: list[StarPacking] = []
    try:
        for packing in iter_star_packings(g, tracker):
            verifiers.verify_star_packing(g, packing)
            found.append(packing)
            if len(found) >= limit:
                return StarPackingSearchResult(
                    packings=tuple(found),
                    outcome=SearchOutcome.FOUND_LIMIT,
                    nodes=tracker.nodes,
                )
    except BudgetExceededError as exc:
        return StarPackingSearchResult(
            packings=tuple(found),
            outcome=SearchOutcome.BUDGET_EXCEEDED,
            nodes=exc.nodes,
        )
    return StarPackingSearchResult(
        packings=tuple(found), outcome=SearchOutcome.EXHAUSTED, nodes=tracker.nodes
    )


def find_balanced_p0_packing(
    g: EmbeddedCubicGraph, budget: SearchBudget = DEFAULT_BUDGET
) -> StarPacking | None:
    """First packing (in search order) that is P0 and balanced, or None when
    the exhaustive search proves there is none.  Raises BudgetExceededError
    if the budget runs out first, and skips nothing silently."""
    if g.vertex_count % 8 != 0:
        return None
    _require_fullerene(g)
    tracker = budget.start()
    for packing in iter_star_packings(g, tracker):
        cls = classify_packing(g, packing)
        if cls.is_p0 and cls.is_balanced:
            return packing
    return None


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


def classify_packing(
    g: EmbeddedCubicGraph, packing: StarPacking
) -> PackingClassification:
    """P0 and balance flags plus the face-level censuses backing them."""
    verifiers.verify_star_packing(g, packing)
    faces = g.faces
    centers = set(packing.centers)

    profile: dict[int, tuple[int, int, int]] = {}
    is_p0 = True
    for c in packing.centers:
        sizes = tuple(sorted(faces[i].size for i in g.faces_at(c)))
        profile[c] = sizes
        if sizes != (6, 6, 6):
            is_p0 = False

    histogram = {0: 0, 1: 0, 2: 0}
    is_balanced = True
    for face in faces:
        if face.size != 6:
            continue
        positions = [i for i, v in enumerate(face.boundary) if v in centers]
        count = len(positions)
        histogram[count] = histogram.get(count, 0) + 1
        if count == 1 or count > 2:
            is_balanced = False
        elif count == 2 and (positions[1] - positions[0]) % 6 != 3:
            is_balanced = False

    return PackingClassification(
        is_p0=is_p0,
        is_balanced=is_balanced,
        center_face_profile=profile,
        hexagon_center_histogram=histogram,
    )
