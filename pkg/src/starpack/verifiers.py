"""Independent checks for every spanning-subgraph certificate.

These functions share nothing with the searches that produce the
certificates: they look only at adjacency and the claimed components, so a
bug in a search cannot hide inside its own verifier.  Each check raises
CertificateError (or the PackingNotValidError subclass) with a concrete
witness; passing means the certificate's type invariants all hold.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import StarpackError
from .graphs import EmbeddedCubicGraph

if TYPE_CHECKING:  # certificate types, imported lazily to keep this a leaf module
    from .cycles import CycleFactor, PathPacking
    from .matching import PseudoMatching
    from .packing import SpiderPacking, Star, StarPacking


class CertificateError(StarpackError):
    """A claimed spanning-subgraph certificate does not hold on the graph."""


class PackingNotValidError(CertificateError):
    """A star packing violates its invariants."""


def _check_spanning(g: EmbeddedCubicGraph, covered: list[int], what: str) -> None:
    for v in g.vertices:
        if covered[v] == 0:
            raise CertificateError(f"{what}: vertex {v} is not covered")
        if covered[v] > 1:
            raise CertificateError(f"{what}: vertex {v} is covered {covered[v]} times")


def _cover(covered: list[int], vertices: Iterable[int], n: int, what: str) -> None:
    for v in vertices:
        if not 1 <= v <= n:
            raise CertificateError(f"{what}: vertex {v} out of range 1..{n}")
        covered[v] += 1


def _check_star(g: EmbeddedCubicGraph, star: Star, what: str) -> None:
    if len(set(star.leaves)) != 3 or star.center in star.leaves:
        raise CertificateError(f"{what}: malformed star {star}")
    for leaf in star.leaves:
        if not g.adjacent(star.center, leaf):
            raise CertificateError(
                f"{what}: leaf {leaf} is not adjacent to center {star.center}"
            )


def verify_star_packing(g: EmbeddedCubicGraph, packing: StarPacking) -> None:
    """Disjoint stars, every leaf adjacent to its center, union spans V."""
    covered = [0] * (g.vertex_count + 1)
    for star in packing.stars:
        try:
            _check_star(g, star, "star packing")
            _cover(covered, star.vertices(), g.vertex_count, "star packing")
        except CertificateError as exc:
            raise PackingNotValidError(str(exc)) from None
    try:
        _check_spanning(g, covered, "star packing")
    except CertificateError as exc:
        raise PackingNotValidError(str(exc)) from None
    if 4 * len(packing.stars) != g.vertex_count:
        raise PackingNotValidError(
            f"star packing: {len(packing.stars)} stars cannot span "
            f"{g.vertex_count} vertices"
        )


def verify_matching(g: EmbeddedCubicGraph, edges: Sequence[tuple[int, int]]) -> None:
    """A perfect matching: disjoint edges of the graph spanning V."""
    covered = [0] * (g.vertex_count + 1)
    for u, v in edges:
        if not g.adjacent(u, v):
            raise CertificateError(f"matching: ({u}, {v}) is not an edge")
        _cover(covered, (u, v), g.vertex_count, "matching")
    _check_spanning(g, covered, "matching")


def verify_pseudo_matching(
    g: EmbeddedCubicGraph, pm: PseudoMatching, expected_star_count: int | None = None
) -> None:
    """Disjoint K2 and K1,3 components spanning V."""
    covered = [0] * (g.vertex_count + 1)
    for u, v in pm.pairs:
        if not g.adjacent(u, v):
            raise CertificateError(f"pseudo matching: ({u}, {v}) is not an edge")
        _cover(covered, (u, v), g.vertex_count, "pseudo matching")
    for star in pm.stars:
        _check_star(g, star, "pseudo matching")
        _cover(covered, star.vertices(), g.vertex_count, "pseudo matching")
    _check_spanning(g, covered, "pseudo matching")
    if expected_star_count is not None and len(pm.stars) != expected_star_count:
        raise CertificateError(
            f"pseudo matching: expected {expected_star_count} stars, "
            f"got {len(pm.stars)}"
        )


def _check_cycle(g: EmbeddedCubicGraph, cycle: Sequence[int], what: str) -> None:
    if len(set(cycle)) != len(cycle):
        raise CertificateError(f"{what}: repeated vertex in cycle {cycle}")
    if len(cycle) < 3:
        raise CertificateError(f"{what}: cycle {cycle} is too short")
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if not g.adjacent(u, v):
            raise CertificateError(f"{what}: ({u}, {v}) is not an edge")


def verify_cycle_factor(g: EmbeddedCubicGraph, factor: CycleFactor) -> None:
    """Vertex-disjoint cycles of size 5 or 6 spanning V."""
    covered = [0] * (g.vertex_count + 1)
    for cycle in factor.cycles:
        if len(cycle) not in (5, 6):
            raise CertificateError(f"cycle factor: cycle of size {len(cycle)}")
        _check_cycle(g, cycle, "cycle factor")
        _cover(covered, cycle, g.vertex_count, "cycle factor")
    _check_spanning(g, covered, "cycle factor")


def verify_hamiltonian_cycle(g: EmbeddedCubicGraph, cycle: Sequence[int]) -> None:
    """A single cycle through every vertex."""
    if len(cycle) != g.vertex_count:
        raise CertificateError(
            f"hamiltonian cycle: {len(cycle)} vertices, expected {g.vertex_count}"
        )
    _check_cycle(g, cycle, "hamiltonian cycle")


def verify_path_packing(g: EmbeddedCubicGraph, pp: PathPacking) -> None:
    """Vertex-disjoint k-vertex paths spanning V."""
    covered = [0] * (g.vertex_count + 1)
    for path in pp.paths:
        if len(path) != pp.k:
            raise CertificateError(
                f"path packing: path of {len(path)} vertices, expected {pp.k}"
            )
        if len(set(path)) != len(path):
            raise CertificateError(f"path packing: repeated vertex in {path}")
        for u, v in zip(path, path[1:]):
            if not g.adjacent(u, v):
                raise CertificateError(f"path packing: ({u}, {v}) is not an edge")
        _cover(covered, path, g.vertex_count, "path packing")
    _check_spanning(g, covered, "path packing")


def verify_spider_packing(g: EmbeddedCubicGraph, sp: SpiderPacking) -> None:
    """Disjoint subdivided stars (7 vertices: center plus three 2-edge legs)
    spanning V."""
    covered = [0] * (g.vertex_count + 1)
    for spider in sp.spiders:
        if len(spider.legs) != 3:
            raise CertificateError(f"spider packing: {len(spider.legs)} legs")
        for mid, leaf in spider.legs:
            if not g.adjacent(spider.center, mid):
                raise CertificateError(
                    f"spider packing: ({spider.center}, {mid}) is not an edge"
                )
            if not g.adjacent(mid, leaf):
                raise CertificateError(f"spider packing: ({mid}, {leaf}) is not an edge")
        vs = spider.vertices()
        if len(set(vs)) != 7:
            raise CertificateError(f"spider packing: component is not 7 vertices: {vs}")
        _cover(covered, vs, g.vertex_count, "spider packing")
    _check_spanning(g, covered, "spider packing")
