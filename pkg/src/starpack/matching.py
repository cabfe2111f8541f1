"""Perfect matchings and perfect pseudo matchings.

The matching solver is plain augmenting-path search with blossom
contraction (maximum cardinality, unweighted).  Every bridgeless cubic
graph has a perfect matching, so on fullerene input the solver always
completes; the pseudo-matching search layers a deterministic choice of
star centers on top of it and finishes the rest with K2 components.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .budget import DEFAULT_BUDGET, SearchBudget
from .errors import ArithmeticInfeasibleError, ExhaustedError
from .graphs import EmbeddedCubicGraph
from .packing import Star
from . import verifiers


@dataclass(frozen=True)
class PseudoMatching:
    """Disjoint K2 and K1,3 components spanning the vertex set."""

    pairs: tuple[tuple[int, int], ...]
    stars: tuple[Star, ...]


# ---------------------------------------------------------------------------
# Maximum cardinality matching (blossom contraction)
# ---------------------------------------------------------------------------


def _maximum_matching(n: int, adj: list[list[int]]) -> list[int]:
    """match[v] = partner of v, or 0.  Vertices 1..n; deterministic."""
    match = [0] * (n + 1)
    parent = [0] * (n + 1)
    base = [0] * (n + 1)

    def lca(a: int, b: int) -> int:
        seen = [False] * (n + 1)
        x = base[a]
        while True:
            seen[x] = True
            if match[x] == 0:
                break
            x = base[parent[match[x]]]
        y = base[b]
        while not seen[y]:
            y = base[parent[match[y]]]
        return y

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> int:
        used = [False] * (n + 1)
        for i in range(n + 1):
            parent[i] = 0
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != 0 and parent[match[to]] != 0):
                    cur = lca(v, to)
                    blossom = [False] * (n + 1)
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(1, n + 1):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == 0:
                    parent[to] = v
                    if match[to] == 0:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return 0

    for v in range(1, n + 1):
        if match[v] == 0:
            end = find_augmenting_path(v)
            while end != 0:
                prev = parent[end]
                nxt = match[prev]
                match[end] = prev
                match[prev] = end
                end = nxt
    return match


def find_perfect_matching(g: EmbeddedCubicGraph) -> tuple[tuple[int, int], ...]:
    """A perfect matching, deterministic for a fixed graph.

    Exists for every bridgeless cubic graph; raises ExhaustedError when the
    maximum matching falls short (only possible on non-fullerene input).
    """
    n = g.vertex_count
    adj = [[]] + [list(g.rotations[v - 1]) for v in g.vertices]
    match = _maximum_matching(n, adj)
    unmatched = [v for v in g.vertices if match[v] == 0]
    if unmatched:
        raise ExhaustedError(
            f"no perfect matching: vertices {unmatched} stay exposed "
            "(input has a bridge or is not cubic?)"
        )
    edges = tuple(sorted((v, match[v]) for v in g.vertices if v < match[v]))
    verifiers.verify_matching(g, edges)
    return edges


def _perfect_matching_on_remainder(
    g: EmbeddedCubicGraph, removed: set[int]
) -> tuple[tuple[int, int], ...] | None:
    """Perfect matching of the induced subgraph on V minus removed, else None."""
    keep = [v for v in g.vertices if v not in removed]
    if len(keep) % 2:
        return None
    index = {v: i + 1 for i, v in enumerate(keep)}
    m = len(keep)
    adj: list[list[int]] = [[] for _ in range(m + 1)]
    for v in keep:
        iv = index[v]
        for w in g.rotations[v - 1]:
            if w in index:
                adj[iv].append(index[w])
    match = _maximum_matching(m, adj)
    if any(match[i] == 0 for i in range(1, m + 1)):
        return None
    return tuple(
        sorted((keep[i - 1], keep[match[i] - 1]) for i in range(1, m + 1) if i < match[i])
    )


# ---------------------------------------------------------------------------
# Pseudo matchings with a prescribed star count
# ---------------------------------------------------------------------------


def find_pseudo_matching(
    g: EmbeddedCubicGraph,
    star_count: int,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> PseudoMatching:
    """A perfect pseudo matching with exactly `star_count` K1,3 components.

    Center sets are enumerated in lexicographic order (closed neighborhoods
    kept disjoint while extending); each complete center set is finished by
    a perfect-matching attempt on the remaining induced subgraph.  Raises
    ArithmeticInfeasibleError when vertex counting already rules the
    structure out, ExhaustedError when the full enumeration finds nothing,
    BudgetExceededError when the budget runs out first.
    """
    if star_count < 0:
        raise ValueError("star_count must be non-negative")
    n = g.vertex_count
    remainder = n - 4 * star_count
    if remainder < 0 or remainder % 2:
        raise ArithmeticInfeasibleError(
            f"{star_count} stars cannot fit: {n} - 4*{star_count} = {remainder}"
        )
    if star_count == 0:
        return PseudoMatching(pairs=find_perfect_matching(g), stars=())

    tracker = budget.start()
    removed: set[int] = set()
    centers: list[int] = []

    def closed_neighborhood(c: int) -> tuple[int, ...]:
        return (c, *g.rotations[c - 1])

    def extend(start: int) -> PseudoMatching | None:
        if len(centers) == star_count:
            tracker.charge()
            pairs = _perfect_matching_on_remainder(g, removed)
            if pairs is None:
                return None
            stars = tuple(
                Star(center=c, leaves=g.neighbors(c)) for c in centers
            )
            return PseudoMatching(pairs=pairs, stars=stars)
        for c in range(start, n + 1):
            block = closed_neighborhood(c)
            if any(v in removed for v in block):
                continue
            tracker.charge()
            removed.update(block)
            centers.append(c)
            result = extend(c + 1)
            if result is not None:
                return result
            centers.pop()
            removed.difference_update(block)
        return None

    result = extend(1)
    if result is None:
        raise ExhaustedError(
            f"no perfect pseudo matching with {star_count} stars exists "
            f"(search exhausted after {tracker.nodes} nodes)"
        )
    verifiers.verify_pseudo_matching(g, result, expected_star_count=star_count)
    return result
