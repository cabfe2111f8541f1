"""Cycle structures: {C5,C6}-factors, Hamiltonian cycles, path packings.

Both searches here are exact and deterministic.  The cycle-factor search
branches on the lowest-numbered uncovered vertex and enumerates the 5- and
6-cycles through it in rotation order; the Hamiltonian search decides one
edge at a time with degree-2 forcing (every vertex needs exactly two cycle
edges), premature-cycle rejection and a connectivity prune.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .budget import DEFAULT_BUDGET, SearchBudget
from .errors import ArithmeticInfeasibleError, ExhaustedError, StarpackError
from .graphs import EmbeddedCubicGraph
from . import verifiers


class NotDivisibleError(StarpackError):
    """The path order does not divide the cycle length."""


@dataclass(frozen=True)
class CycleFactor:
    """Vertex-disjoint cycles of size 5 or 6 spanning the vertex set."""

    cycles: tuple[tuple[int, ...], ...]

    def size_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for c in self.cycles:
            counts[len(c)] = counts.get(len(c), 0) + 1
        return counts


@dataclass(frozen=True)
class PathPacking:
    """Vertex-disjoint paths with exactly k vertices each, spanning V."""

    k: int
    paths: tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# {C5, C6}-factor
# ---------------------------------------------------------------------------


def _has_5_6_solution(n: int) -> bool:
    return any((n - 5 * a) % 6 == 0 for a in range(n // 5 + 1))


def find_cycle_factor_5_6(
    g: EmbeddedCubicGraph,
    hint: CycleFactor | None = None,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> CycleFactor:
    """A spanning set of disjoint 5/6-cycles, by verification of a hint or
    by exhaustive backtracking.

    Raises ArithmeticInfeasibleError when 5a + 6b = n has no non-negative
    solution, ExhaustedError when the search proves there is no factor,
    BudgetExceededError when the budget runs out first.
    """
    if hint is not None:
        verifiers.verify_cycle_factor(g, hint)
        return hint
    n = g.vertex_count
    if not _has_5_6_solution(n):
        raise ArithmeticInfeasibleError(f"5a + 6b = {n} has no non-negative solution")

    tracker = budget.start()
    rot = g.rotations
    covered = bytearray(n + 1)
    chosen: list[tuple[int, ...]] = []

    def cycles_through(v: int) -> list[tuple[int, ...]]:
        """5/6-cycles through v over uncovered vertices, DFS in rotation
        order, one orientation per cycle (second vertex < last vertex)."""
        found: list[tuple[int, ...]] = []
        path = [v]
        on_path = {v}

        def dfs() -> None:
            last = path[-1]
            for w in rot[last - 1]:
                if w == v:
                    if len(path) in (5, 6) and path[1] < path[-1]:
                        found.append(tuple(path))
                    continue
                if covered[w] or w in on_path or len(path) == 6:
                    continue
                path.append(w)
                on_path.add(w)
                dfs()
                on_path.remove(w)
                path.pop()

        dfs()
        return found

    def search() -> CycleFactor | None:
        v = 1
        while v <= n and covered[v]:
            v += 1
        if v > n:
            return CycleFactor(cycles=tuple(chosen))
        for cycle in cycles_through(v):
            tracker.charge()
            for x in cycle:
                covered[x] = 1
            chosen.append(cycle)
            result = search()
            if result is not None:
                return result
            chosen.pop()
            for x in cycle:
                covered[x] = 0
        return None

    result = search()
    if result is None:
        raise ExhaustedError(
            f"no perfect {{C5, C6}}-packing exists "
            f"(search exhausted after {tracker.nodes} nodes)"
        )
    verifiers.verify_cycle_factor(g, result)
    return result


# ---------------------------------------------------------------------------
# Hamiltonian cycles
# ---------------------------------------------------------------------------

_UNKNOWN, _IN, _OUT = 0, 1, 2


def find_hamiltonian_cycle(
    g: EmbeddedCubicGraph, budget: SearchBudget = DEFAULT_BUDGET
) -> tuple[int, ...]:
    """A Hamiltonian cycle as a vertex sequence starting at vertex 1 and
    continuing toward its smaller cycle neighbor.

    Branches on the first undecided edge of the lowest-numbered vertex;
    every fullerene graph has such a cycle, so on valid input the only
    failure mode is BudgetExceededError.
    """
    n = g.vertex_count
    rot = g.rotations
    edge_id: dict[tuple[int, int], int] = {}
    edge_vs: list[tuple[int, int]] = []
    for u, v in g.edges:
        edge_id[(u, v)] = len(edge_vs)
        edge_vs.append((u, v))
    m = len(edge_vs)
    edges_at: list[list[int]] = [[] for _ in range(n + 1)]
    for v in g.vertices:
        for w in rot[v - 1]:
            edges_at[v].append(edge_id[(min(v, w), max(v, w))])

    tracker = budget.start()

    state = bytearray(m)
    deg_in = bytearray(n + 1)
    deg_unk = bytearray(n + 1)
    for v in g.vertices:
        deg_unk[v] = 3
    other_end = list(range(n + 1))
    in_count = 0

    def propagate(queue: list[tuple[int, int]]) -> bool:
        nonlocal in_count
        while queue:
            eid, val = queue.pop()
            cur = state[eid]
            if cur == val:
                continue
            if cur != _UNKNOWN:
                return False
            u, v = edge_vs[eid]
            if val == _IN:
                if deg_in[u] >= 2 or deg_in[v] >= 2:
                    return False
                eu, ev = other_end[u], other_end[v]
                if eu == v:
                    # closes the path through u and v into a cycle
                    if in_count + 1 != n:
                        return False
                else:
                    other_end[eu] = ev
                    other_end[ev] = eu
                state[eid] = _IN
                in_count += 1
                for x in (u, v):
                    deg_in[x] += 1
                    deg_unk[x] -= 1
                    if deg_in[x] == 2:
                        for f in edges_at[x]:
                            if state[f] == _UNKNOWN:
                                queue.append((f, _OUT))
            else:
                state[eid] = _OUT
                for x in (u, v):
                    deg_unk[x] -= 1
                    live = deg_in[x] + deg_unk[x]
                    if live < 2:
                        return False
                    if live == 2 and deg_unk[x] > 0:
                        for f in edges_at[x]:
                            if state[f] == _UNKNOWN:
                                queue.append((f, _IN))
        return _connected()

    def _connected() -> bool:
        seen = bytearray(n + 1)
        stack = [1]
        seen[1] = 1
        reached = 1
        while stack:
            x = stack.pop()
            for f in edges_at[x]:
                if state[f] == _OUT:
                    continue
                a, b = edge_vs[f]
                y = b if a == x else a
                if not seen[y]:
                    seen[y] = 1
                    reached += 1
                    stack.append(y)
        return reached == n

    def snapshot():
        return bytes(state), bytes(deg_in), bytes(deg_unk), other_end.copy(), in_count

    def restore(snap) -> None:
        nonlocal in_count
        state[:], deg_in[:], deg_unk[:] = snap[0], snap[1], snap[2]
        other_end[:] = snap[3]
        in_count = snap[4]

    def branch_edge() -> int | None:
        for v in g.vertices:
            if deg_unk[v] > 0:
                for f in edges_at[v]:
                    if state[f] == _UNKNOWN:
                        return f
        return None

    def search() -> bool:
        if in_count == n:
            return True
        eid = branch_edge()
        if eid is None:
            return False
        for val in (_IN, _OUT):
            tracker.charge()
            snap = snapshot()
            if propagate([(eid, val)]):
                if search():
                    return True
            restore(snap)
        return False

    if not search():
        raise ExhaustedError(
            "no Hamiltonian cycle found by exhaustive search "
            "(input cannot be a fullerene graph)"
        )

    cycle = [1]
    partners = [
        (b if a == 1 else a)
        for f in edges_at[1]
        if state[f] == _IN
        for a, b in [edge_vs[f]]
    ]
    prev, cur = 1, min(partners)
    while cur != 1:
        cycle.append(cur)
        nxt = [
            (b if a == cur else a)
            for f in edges_at[cur]
            if state[f] == _IN
            for a, b in [edge_vs[f]]
        ]
        step = nxt[0] if nxt[0] != prev else nxt[1]
        prev, cur = cur, step
    result = tuple(cycle)
    verifiers.verify_hamiltonian_cycle(g, result)
    return result


# ---------------------------------------------------------------------------
# Path packings from a cycle
# ---------------------------------------------------------------------------


def split_cycle_into_paths(cycle: Sequence[int], k: int) -> PathPacking:
    """Cut a cycle into consecutive blocks of k vertices.

    The traversal starts at the cycle's lowest-numbered vertex and runs
    toward its smaller neighbor on the cycle, so the decomposition depends
    only on the cycle as a subgraph, not on how the sequence was handed in.
    """
    m = len(cycle)
    if k < 1:
        raise ValueError("path order k must be positive")
    if m % k != 0:
        raise NotDivisibleError(f"path order {k} does not divide cycle length {m}")
    seq = list(cycle)
    start = seq.index(min(seq))
    before = seq[start - 1]
    after = seq[(start + 1) % m]
    if before < after:
        seq = [seq[start]] + seq[:start][::-1] + seq[start + 1 :][::-1]
    else:
        seq = seq[start:] + seq[:start]
    paths = tuple(tuple(seq[i : i + k]) for i in range(0, m, k))
    return PathPacking(k=k, paths=paths)
