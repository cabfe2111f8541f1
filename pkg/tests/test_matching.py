"""Perfect matchings and pseudo matchings."""

from __future__ import annotations

import pytest

from starpack import (
    ArithmeticInfeasibleError,
    ExhaustedError,
    SearchBudget,
    BudgetExceededError,
    find_perfect_matching,
    find_pseudo_matching,
)
from starpack.verifiers import verify_matching, verify_pseudo_matching


def test_perfect_matching_sizes(c20, c80, f180, f140):
    for g, size in ((c20, 10), (c80, 40), (f180, 90), (f140, 70)):
        matching = find_perfect_matching(g)
        assert len(matching) == size
        verify_matching(g, matching)


def test_perfect_matching_is_deterministic(c80):
    assert find_perfect_matching(c80) == find_perfect_matching(c80)


def test_matching_works_on_every_small_data_graph(c24, c60, cube, tetrahedron):
    for g in (c24, c60, cube, tetrahedron):
        matching = find_perfect_matching(g)
        assert len(matching) == g.vertex_count // 2
        verify_matching(g, matching)


def test_pseudo_matching_zero_stars_reduces_to_matching(c20):
    pm = find_pseudo_matching(c20, 0)
    assert pm.stars == ()
    assert pm.pairs == find_perfect_matching(c20)


def test_pseudo_matching_two_stars_on_star_output(f180):
    pm = find_pseudo_matching(f180, 2)
    assert len(pm.stars) == 2
    assert len(pm.pairs) == 86
    verify_pseudo_matching(f180, pm, expected_star_count=2)


def test_pseudo_matching_five_stars_on_c20_is_exhausted(c20):
    # a 5-star pseudo matching on 20 vertices is a perfect star packing,
    # which cannot exist since 20 is not divisible by 8
    with pytest.raises(ExhaustedError):
        find_pseudo_matching(c20, 5)


def test_pseudo_matching_arithmetic_reject(c20):
    with pytest.raises(ArithmeticInfeasibleError):
        find_pseudo_matching(c20, 6)
    with pytest.raises(ValueError):
        find_pseudo_matching(c20, -1)


def test_pseudo_matching_budget(f180):
    with pytest.raises(BudgetExceededError):
        find_pseudo_matching(f180, 2, budget=SearchBudget(node_limit=1))


def test_pseudo_matching_deterministic(f180):
    first = find_pseudo_matching(f180, 2)
    second = find_pseudo_matching(f180, 2)
    assert first == second


def _brute_force_max_matching_size(n, adj):
    """Exponential oracle: maximum matching size by edge recursion."""
    edges = sorted(
        {(u, v) for u in range(1, n + 1) for v in adj[u] if u < v}
    )

    def best(idx, used):
        if idx == len(edges):
            return 0
        u, v = edges[idx]
        score = best(idx + 1, used)
        if u not in used and v not in used:
            score = max(score, 1 + best(idx + 1, used | {u, v}))
        return score

    return best(0, frozenset())


def test_blossom_agrees_with_brute_force_on_induced_subgraphs(c20):
    """The searches treat a non-perfect maximum matching as a proof, so the
    solver must be maximum, not merely maximal; check against an
    exponential oracle on assorted induced subgraphs."""
    from starpack.matching import _maximum_matching

    subsets = [
        list(range(1, 11)),
        list(range(1, 13)),
        [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 16, 17, 18, 19, 20],
        [2, 4, 6, 8, 10, 12, 14, 16, 18, 20],
        list(range(5, 18)),
    ]
    for keep in subsets:
        index = {v: i + 1 for i, v in enumerate(keep)}
        m = len(keep)
        adj = [[] for _ in range(m + 1)]
        for v in keep:
            for w in c20.neighbors(v):
                if w in index:
                    adj[index[v]].append(index[w])
        match = _maximum_matching(m, adj)
        size = sum(1 for i in range(1, m + 1) if match[i]) // 2
        assert size == _brute_force_max_matching_size(m, adj)


def test_blossom_handles_odd_cycles():
    """Petersen-style traps: odd cycle with a pendant structure."""
    from starpack.matching import _maximum_matching

    # 5-cycle plus chords that force blossom contraction
    adj = [[], [2, 5, 6], [1, 3], [2, 4], [3, 5], [4, 1], [1]]
    match = _maximum_matching(6, adj)
    size = sum(1 for i in range(1, 7) if match[i]) // 2
    assert size == 3
