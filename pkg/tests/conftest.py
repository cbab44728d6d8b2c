"""Shared fixtures and independent brute-force oracles for the test suite."""

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from coverideals import Graph, build_ht, build_odd_cycle, use_backend


@pytest.fixture(params=["numba", "numpy"])
def backend(request):
    """Run a test under both kernel backends."""
    previous = use_backend(request.param)
    yield request.param
    use_backend("auto")


@pytest.fixture
def h1():
    return build_ht(1)


@pytest.fixture
def h2():
    return build_ht(2)


@pytest.fixture
def c5():
    return build_odd_cycle(5)


@pytest.fixture
def k2():
    return Graph(["a", "b"], ["x", "x"], [("a", "b")])


# ---------------------------------------------------------------------------
# independent oracles (exhaustive subset searches, no shared code paths)


def oracle_vertex_covers(g: Graph) -> set[frozenset[str]]:
    """All vertex covers by checking every subset."""
    out = set()
    for size in range(g.n_vertices + 1):
        for combo in combinations(g.vertices, size):
            s = set(combo)
            if all(u in s or v in s for u, v in g.edges):
                out.add(frozenset(s))
    return out


def oracle_minimal_vertex_covers(g: Graph) -> set[frozenset[str]]:
    covers = oracle_vertex_covers(g)
    return {c for c in covers if not any(d < c for d in covers)}


def oracle_minimum_cover_size(g: Graph) -> int:
    return min(len(c) for c in oracle_vertex_covers(g))


def oracle_induced_odd_cycles(g: Graph) -> set[frozenset[str]]:
    """Subsets inducing a connected 2-regular odd subgraph with |E| = |V|."""
    out = set()
    for size in range(3, g.n_vertices + 1, 2):
        for combo in combinations(g.vertices, size):
            s = set(combo)
            inside = [(u, v) for u, v in g.edges if u in s and v in s]
            if len(inside) != size:
                continue
            deg = {v: 0 for v in s}
            for u, v in inside:
                deg[u] += 1
                deg[v] += 1
            if any(d != 2 for d in deg.values()):
                continue
            seen = {combo[0]}
            frontier = [combo[0]]
            while frontier:
                x = frontier.pop()
                for u, v in inside:
                    for a, b in ((u, v), (v, u)):
                        if a == x and b not in seen:
                            seen.add(b)
                            frontier.append(b)
            if len(seen) == size:
                out.add(frozenset(s))
    return out


def oracle_minimalize(rows: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """Reference minimalization by direct pairwise divisibility."""
    uniq = set(rows)
    return {
        r
        for r in uniq
        if not any(s != r and all(a <= b for a, b in zip(s, r)) for s in uniq)
    }


def random_proper_ideal(rng: np.random.Generator, n_vars: int, max_exp: int, n_gens: int):
    """Random generator matrix with no all-zero row (proper, nonzero ideal)."""
    rows = rng.integers(0, max_exp + 1, size=(n_gens, n_vars))
    for row in rows:
        if not row.any():
            row[rng.integers(0, n_vars)] = rng.integers(1, max_exp + 1)
    return rows
