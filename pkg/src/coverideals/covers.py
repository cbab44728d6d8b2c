"""The k-cover calculus: cover checks, one-cover decompositions, and the
admissible degree vectors attached to induced odd cycles and clusters.

A degree vector is a k-cover when every edge sees coordinate sum at least k.
A vector lies in the n-th power of the cover ideal exactly when it is the
sum of n one-covers; :func:`decompose_into_one_covers` performs that search
completely, so an empty answer certifies non-membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

import numpy as np

from .errors import CapacityError
from .graphs import (
    ClusterDescriptor,
    Graph,
    induced_subgraph,
    is_induced_odd_cycle,
    minimum_vertex_covers,
    neighbors,
    validate_cluster,
    vertex_tuple,
)

_DEFAULT_SEARCH_NODES = 20_000_000


@dataclass(frozen=True)
class CoverCertificate:
    """n one-covers summing to a target vector, canonically ordered."""

    summands: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.summands)

    @property
    def total(self) -> tuple[int, ...]:
        return tuple(int(s) for s in np.asarray(self.summands).sum(axis=0))


@dataclass(frozen=True)
class AdmissibleVector:
    """A degree vector on a cycle or cluster together with one witness.

    For a cycle the witness lists the minimum one-covers added to the
    all-twos base; for a cluster it is the (base, spread, repeats...) split:
    the 2/3-valued base, the core minimum one-cover, and the per-step
    cover vectors.
    """

    target: tuple[str, ...] | ClusterDescriptor
    n: int
    vector: tuple[int, ...]
    witness: tuple[tuple[int, ...], ...]


def _vector(g: Graph, a: Sequence[int]) -> np.ndarray:
    arr = np.asarray(a, dtype=np.int64)
    if arr.ndim != 1 or arr.shape[0] != g.n_vertices:
        raise ValueError(f"degree vector must have length {g.n_vertices}")
    if (arr < 0).any():
        raise ValueError("degree vectors must be nonnegative")
    return arr


def is_k_cover(g: Graph, a: Sequence[int], k: int) -> bool:
    """Whether every edge satisfies a_i + a_j >= k; the zero vector is rejected."""
    arr = _vector(g, a)
    if not arr.any():
        raise ValueError("k-covers are defined for nonzero degree vectors only")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"cover order must be a positive integer, got {k!r}")
    return all(arr[i] + arr[j] >= k for i, j in g.edge_index_pairs())


def minimum_one_covers(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Indicator vectors of all minimum vertex covers, in g's vertex order.

    Degenerate case: a graph without edges is covered by the empty set, so
    the single all-zero vector is returned (the nonzero requirement on
    one-covers is scoped to graphs that have edges).
    """
    out = []
    for cover in minimum_vertex_covers(g):
        row = [0] * g.n_vertices
        for v in cover:
            row[g.index(v)] = 1
        out.append(tuple(row))
    return tuple(sorted(out))


def decompose_into_one_covers(
    g: Graph, a: Sequence[int], n: int, *, max_nodes: int = _DEFAULT_SEARCH_NODES
) -> CoverCertificate | None:
    """Write a as a sum of n one-covers of g, or prove it impossible.

    Complete backtracking over the n-by-m summand matrix, one vertex column
    at a time: column sums must hit a exactly, every edge must reach sum 1
    in every row, rows with equal prefixes are kept in nonincreasing order,
    and a per-column demand bound prunes infeasible branches early. Returns
    the first certificate found (deterministic) or None when the exhaustive
    search ends empty.
    """
    arr = _vector(g, a)
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"summand count must be a positive integer, got {n!r}")
    m = g.n_vertices
    pairs = g.edge_index_pairs()
    # necessary: the restriction to every edge is an n-cover, and n nonzero rows fit
    if any(arr[i] + arr[j] < n for i, j in pairs):
        return None
    if arr.sum() < n:
        return None

    back: list[list[int]] = [[] for _ in range(m)]  # earlier adjacent columns
    for i, j in pairs:
        back[j].append(i)
    suffix = np.zeros(m + 1, dtype=np.int64)
    suffix[:m] = np.cumsum(arr[::-1])[::-1]

    rows = np.zeros((n, m), dtype=np.int64)
    row_sums = np.zeros(n, dtype=np.int64)
    nodes = 0

    def feasible_after(v: int) -> bool:
        # rows still all-zero must each pick up 1 somewhere later
        if int((row_sums == 0).sum()) > suffix[v + 1]:
            return False
        # edge constraints already force lower bounds on later columns
        for w in range(v + 1, m):
            assigned = [u for u in back[w] if u <= v]
            if not assigned:
                continue
            demand = sum(1 for r in range(n) if any(rows[r, u] == 0 for u in assigned))
            if demand > arr[w]:
                return False
        return True

    def column(v: int) -> bool:
        nonlocal nodes
        if v == m:
            return bool((row_sums > 0).all())
        nodes += 1
        if nodes > max_nodes:
            raise CapacityError("one-cover decomposition search exceeded its node budget")
        need = [1 if any(rows[i, u] == 0 for u in back[v]) else 0 for i in range(n)]
        if sum(need) > arr[v]:
            return False

        def fill(i: int, remaining: int) -> bool:
            if i == n:
                return remaining == 0 and feasible_after(v) and column(v + 1)
            hi = remaining - sum(need[i + 1 :])
            if i > 0 and (rows[i - 1, :v] == rows[i, :v]).all():
                hi = min(hi, int(rows[i - 1, v]))  # tied rows stay sorted
            for val in range(hi, need[i] - 1, -1):
                rows[i, v] = val
                row_sums[i] += val
                if fill(i + 1, remaining - val):
                    return True
                row_sums[i] -= val
                rows[i, v] = 0
            return False

        return fill(0, int(arr[v]))

    if m > 0 and column(0):
        summands = sorted((tuple(int(e) for e in r) for r in rows), reverse=True)
        return CoverCertificate(summands=tuple(summands))
    return None


def enumerate_cycle_admissible(
    cycle: Sequence[str], g: Graph, n: int
) -> tuple[AdmissibleVector, ...]:
    """Degree vectors on an induced odd cycle: all-twos plus n-2 minimum
    one-covers of the cycle, for n > 2. Distinct vectors, one witness each."""
    if not isinstance(n, int) or n <= 2:
        raise ValueError(f"admissible vectors are defined for n > 2, got {n!r}")
    cyc = vertex_tuple(g, cycle)
    if not is_induced_odd_cycle(g, cyc):
        raise ValueError("target is not an induced odd cycle")
    sub = induced_subgraph(g, cyc)
    covers = minimum_one_covers(sub)
    base = np.full(len(cyc), 2, dtype=np.int64)
    found: dict[tuple[int, ...], tuple] = {}
    for combo in combinations_with_replacement(covers, n - 2):
        vec = base + (np.asarray(combo, dtype=np.int64).sum(axis=0) if combo else 0)
        key = tuple(int(e) for e in vec)
        if key not in found:
            found[key] = combo
    return tuple(
        AdmissibleVector(target=cyc, n=n, vector=vec, witness=found[vec])
        for vec in sorted(found)
    )


def _embed(positions: dict[str, int], size: int, sub: Graph, row: Sequence[int]) -> np.ndarray:
    out = np.zeros(size, dtype=np.int64)
    for v, e in zip(sub.vertices, row):
        out[positions[v]] = e
    return out


def _block_cover_choices(
    g: Graph, positions: dict[str, int], size: int, blocks: list[tuple[str, ...]]
) -> tuple[tuple[int, ...], ...]:
    """Vectors whose restriction to every block is a minimum one-cover of the
    block's induced subgraph; overlapping blocks must agree pointwise."""
    per_block = []
    for block in blocks:
        sub = induced_subgraph(g, block)
        per_block.append([_embed(positions, size, sub, c) for c in minimum_one_covers(sub)])
    out: set[tuple[int, ...]] = set()

    def assign(b: int, acc: np.ndarray, owned: np.ndarray) -> None:
        if b == len(per_block):
            out.add(tuple(int(e) for e in acc))
            return
        block_idx = np.array([positions[v] for v in blocks[b]], dtype=np.intp)
        for choice in per_block[b]:
            overlap = owned[block_idx]
            if (acc[block_idx[overlap]] != choice[block_idx[overlap]]).any():
                continue
            nxt = acc.copy()
            nxt[block_idx] = choice[block_idx]
            nowned = owned.copy()
            nowned[block_idx] = True
            assign(b + 1, nxt, nowned)

    assign(0, np.zeros(size, dtype=np.int64), np.zeros(size, dtype=bool))
    return tuple(sorted(out))


def enumerate_cluster_admissible(
    cluster: ClusterDescriptor, g: Graph, n: int
) -> tuple[AdmissibleVector, ...]:
    """Degree vectors on a cluster for n > 2, built from a 2/3-valued base
    plus a core spread plus n-3 per-step cover vectors.

    With core = cycle minus the y-neighborhood: the base is 2 on the core
    and 3 elsewhere; the spread vanishes off the core and restricts to a
    minimum one-cover of the core's induced subgraph; each of the n-3 step
    vectors restricts to a minimum one-cover of the core and of every
    hub block {y} + N(y). An empty core contributes nothing.
    """
    if not isinstance(n, int) or n <= 2:
        raise ValueError(f"admissible vectors are defined for n > 2, got {n!r}")
    validate_cluster(g, cluster)
    verts = vertex_tuple(g, cluster.cycle + cluster.ys)
    positions = {v: i for i, v in enumerate(verts)}
    size = len(verts)
    ys = vertex_tuple(g, cluster.ys)
    hood = set(neighbors(g, ys))
    core = tuple(v for v in vertex_tuple(g, cluster.cycle) if v not in hood)

    base = np.array([2 if v in core else 3 for v in verts], dtype=np.int64)
    core_sub = induced_subgraph(g, core)
    spreads = [_embed(positions, size, core_sub, c) for c in minimum_one_covers(core_sub)]
    blocks = [core] + [vertex_tuple(g, (y,) + g.adjacent(y)) for y in ys]
    steps = _block_cover_choices(g, positions, size, blocks)

    found: dict[tuple[int, ...], tuple] = {}
    for spread in spreads:
        for combo in combinations_with_replacement(steps, n - 3):
            vec = base + spread
            if combo:
                vec = vec + np.asarray(combo, dtype=np.int64).sum(axis=0)
            key = tuple(int(e) for e in vec)
            if key not in found:
                found[key] = (
                    tuple(int(e) for e in base),
                    tuple(int(e) for e in spread),
                ) + combo
    return tuple(
        AdmissibleVector(target=cluster, n=n, vector=vec, witness=found[vec])
        for vec in sorted(found)
    )


def check_degree_sum_bound(
    cluster: ClusterDescriptor, admissible: AdmissibleVector, n: int
) -> bool:
    """Strict bound sum(c) < r + k + n((k+1)/2 + r) for a cluster vector.

    Defined only for n > r + 1; violating that is a contract error, not a
    falsity.
    """
    r = cluster.r
    k = len(cluster.cycle)
    if not isinstance(n, int) or n <= r + 1:
        raise ValueError(f"degree-sum bound requires n > r + 1 (r={r}, n={n!r})")
    total = sum(admissible.vector)
    return total < r + k + n * ((k + 1) // 2 + r)
