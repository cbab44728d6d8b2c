"""Monomial ideals as canonical minimal generator matrices.

A monomial is an exponent row indexed by the ambient graph's vertex order.
An ideal stores its minimal generating set as a read-only int64 matrix with
rows sorted lexicographically, so equality is matrix equality. The empty
matrix is the zero ideal; the single all-zero row is the unit ideal.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .graphs import Graph

# cap on rows materialized per broadcast block in pairwise expansions
_EXPAND_BLOCK = 1 << 20


def _as_vector(g: Graph, vector: Sequence[int]) -> np.ndarray:
    arr = np.asarray(vector, dtype=np.int64)
    if arr.ndim != 1 or arr.shape[0] != g.n_vertices:
        raise ValueError(
            f"degree vector must have length {g.n_vertices}, got shape {arr.shape}"
        )
    if (arr < 0).any():
        raise ValueError("degree vectors must be nonnegative")
    return arr


def _canonicalize(arr: np.ndarray) -> np.ndarray:
    if arr.shape[0] > 0:
        arr = np.unique(arr, axis=0)  # lex-sorted, duplicate-free
    if arr.shape[0] > 1:
        arr = arr[_kernels.minimal_mask(arr)]
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class MonomialIdeal:
    """Finitely generated monomial ideal over a graph's vertex order."""

    __slots__ = ("ambient", "_gens", "_hash")

    def __init__(self, ambient: Graph, generators: Iterable[Sequence[int]] = (), *, _canonical=None):
        self.ambient = ambient
        m = ambient.n_vertices
        if _canonical is not None:
            arr = _canonical
        else:
            rows = [_as_vector(ambient, v) for v in generators]
            arr = np.array(rows, dtype=np.int64).reshape(len(rows), m)
            arr = _canonicalize(arr)
        self._gens = arr
        self._hash = hash((ambient, arr.tobytes()))

    @property
    def exponents(self) -> np.ndarray:
        """Read-only (g, m) matrix of minimal generator exponents."""
        return self._gens

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(e) for e in row) for row in self._gens)

    @property
    def n_generators(self) -> int:
        return self._gens.shape[0]

    @property
    def is_zero(self) -> bool:
        return self._gens.shape[0] == 0

    @property
    def is_unit(self) -> bool:
        return self._gens.shape[0] == 1 and not self._gens.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self._gens.shape == other._gens.shape
            and bool((self._gens == other._gens).all())
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        tag = " (unit)" if self.is_unit else " (zero)" if self.is_zero else ""
        return f"MonomialIdeal({self.n_generators} generators{tag})"


def zero_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(g, ())


def unit_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(g, (np.zeros(g.n_vertices, dtype=np.int64),))


def minimalize(g: Graph, vectors: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Ideal generated by the vectors; drops every vector divisible by another."""
    return MonomialIdeal(g, vectors)


def _check_ambient(i: MonomialIdeal, j: MonomialIdeal) -> None:
    if i.ambient != j.ambient:
        raise ValueError("ideals live over different ambient graphs")


def _expand(a: np.ndarray, b: np.ndarray, op) -> np.ndarray:
    """Unique rows of op(row_of_a, row_of_b) over all pairs, chunked."""
    p, m = a.shape
    q = b.shape[0]
    if p * q <= _EXPAND_BLOCK:
        return np.unique(op(a[:, None, :], b[None, :, :]).reshape(p * q, m), axis=0)
    step = max(1, _EXPAND_BLOCK // max(q, 1))
    parts = [
        np.unique(op(a[s : s + step, None, :], b[None, :, :]).reshape(-1, m), axis=0)
        for s in range(0, p, step)
    ]
    return np.unique(np.concatenate(parts), axis=0)


def multiply(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """Product ideal: minimalized pairwise exponent sums."""
    _check_ambient(i, j)
    if i.is_zero or j.is_zero:
        return zero_ideal(i.ambient)
    rows = _expand(i.exponents, j.exponents, np.add)
    return MonomialIdeal(i.ambient, _canonical=_canonicalize(rows))


def power(i: MonomialIdeal, n: int) -> MonomialIdeal:
    """n-th power by iterated multiplication, minimalizing at every step."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"power exponent must be a positive integer, got {n!r}")
    out = i
    for _ in range(n - 1):
        out = multiply(out, i)
    return out


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """Intersection: minimalized pairwise componentwise maxima (lcm)."""
    _check_ambient(i, j)
    if i.is_zero or j.is_zero:
        return zero_ideal(i.ambient)
    rows = _expand(i.exponents, j.exponents, np.maximum)
    return MonomialIdeal(i.ambient, _canonical=_canonicalize(rows))


def intersect_all(ideals: Iterable[MonomialIdeal], *, ambient: Graph | None = None) -> MonomialIdeal:
    """Balanced fold of intersections; the unit ideal for an empty family."""
    items = list(ideals)
    if not items:
        if ambient is None:
            raise ValueError("ambient graph required to intersect an empty family")
        return unit_ideal(ambient)
    while len(items) > 1:
        nxt = [
            intersect(items[k], items[k + 1]) if k + 1 < len(items) else items[k]
            for k in range(0, len(items), 2)
        ]
        items = nxt
    return items[0]


def contains(i: MonomialIdeal, vector: Sequence[int]) -> bool:
    """Membership of the monomial with the given exponents."""
    v = _as_vector(i.ambient, vector)
    if i.is_zero:
        return False
    return bool(_kernels.divides_mask(i.exponents, v[None, :])[0])


def _indicator_rows(g: Graph, subsets: Iterable[Iterable[str]]) -> np.ndarray:
    rows = np.zeros((len(list_ := list(subsets)), g.n_vertices), dtype=np.int64)
    for r, sub in enumerate(list_):
        for v in sub:
            rows[r, g.index(v)] = 1
    return rows


def edge_ideal(g: Graph) -> MonomialIdeal:
    """One squarefree degree-2 generator per edge."""
    return MonomialIdeal(g, _indicator_rows(g, g.edges))


def cover_ideal(g: Graph, max_vertices: int | None = None) -> MonomialIdeal:
    """Cover ideal, computed two ways and cross-checked.

    Route one intersects the two-variable ideals (v_i, v_j) over all edges;
    route two takes the indicator vectors of the inclusion-minimal vertex
    covers. The routes must agree. An edgeless graph yields the unit ideal
    (covered by the empty set); callers can detect that via ``is_unit``.
    """
    from .graphs import enumerate_minimal_vertex_covers

    m = g.n_vertices
    edge_factors = []
    for u, v in g.edges:
        rows = np.zeros((2, m), dtype=np.int64)
        rows[0, g.index(u)] = 1
        rows[1, g.index(v)] = 1
        edge_factors.append(MonomialIdeal(g, rows))
    by_edges = intersect_all(edge_factors, ambient=g)
    covers = enumerate_minimal_vertex_covers(g, max_vertices)
    by_covers = MonomialIdeal(g, _indicator_rows(g, covers))
    if by_edges != by_covers:
        raise RuntimeError(
            "internal error: edge-intersection and cover-enumeration routes disagree"
        )
    return by_edges
