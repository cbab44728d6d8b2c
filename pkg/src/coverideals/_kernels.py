"""Hot exponent-vector loops with selectable backends.

Nearly all runtime goes into three row-filtering loops over integer exponent
matrices: minimalizing generating sets (drop rows divisible by another row),
batch divisibility tests (monomial membership), and pruning irreducible
components by ideal containment. Each loop has a numba-compiled kernel,
used by default when numba imports, and a chunked pure-numpy fallback.

Select with the COVERIDEALS_BACKEND environment variable (``numba`` or
``numpy``) or programmatically via :func:`use_backend`.
"""

from __future__ import annotations

import os

import numpy as np

ENV_BACKEND = "COVERIDEALS_BACKEND"

# candidate-chunk length used by the numpy fallbacks to bound broadcast memory
_CHUNK = 256

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    _HAVE_NUMBA = False


def _normalize(name: str) -> str:
    name = name.strip().lower()
    if name in ("", "auto"):
        return "numba" if _HAVE_NUMBA else "numpy"
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'numpy'")
    if name == "numba" and not _HAVE_NUMBA:
        raise RuntimeError("COVERIDEALS_BACKEND=numba but numba is not importable")
    return name


_ACTIVE = _normalize(os.environ.get(ENV_BACKEND, "auto"))


def active_backend() -> str:
    return _ACTIVE


def use_backend(name: str) -> str:
    """Switch the kernel backend ('numba', 'numpy' or 'auto'); returns the active name."""
    global _ACTIVE
    _ACTIVE = _normalize(name)
    return _ACTIVE


if _HAVE_NUMBA:

    @njit(cache=True)
    def _minimal_mask_nb(rows, degs):  # pragma: no cover - compiled
        n, m = rows.shape
        keep = np.ones(n, np.bool_)
        for i in range(n):
            for j in range(i):
                # rows are unique and degree-sorted: a proper divisor has
                # strictly smaller total degree and must itself be kept
                if keep[j] and degs[j] < degs[i]:
                    divides = True
                    for k in range(m):
                        if rows[j, k] > rows[i, k]:
                            divides = False
                            break
                    if divides:
                        keep[i] = False
                        break
        return keep

    @njit(cache=True)
    def _divides_mask_nb(gens, queries):  # pragma: no cover - compiled
        nq = queries.shape[0]
        ng, m = gens.shape
        out = np.zeros(nq, np.bool_)
        for q in range(nq):
            for g in range(ng):
                ok = True
                for k in range(m):
                    if gens[g, k] > queries[q, k]:
                        ok = False
                        break
                if ok:
                    out[q] = True
                    break
        return out

    @njit(cache=True)
    def _component_minimal_mask_nb(comps):  # pragma: no cover - compiled
        n, m = comps.shape
        keep = np.ones(n, np.bool_)
        for i in range(n):
            for j in range(n):
                if j == i:
                    continue
                # does the ideal of row j contain... row j's ideal sits inside
                # row i's ideal when supp(j) <= supp(i) and j >= i there
                contained = True
                for k in range(m):
                    cj = comps[j, k]
                    if cj > 0:
                        ci = comps[i, k]
                        if ci == 0 or cj < ci:
                            contained = False
                            break
                if contained:
                    keep[i] = False
                    break
        return keep


def _minimal_mask_np(rows, degs):
    n = rows.shape[0]
    keep = np.ones(n, dtype=bool)
    starts = np.flatnonzero(np.r_[True, degs[1:] != degs[:-1]])
    ends = np.r_[starts[1:], n]
    kept: np.ndarray | None = None
    for s, e in zip(starts, ends):
        if kept is not None and len(kept):
            for cs in range(s, e, _CHUNK):
                ce = min(cs + _CHUNK, e)
                chunk = rows[cs:ce]
                dominated = (kept[None, :, :] <= chunk[:, None, :]).all(2).any(1)
                keep[cs:ce] = ~dominated
        block = rows[s:e][keep[s:e]]
        kept = block if kept is None else np.concatenate([kept, block])
    return keep


def _divides_mask_np(gens, queries):
    nq = queries.shape[0]
    out = np.empty(nq, dtype=bool)
    for cs in range(0, nq, _CHUNK):
        ce = min(cs + _CHUNK, nq)
        chunk = queries[cs:ce]
        out[cs:ce] = (gens[None, :, :] <= chunk[:, None, :]).all(2).any(1)
    return out


def _component_minimal_mask_np(comps):
    n = comps.shape[0]
    keep = np.empty(n, dtype=bool)
    pos = comps > 0
    for cs in range(0, n, _CHUNK):
        ce = min(cs + _CHUNK, n)
        ci = comps[cs:ce][:, None, :]  # candidates i
        pi = pos[cs:ce][:, None, :]
        # contained[i, j]: ideal of row j inside ideal of row i
        contained = (~pos[None, :, :] | (pi & (comps[None, :, :] >= ci))).all(2)
        idx = np.arange(cs, ce)
        contained[idx - cs, idx] = False
        keep[cs:ce] = ~contained.any(1)
    return keep


def minimal_mask(rows: np.ndarray) -> np.ndarray:
    """Boolean mask of rows not divisible by any other row.

    ``rows`` must be unique; componentwise <= is the divisibility order.
    """
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    n = rows.shape[0]
    if n <= 1:
        return np.ones(n, dtype=bool)
    degs = rows.sum(axis=1)
    order = np.argsort(degs, kind="stable")
    sorted_rows = np.ascontiguousarray(rows[order])
    sorted_degs = degs[order]
    if _ACTIVE == "numba":
        mask = _minimal_mask_nb(sorted_rows, sorted_degs)
    else:
        mask = _minimal_mask_np(sorted_rows, sorted_degs)
    out = np.empty(n, dtype=bool)
    out[order] = mask
    return out


def divides_mask(gens: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """For each query row, whether some generator row divides it."""
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    queries = np.ascontiguousarray(queries, dtype=np.int64)
    if len(queries) == 0:
        return np.zeros(0, dtype=bool)
    if len(gens) == 0:
        return np.zeros(len(queries), dtype=bool)
    # low-degree generators divide most queries; try them first
    gens = np.ascontiguousarray(gens[np.argsort(gens.sum(axis=1), kind="stable")])
    if _ACTIVE == "numba":
        return _divides_mask_nb(gens, queries)
    return _divides_mask_np(gens, queries)


def component_minimal_mask(comps: np.ndarray) -> np.ndarray:
    """Mask of components whose ideal contains no other listed component's ideal.

    Rows must be unique, each with at least one positive entry. Row j's ideal
    is contained in row i's exactly when supp(j) is inside supp(i) with
    entries of j at least those of i there; such an i is redundant in any
    intersection that also lists j.
    """
    comps = np.ascontiguousarray(comps, dtype=np.int64)
    n = comps.shape[0]
    if n <= 1:
        return np.ones(n, dtype=bool)
    if _ACTIVE == "numba":
        return _component_minimal_mask_nb(comps)
    return _component_minimal_mask_np(comps)
