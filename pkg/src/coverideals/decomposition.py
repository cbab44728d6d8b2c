"""Irredundant irreducible decompositions of monomial ideals.

An irreducible component is an exponent tuple c with at least one positive
entry, standing for the ideal generated by the pure powers v_i^{c_i} over
the support of c. Decomposition proceeds by recursive generator splitting:
an ideal whose minimal generators are all pure powers is itself irreducible;
otherwise some generator m factors into a pure power p and a coprime rest q,
and the ideal equals (I + (p)) intersect (I + (q)). Visited ideals are
memoized on their canonical generator matrix.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .ideals import MonomialIdeal

IrreducibleComponent = tuple  # exponent tuple, zeros meaning "variable absent"


def component_contains_monomial(c: Sequence[int], m: Sequence[int]) -> bool:
    """Whether the monomial with exponents m lies in the component's ideal."""
    if len(c) != len(m):
        raise ValueError("component and monomial lengths differ")
    return any(ci > 0 and mi >= ci for ci, mi in zip(c, m))


def component_subset(c1: Sequence[int], c2: Sequence[int]) -> bool:
    """Whether the ideal of c1 is contained in the ideal of c2."""
    if len(c1) != len(c2):
        raise ValueError("component lengths differ")
    return all(b > 0 and a >= b for a, b in zip(c1, c2) if a > 0)


def component_ideal(ambient, c: Sequence[int]) -> MonomialIdeal:
    """The component as a pure-power MonomialIdeal."""
    c = np.asarray(c, dtype=np.int64)
    if (c < 0).any():
        raise ValueError("component exponents must be nonnegative")
    supp = np.flatnonzero(c)
    rows = np.zeros((len(supp), len(c)), dtype=np.int64)
    for r, i in enumerate(supp):
        rows[r, i] = c[i]
    return MonomialIdeal(ambient, rows)


def _digest(arr: np.ndarray) -> bytes:
    return hashlib.blake2b(arr.tobytes(), digest_size=16).digest()


def _insert_row(rows: np.ndarray, new: np.ndarray) -> np.ndarray:
    # binary insertion keeping lexicographic row order
    t = tuple(new)
    lo, hi = 0, rows.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        if tuple(rows[mid]) < t:
            lo = mid + 1
        else:
            hi = mid
    return np.concatenate([rows[:lo], new[None, :], rows[lo:]])


def _with_pure_power(gens: np.ndarray, j: int, a: int) -> np.ndarray:
    # I + (v_j^a): rows with exponent >= a at j are absorbed
    kept = gens[gens[:, j] < a]
    pure = np.zeros(gens.shape[1], dtype=np.int64)
    pure[j] = a
    return _insert_row(kept, pure)


def _with_zeroed(gens: np.ndarray, ridx: int, j: int) -> np.ndarray:
    # I + (m / v_j^{m_j}) for m = gens[ridx]: the quotient divides m and
    # possibly other rows, which it then absorbs
    rest = gens[ridx].copy()
    rest[j] = 0
    kept = gens[~(gens >= rest).all(axis=1)]
    return _insert_row(kept, rest)


def irreducible_components(
    ideal: MonomialIdeal, *, rng: np.random.Generator | None = None
) -> tuple[IrreducibleComponent, ...]:
    """A component set whose intersection equals the ideal (may be redundant).

    Deterministic by default: the split picks the lexicographically first
    generator with two or more positive coordinates and severs its first
    positive coordinate. Passing an ``rng`` randomizes both picks; the
    irredundant subset of the result is independent of those choices.
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal has no proper irreducible decomposition")
    if ideal.is_zero:
        raise ValueError("the zero ideal is not a monomial ideal intersection")
    components: set[tuple[int, ...]] = set()
    seen: set[bytes] = set()
    stack = [np.ascontiguousarray(ideal.exponents)]
    while stack:
        gens = stack.pop()
        key = _digest(gens)
        if key in seen:
            continue
        seen.add(key)
        support_sizes = np.count_nonzero(gens, axis=1)
        splittable = np.flatnonzero(support_sizes >= 2)
        if splittable.size == 0:
            # all pure powers: one component, each variable capped at its power
            components.add(tuple(int(e) for e in gens.max(axis=0)))
            continue
        if rng is None:
            ridx = int(splittable[0])
            j = int(np.argmax(gens[ridx] > 0))
        else:
            ridx = int(rng.choice(splittable))
            j = int(rng.choice(np.flatnonzero(gens[ridx] > 0)))
        stack.append(_with_pure_power(gens, j, int(gens[ridx, j])))
        stack.append(_with_zeroed(gens, ridx, j))
    return tuple(sorted(components))


def irredundant(
    components: Iterable[Sequence[int]],
) -> tuple[IrreducibleComponent, ...]:
    """Prune components whose ideal contains the intersection of the others.

    For intersections of irreducible monomial ideals this happens exactly
    when some other listed component's ideal sits inside the candidate's
    (drop a candidate whose witness monomial, one below the candidate on its
    support, already avoids another component). Dropping all such candidates
    at once leaves the unique irredundant decomposition of the intersection.
    """
    uniq = sorted({tuple(int(e) for e in c) for c in components})
    if not uniq:
        return ()
    arr = np.asarray(uniq, dtype=np.int64)
    if (arr < 0).any():
        raise ValueError("component exponents must be nonnegative")
    if not (arr > 0).any(axis=1).all():
        raise ValueError("components must have at least one positive exponent")
    if len(uniq) == 1:
        return (uniq[0],)
    mask = _kernels.component_minimal_mask(arr)
    return tuple(uniq[i] for i in np.flatnonzero(mask))


def associated_primes(ideal: MonomialIdeal) -> tuple[tuple[str, ...], ...]:
    """Supports of the irredundant irreducible components, as vertex names."""
    if ideal.is_unit or ideal.is_zero:
        raise ValueError("associated primes require a proper nonzero ideal")
    names = ideal.ambient.vertices
    supports = {
        tuple(i for i, e in enumerate(c) if e > 0)
        for c in irredundant(irreducible_components(ideal))
    }
    return tuple(tuple(names[i] for i in s) for s in sorted(supports))
