"""Finite simple graphs with x/y-tagged vertices, plus the enumeration layer.

Vertices carry a kind tag: ``x`` for cycle-style vertices, ``y`` for the
designated hub vertices that cluster enumeration treats specially. The
vertex order fixed at construction defines the indexing of every degree
vector and ideal built downstream.

The ``ht`` family: an odd cycle on x_1..x_{4t-1} (a 5-cycle for t=1) with t
hub vertices, y_1 adjacent to {x_1,x_2,x_3} and y_i (i>1) adjacent to
{x_{4i-4},...,x_{4i-1}}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import ensure_vertex_capacity

VERTEX_KINDS = ("x", "y")


class Graph:
    """Immutable simple graph over named, kind-tagged, ordered vertices."""

    __slots__ = ("vertices", "kinds", "edges", "family", "_index", "_adj", "_hash")

    def __init__(
        self,
        vertices: Iterable[str],
        kinds: Iterable[str],
        edges: Iterable[tuple[str, str]],
        family: tuple | None = None,
    ):
        self.vertices = tuple(str(v) for v in vertices)
        self.kinds = tuple(kinds)
        if len(self.kinds) != len(self.vertices):
            raise ValueError("one kind tag per vertex required")
        for k in self.kinds:
            if k not in VERTEX_KINDS:
                raise ValueError(f"vertex kind must be one of {VERTEX_KINDS}, got {k!r}")
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        self._index = index

        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in index or v not in index:
                raise ValueError(f"edge ({u!r}, {v!r}) references an undeclared vertex")
            iu, iv = sorted((index[u], index[v]))
            seen.add((iu, iv))
        pairs = sorted(seen)
        self.edges = tuple((self.vertices[i], self.vertices[j]) for i, j in pairs)
        adj: list[set[int]] = [set() for _ in self.vertices]
        for i, j in pairs:
            adj[i].add(j)
            adj[j].add(i)
        self._adj = tuple(frozenset(s) for s in adj)
        self.family = family
        self._hash = hash((self.vertices, self.kinds, self.edges))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def kind(self, v: str) -> str:
        return self.kinds[self.index(v)]

    @property
    def x_vertices(self) -> tuple[str, ...]:
        return tuple(v for v, k in zip(self.vertices, self.kinds) if k == "x")

    @property
    def y_vertices(self) -> tuple[str, ...]:
        return tuple(v for v, k in zip(self.vertices, self.kinds) if k == "y")

    def has_edge(self, u: str, v: str) -> bool:
        return self.index(v) in self._adj[self.index(u)]

    def adjacent(self, v: str) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in sorted(self._adj[self.index(v)]))

    def adjacency_indices(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def edge_index_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((self._index[u], self._index[v]) for u, v in self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.kinds == other.kinds
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.n_vertices} vertices, {self.n_edges} edges)"


def vertex_tuple(g: Graph, subset: Iterable[str]) -> tuple[str, ...]:
    """Canonical form of a vertex subset: deduplicated, in graph order."""
    idx = sorted({g.index(v) for v in subset})
    return tuple(g.vertices[i] for i in idx)


def build_ht(t: int) -> Graph:
    """The t-th member of the ht family; rejects t < 1."""
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"family parameter must be a positive integer, got {t!r}")
    nx = 5 if t == 1 else 4 * t - 1
    xs = [f"x{i}" for i in range(1, nx + 1)]
    ys = [f"y{i}" for i in range(1, t + 1)]
    edges = [(xs[i], xs[(i + 1) % nx]) for i in range(nx)]
    edges += [("y1", "x1"), ("y1", "x2"), ("y1", "x3")]
    for i in range(2, t + 1):
        edges += [(f"y{i}", f"x{j}") for j in range(4 * i - 4, 4 * i)]
    return Graph(xs + ys, ["x"] * nx + ["y"] * t, edges, family=("ht", t))


def build_odd_cycle(k: int) -> Graph:
    """A single k-cycle on x-vertices; k must be odd and at least 3."""
    if not isinstance(k, int) or k < 3 or k % 2 == 0:
        raise ValueError(f"cycle length must be an odd integer >= 3, got {k!r}")
    xs = [f"x{i}" for i in range(1, k + 1)]
    edges = [(xs[i], xs[(i + 1) % k]) for i in range(k)]
    return Graph(xs, ["x"] * k, edges, family=("odd-cycle", k))


def induced_subgraph(g: Graph, subset: Iterable[str]) -> Graph:
    """Subgraph on the given vertices with edges of g lying inside; order inherited."""
    verts = vertex_tuple(g, subset)
    vset = set(verts)
    kinds = [g.kind(v) for v in verts]
    edges = [(u, v) for u, v in g.edges if u in vset and v in vset]
    return Graph(verts, kinds, edges)


def neighbors(g: Graph, subset: Iterable[str]) -> tuple[str, ...]:
    """Vertices outside the subset adjacent to at least one of its members."""
    idx = {g.index(v) for v in subset}
    adj = g.adjacency_indices()
    out = {j for i in idx for j in adj[i]} - idx
    return tuple(g.vertices[i] for i in sorted(out))


def _minimal_sets(masks: list[int]) -> list[int]:
    # keep inclusion-minimal bitmasks
    uniq = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def enumerate_minimal_vertex_covers(
    g: Graph, max_vertices: int | None = None
) -> tuple[tuple[str, ...], ...]:
    """All inclusion-minimal vertex covers, in canonical order.

    Branches on an uncovered edge (include one endpoint or the other), then
    filters the collected covers down to the inclusion-minimal ones.
    """
    ensure_vertex_capacity(g.n_vertices, max_vertices)
    pairs = g.edge_index_pairs()
    if not pairs:
        return ((),)
    adj = g.adjacency_indices()
    found: list[int] = []

    def walk(chosen: int) -> None:
        for i, j in pairs:
            if not (chosen >> i) & 1 and not (chosen >> j) & 1:
                walk(chosen | (1 << i))
                walk(chosen | (1 << j))
                return
        found.append(chosen)

    walk(0)
    covers = _minimal_sets(found)
    out = [
        tuple(g.vertices[i] for i in range(g.n_vertices) if (m >> i) & 1) for m in covers
    ]
    out.sort(key=lambda c: tuple(g.index(v) for v in c))
    return tuple(out)


def minimum_vertex_covers(
    g: Graph, max_vertices: int | None = None
) -> tuple[tuple[str, ...], ...]:
    """The smallest-cardinality vertex covers (a subset of the minimal ones)."""
    covers = enumerate_minimal_vertex_covers(g, max_vertices)
    best = min(len(c) for c in covers)
    return tuple(c for c in covers if len(c) == best)


def minimum_vertex_cover_size(g: Graph, max_vertices: int | None = None) -> int:
    """Smallest cardinality of a vertex cover; 0 exactly when g has no edges."""
    covers = enumerate_minimal_vertex_covers(g, max_vertices)
    return min(len(c) for c in covers)


def _try_color(g: Graph, k: int) -> dict[str, int] | None:
    n = g.n_vertices
    if n == 0:
        return {}
    adj = g.adjacency_indices()
    order = sorted(range(n), key=lambda i: (-len(adj[i]), i))
    colors = [-1] * n
    pos_of = {v: p for p, v in enumerate(order)}

    def assign(p: int, used: int) -> bool:
        if p == n:
            return True
        v = order[p]
        taken = {colors[u] for u in adj[v] if colors[u] >= 0}
        # allowing at most one brand-new color breaks color-permutation symmetry
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colors[v] = c
            if assign(p + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    if not assign(0, 0):
        return None
    return {g.vertices[i]: colors[i] for i in range(n)}


def minimum_coloring(g: Graph, max_vertices: int | None = None) -> dict[str, int]:
    """A proper coloring witnessing the chromatic number (exact search)."""
    ensure_vertex_capacity(g.n_vertices, max_vertices)
    if g.n_vertices == 0:
        return {}
    for k in range(1, g.n_vertices + 1):
        witness = _try_color(g, k)
        if witness is not None:
            return witness
    raise AssertionError("unreachable: n colors always suffice")


def chromatic_number(g: Graph, max_vertices: int | None = None) -> int:
    """Exact chromatic number; 0 for the empty graph, 1 for edgeless."""
    coloring = minimum_coloring(g, max_vertices)
    return len(set(coloring.values())) if coloring else 0


def enumerate_induced_odd_cycles(
    g: Graph, max_vertices: int | None = None
) -> tuple[tuple[str, ...], ...]:
    """All vertex subsets inducing a chordless odd cycle (length >= 3).

    Grows chordless paths from each root r using only vertices of larger
    index; a path closes into a cycle when the candidate is adjacent to the
    root and to no internal path vertex. Each cycle is found once: the root
    is its minimum vertex and the second path vertex is smaller than the
    last (direction canonicalization).
    """
    ensure_vertex_capacity(g.n_vertices, max_vertices)
    n = g.n_vertices
    adj = g.adjacency_indices()
    cycles: list[tuple[int, ...]] = []

    def grow(path: list[int]) -> None:
        root = path[0]
        last = path[-1]
        internal = path[1:-1]
        for w in sorted(adj[last]):
            if w <= root or w in path:
                continue
            if any(w in adj[u] for u in internal):
                continue  # chord into the path interior
            if len(path) == 1:
                grow([root, w])
            elif root in adj[w]:
                if path[1] < w and (len(path) + 1) % 2 == 1:
                    cycles.append(tuple(sorted(path + [w])))
                # extending past a root-adjacent vertex would leave a chord
            else:
                grow(path + [w])

    for r in range(n):
        grow([r])
    cycles.sort()
    return tuple(tuple(g.vertices[i] for i in c) for c in cycles)


def is_induced_odd_cycle(g: Graph, subset: Iterable[str]) -> bool:
    """Whether the induced subgraph is a single chordless odd cycle."""
    verts = vertex_tuple(g, subset)
    k = len(verts)
    if k < 3 or k % 2 == 0:
        return False
    sub = induced_subgraph(g, verts)
    if sub.n_edges != k:
        return False
    if any(len(sub.adjacent(v)) != 2 for v in verts):
        return False
    # 2-regular with |E| = |V|: connected iff a single cycle
    seen = {verts[0]}
    frontier = [verts[0]]
    while frontier:
        v = frontier.pop()
        for u in sub.adjacent(v):
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return len(seen) == k


@dataclass(frozen=True)
class ClusterDescriptor:
    """An induced odd cycle together with r outside y-vertices whose whole
    neighborhood lies on the cycle."""

    cycle: tuple[str, ...]
    ys: tuple[str, ...]

    @property
    def r(self) -> int:
        return len(self.ys)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self.cycle) + tuple(self.ys)


def cluster_vertices(g: Graph, cluster: ClusterDescriptor) -> tuple[str, ...]:
    """Cycle plus y-vertices of a cluster, in graph order."""
    return vertex_tuple(g, cluster.cycle + cluster.ys)


def validate_cluster(g: Graph, cluster: ClusterDescriptor) -> None:
    """Raise ValueError unless the descriptor satisfies the cluster conditions."""
    if cluster.r < 1:
        raise ValueError("a cluster needs at least one y-vertex")
    if not is_induced_odd_cycle(g, cluster.cycle):
        raise ValueError("cluster cycle does not induce a chordless odd cycle")
    cyc = set(cluster.cycle)
    if len(set(cluster.ys)) != len(cluster.ys):
        raise ValueError("duplicate y-vertices in cluster")
    for y in cluster.ys:
        if g.kind(y) != "y":
            raise ValueError(f"cluster vertex {y!r} is not y-kind")
        if y in cyc:
            raise ValueError(f"cluster y-vertex {y!r} lies on the cycle")
        if not set(g.adjacent(y)) <= cyc:
            raise ValueError(f"neighborhood of {y!r} is not contained in the cycle")


def enumerate_r_clusters(
    g: Graph, r: int, max_vertices: int | None = None
) -> tuple[ClusterDescriptor, ...]:
    """All (cycle, y-set) clusters with exactly r y-vertices.

    Empty when fewer than r y-vertices qualify; that is not an error.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"cluster size must be a positive integer, got {r!r}")
    out: list[ClusterDescriptor] = []
    ys_all = g.y_vertices
    for cyc in enumerate_induced_odd_cycles(g, max_vertices):
        cset = set(cyc)
        candidates = [y for y in ys_all if y not in cset and set(g.adjacent(y)) <= cset]
        for combo in combinations(candidates, r):
            out.append(ClusterDescriptor(cycle=cyc, ys=tuple(combo)))
    out.sort(key=lambda c: (tuple(g.index(v) for v in c.cycle), tuple(g.index(v) for v in c.ys)))
    return tuple(out)
