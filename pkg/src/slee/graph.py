"""Immutable simple graphs, named constructions and canonical labeling.

Vertices are always the dense range ``0..n-1``.  Every operation returns a
new :class:`Graph`; nothing is mutated in place.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CostGuardError, GraphError

MAX_N = 64
N_ISO = 10

Edge = tuple[int, int]


def _norm_edge(u: int, v: int, n: int) -> Edge:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``.  Duplicate
    input pairs collapse (set semantics); loops and out-of-range endpoints
    are rejected.
    """

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"vertex count must be a non-negative int, got {self.n!r}")
        if self.n > MAX_N:
            raise CostGuardError(f"n={self.n} exceeds the cap of {MAX_N} vertices")
        object.__setattr__(
            self, "edges", frozenset(_norm_edge(u, v, self.n) for u, v in self.edges)
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(n, frozenset((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbour set of each vertex packed into an int bit mask."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.degrees[v]

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted in non-increasing order."""
        return tuple(sorted(self.degrees, reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} not in range [0, {self.n})")

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def add_edge(self, u: int, v: int) -> Graph:
        e = _norm_edge(u, v, self.n)
        if e in self.edges:
            raise GraphError(f"edge {e} already present")
        return Graph(self.n, self.edges | {e})

    def add_edges(self, pairs: Iterable[Sequence[int]]) -> Graph:
        g = self
        for u, v in pairs:
            g = g.add_edge(u, v)
        return g

    def remove_edge(self, u: int, v: int) -> Graph:
        e = _norm_edge(u, v, self.n)
        if e not in self.edges:
            raise GraphError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def non_edges(self) -> list[Edge]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in self.edges
        ]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``i`` renamed to ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertex set")
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))

    def induced_subgraph(self, keep: Iterable[int]) -> Graph:
        """Subgraph induced on ``keep``, relabeled to ``0..len(keep)-1`` in sorted order."""
        kept = sorted(set(keep))
        for v in kept:
            self.check_vertex(v)
        index = {v: i for i, v in enumerate(kept)}
        return Graph(
            len(kept),
            frozenset(
                (index[u], index[v]) for u, v in self.edges if u in index and v in index
            ),
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_list()})"


def empty(n: int) -> Graph:
    return Graph(n)


def complete(a: int) -> Graph:
    return Graph(a, frozenset((u, v) for u in range(a) for v in range(u + 1, a)))


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def star(m: int) -> Graph:
    """Star on ``m`` vertices with centre 0."""
    if m < 1:
        raise GraphError("a star needs at least one vertex")
    return Graph(m, frozenset((0, i) for i in range(1, m)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.edges | {(u + shift, v + shift) for u, v in h.edges})


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    base = disjoint_union(g, h)
    cross = {(u, g.n + v) for u in range(g.n) for v in range(h.n)}
    return Graph(base.n, base.edges | cross)


def attach_pendants(g: Graph, v: int, count: int) -> Graph:
    """Add ``count`` new vertices, each adjacent only to ``v``."""
    g.check_vertex(v)
    if count < 0:
        raise GraphError("pendant count must be non-negative")
    new = range(g.n, g.n + count)
    return Graph(g.n + count, g.edges | {(v, w) for w in new})


def g_nr(n: int, r: int) -> Graph:
    """``K_{n-r}`` on ``0..n-r-1`` with ``r`` pendant vertices on vertex 0."""
    if n < 1:
        raise GraphError("g_nr needs n >= 1")
    if not 0 <= r <= n - 1:
        raise GraphError(f"g_nr needs 0 <= r <= n-1, got n={n}, r={r}")
    return attach_pendants(complete(n - r), 0, r)


def k_pqr(p: int, q: int, r: int) -> Graph:
    """The join of ``K_p ∪ K_q`` with ``K_r``.

    ``(0, 1, n-1)`` is accepted as the conventional name of ``K_n``; otherwise
    ``p >= q`` is required.
    """
    if min(p, q, r) < 0:
        raise GraphError("k_pqr parameters must be non-negative")
    if p + q + r == 0:
        raise GraphError("k_pqr needs at least one vertex")
    if p < q and (p, q) != (0, 1):
        raise GraphError(f"k_pqr needs p >= q, got p={p}, q={q}")
    return join(disjoint_union(complete(p), complete(q)), complete(r))


def identify(h1: Graph, u: int, h2: Graph, w: int) -> Graph:
    """Glue ``h2`` onto ``h1`` by merging ``w`` into ``u``.

    Vertices of ``h1`` keep their labels; the remaining vertices of ``h2``
    follow in their original order starting at ``h1.n``.
    """
    h1.check_vertex(u)
    h2.check_vertex(w)
    mapping = {}
    nxt = h1.n
    for x in range(h2.n):
        if x == w:
            mapping[x] = u
        else:
            mapping[x] = nxt
            nxt += 1
    edges = set(h1.edges)
    edges.update((mapping[a], mapping[b]) for a, b in h2.edges)
    return Graph(h1.n + h2.n - 1, frozenset(edges))


# -- canonical labeling ------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Upper-triangle bit string of the lexicographically minimal relabeling.

    Bits follow the graph6 order: columns ``j = 1..n-1``, rows ``i < j``.
    """

    n: int
    bits: str

    def to_graph(self) -> Graph:
        edges = []
        it = iter(self.bits)
        for j in range(1, self.n):
            for i in range(j):
                if next(it) == "1":
                    edges.append((i, j))
        return Graph.from_edges(self.n, edges)


def _refined_cells(g: Graph) -> list[list[int]]:
    """Ordered vertex cells from colour refinement seeded with degrees.

    Colours are renumbered by sorting their signatures, so the cell order is
    the same for isomorphic graphs.
    """
    colour = list(g.degrees)
    ncol = len(set(colour))
    while True:
        sigs = [
            (colour[v], tuple(sorted(colour[w] for w in g.neighbors[v])))
            for v in range(g.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colour = [rank[s] for s in sigs]
        if len(rank) == ncol:
            break
        ncol = len(rank)
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Graph, max_n: int = N_ISO) -> CanonicalForm:
    """Canonical form by branch-and-bound over refinement-respecting relabelings."""
    if g.n > max_n:
        raise CostGuardError(f"canonical_form is capped at n={max_n}, got n={g.n}")
    n = g.n
    if n <= 1:
        return CanonicalForm(n, "")
    masks = g.adjacency_masks
    cell_of_pos: list[list[int]] = []
    for cell in _refined_cells(g):
        cell_of_pos.extend([cell] * len(cell))

    best: list[tuple[int, ...]] | None = None
    updates = 0
    order: list[int] = []
    used = [False] * n
    cols: list[tuple[int, ...]] = []

    # ``tight``: the current prefix equals the prefix of ``best``.
    def descend(j: int, tight: bool) -> None:
        nonlocal best, updates
        if j == n:
            if best is None or not tight:
                best = list(cols)
                updates += 1
            return
        tried: list[int] = []
        for v in cell_of_pos[j]:
            if used[v]:
                continue
            # twins swap by an automorphism fixing the prefix: same subtree
            if any(
                masks[v] & ~(1 << w) == masks[w] & ~(1 << v) for w in tried
            ):
                continue
            tried.append(v)
            col = tuple((masks[v] >> order[i]) & 1 for i in range(j))
            child_tight = tight
            if tight and best is not None and j:
                ref = best[j - 1]
                if col > ref:
                    continue
                if col < ref:
                    child_tight = False
            used[v] = True
            order.append(v)
            if j:
                cols.append(col)
            seen = updates
            descend(j + 1, child_tight)
            # a new best found below shares this node's prefix
            if updates != seen:
                tight = True
            if j:
                cols.pop()
            order.pop()
            used[v] = False

    descend(0, True)
    assert best is not None
    return CanonicalForm(n, "".join(str(b) for col in best for b in col))


def is_isomorphic(g: Graph, h: Graph, max_n: int = N_ISO) -> bool:
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g, max_n) == canonical_form(h, max_n)
