"""Structural invariants that define the extremal graph classes."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import CostGuardError
from .graph import Edge, Graph

VERTEX_CONN_MAX_N = 12
EDGE_CONN_MAX_N = 64


def _reachable(g: Graph, start: int, removed_mask: int = 0) -> int:
    """Bit mask of vertices reachable from ``start`` avoiding ``removed_mask``."""
    masks = g.adjacency_masks
    seen = 1 << start
    frontier = deque([start])
    while frontier:
        v = frontier.popleft()
        new = masks[v] & ~seen & ~removed_mask
        seen |= new
        while new:
            low = new & -new
            frontier.append(low.bit_length() - 1)
            new ^= low
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _reachable(g, 0) == (1 << g.n) - 1


def component_count(g: Graph) -> int:
    left = (1 << g.n) - 1
    count = 0
    while left:
        v = (left & -left).bit_length() - 1
        left &= ~_reachable(g, v)
        count += 1
    return count


def cut_edges(g: Graph) -> set[Edge]:
    """Bridges of ``g`` (per component) from one depth-first low-link pass."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: set[Edge] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # (vertex, parent, neighbour iterator)
        stack = [(root, -1, iter(g.neighbors[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors[w])))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        bridges.add((min(v, parent), max(v, parent)))
    return bridges


def pendant_vertices(g: Graph) -> list[int]:
    return [v for v, d in enumerate(g.degrees) if d == 1]


def pendant_count(g: Graph) -> int:
    return len(pendant_vertices(g))


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors[v]:
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def vertex_connectivity(g: Graph) -> int:
    """Smallest number of vertices whose removal disconnects ``g``.

    ``K_n`` has connectivity ``n - 1`` and a disconnected graph has 0.
    Searched by increasing subset size, so this doubles as a definitional
    oracle.
    """
    if g.n < 1:
        raise ValueError("vertex connectivity needs n >= 1")
    if g.n > VERTEX_CONN_MAX_N:
        raise CostGuardError(f"vertex_connectivity is capped at n={VERTEX_CONN_MAX_N}")
    if is_complete(g):
        return g.n - 1
    if not is_connected(g):
        return 0
    full = (1 << g.n) - 1
    for size in range(1, g.n - 1):
        for cut in combinations(range(g.n), size):
            removed = sum(1 << v for v in cut)
            rest = full & ~removed
            start = (rest & -rest).bit_length() - 1
            if _reachable(g, start, removed) != rest:
                return size
    # a non-complete graph always has a separating set of size <= n-2
    raise AssertionError("unreachable")


def _max_flow_unit(g: Graph, s: int, t: int, cap_at: int) -> int:
    """Edge-disjoint ``s``-``t`` path count, stopping early at ``cap_at``."""
    # residual capacity on each arc of the undirected graph (1 each way)
    residual = {}
    for u, v in g.edges:
        residual[(u, v)] = 1
        residual[(v, u)] = 1
    flow = 0
    while flow < cap_at:
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            v = queue.popleft()
            for w in g.neighbors[v]:
                if w not in parent and residual[(v, w)] > 0:
                    parent[w] = v
                    queue.append(w)
        if t not in parent:
            break
        w = t
        while parent[w] is not None:
            v = parent[w]
            residual[(v, w)] -= 1
            residual[(w, v)] += 1
            w = v
        flow += 1
    return flow


def edge_connectivity(g: Graph) -> int:
    """Minimum number of edges whose removal disconnects ``g``.

    Fixes source 0 and takes the minimum unit-capacity max-flow to every
    other vertex; any minimum cut separates 0 from some vertex.
    """
    if g.n < 1:
        raise ValueError("edge connectivity needs n >= 1")
    if g.n > EDGE_CONN_MAX_N:
        raise CostGuardError(f"edge_connectivity is capped at n={EDGE_CONN_MAX_N}")
    if g.n == 1 or not is_connected(g):
        return 0
    best = min(g.degrees)
    for t in range(1, g.n):
        best = min(best, _max_flow_unit(g, 0, t, best))
    return best


class ClassKind(enum.Enum):
    CUT_EDGES = "cut-edges"
    PENDANT_VERTICES = "pendant-vertices"
    VERTEX_CONNECTIVITY = "vertex-connectivity"
    EDGE_CONNECTIVITY = "edge-connectivity"


@dataclass(frozen=True)
class ClassSpec:
    """One extremal class: graphs on ``n`` vertices with a fixed invariant value."""

    kind: ClassKind
    n: int
    param: int

    def __post_init__(self):
        kind = ClassKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if self.n < 1:
            raise ValueError("class needs n >= 1")
        hi = self.n - 3 if kind is ClassKind.CUT_EDGES else self.n - 1
        if not 0 <= self.param <= hi:
            raise ValueError(
                f"{kind.value} parameter must lie in [0, {hi}] for n={self.n}, got {self.param}"
            )

    def label(self) -> str:
        return f"{self.kind.value}(n={self.n}, {self.param})"


def member_of(g: Graph, spec: ClassSpec) -> bool:
    if g.n != spec.n:
        return False
    kind = spec.kind
    if kind is ClassKind.CUT_EDGES:
        return is_connected(g) and len(cut_edges(g)) == spec.param
    if kind is ClassKind.PENDANT_VERTICES:
        return pendant_count(g) == spec.param
    if kind is ClassKind.VERTEX_CONNECTIVITY:
        return vertex_connectivity(g) == spec.param
    if kind is ClassKind.EDGE_CONNECTIVITY:
        return edge_connectivity(g) == spec.param
    raise ValueError(f"unknown class kind {kind!r}")
