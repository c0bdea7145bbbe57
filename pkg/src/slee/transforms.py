"""Paired graph constructions whose second member should have larger SLEE.

Each constructor returns a :class:`TransformPair`; callers compare
``slee(pair.before)`` with ``slee(pair.after)``.  Every transformation keeps
both the vertex count and the edge count fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import GraphError
from .graph import Graph, attach_pendants, disjoint_union, identify
from .invariants import is_complete, pendant_vertices

IDENTIFICATION = "identification"
ATTACH_VS_IDENTIFY = "attach-vs-identify"
RELOCATION = "relocation"
PENDANT_RELOCATION = "pendant-relocation"


@dataclass(frozen=True)
class TransformPair:
    before: Graph
    after: Graph
    kind: str

    def __post_init__(self):
        if self.before.n != self.after.n or self.before.m != self.after.m:
            raise GraphError(f"{self.kind}: pair must preserve vertex and edge counts")


def identification_pair(h1: Graph, u: int, v: int, h2: Graph, w: int) -> TransformPair:
    """Glue ``h2`` at ``v`` (before) versus at ``u`` (after)."""
    h1.check_vertex(u)
    h1.check_vertex(v)
    h2.check_vertex(w)
    if u == v:
        raise GraphError("identification_pair needs u != v")
    return TransformPair(identify(h1, v, h2, w), identify(h1, u, h2, w), IDENTIFICATION)


def attach_vs_identify_pair(g1: Graph, u: int, g2: Graph, v: int) -> TransformPair:
    """Bridge ``u``-``v`` between ``g1`` and ``g2`` versus merging them plus a pendant.

    ``before`` is ``g1 ∪ g2`` plus the edge ``uv``; ``after`` merges ``v`` into
    ``u`` and hangs a new pendant vertex on ``u``.
    """
    g1.check_vertex(u)
    g2.check_vertex(v)
    if g1.degrees[u] < 1 or g2.degrees[v] < 1:
        raise GraphError("both anchors need degree >= 1 inside their own graph")
    before = disjoint_union(g1, g2).add_edge(u, g1.n + v)
    after = attach_pendants(identify(g1, u, g2, v), u, 1)
    return TransformPair(before, after, ATTACH_VS_IDENTIFY)


def relocation_pair(g: Graph, v: int, u: int, ws: Sequence[int]) -> TransformPair:
    """``g`` plus edges ``v-w`` (before) versus ``g`` plus edges ``u-w`` (after)."""
    for x in (v, u, *ws):
        g.check_vertex(x)
    if not ws:
        raise GraphError("relocation needs at least one target vertex")
    if len(set(ws)) != len(ws) or u in ws or v in ws:
        raise GraphError("targets must be distinct and differ from u and v")
    for w in ws:
        if g.has_edge(v, w) or g.has_edge(u, w):
            raise GraphError(f"edge to {w} already present")
    before = g.add_edges((v, w) for w in ws)
    after = g.add_edges((u, w) for w in ws)
    return TransformPair(before, after, RELOCATION)


def clique_core(g: Graph) -> list[int] | None:
    """Vertices of the clique when ``g`` is a clique with pendants hung on it.

    Returns ``None`` when ``g`` is not of that shape.  The clique must have
    at least 3 vertices so pendant and clique vertices are unambiguous.
    """
    pend = set(pendant_vertices(g))
    core = [x for x in range(g.n) if x not in pend]
    if len(core) < 3 or not is_complete(g.induced_subgraph(core)):
        return None
    if any(g.neighbors[p][0] in pend for p in pend):
        return None
    return core


def pendant_neighbors(g: Graph, x: int) -> list[int]:
    return [w for w in g.neighbors[x] if g.degrees[w] == 1]


def pendant_relocation(g: Graph, v: int, u: int) -> TransformPair:
    """Move every pendant hanging on ``v`` over to ``u``."""
    g.check_vertex(v)
    g.check_vertex(u)
    core = clique_core(g)
    if core is None:
        raise GraphError("graph is not a clique with pendant vertices attached")
    if u == v or u not in core or v not in core:
        raise GraphError("u and v must be distinct clique vertices")
    moving = pendant_neighbors(g, v)
    if not moving:
        raise GraphError(f"vertex {v} has no pendant neighbours")
    if len(pendant_neighbors(g, u)) < len(moving):
        raise GraphError(f"vertex {u} has fewer pendant neighbours than {v}")
    edges = (g.edges - {(min(v, w), max(v, w)) for w in moving}) | {
        (min(u, w), max(u, w)) for w in moving
    }
    return TransformPair(g, Graph(g.n, edges), PENDANT_RELOCATION)


def gather_pendants(g: Graph) -> list[TransformPair]:
    """Repeatedly relocate the smallest pendant bundle onto the largest.

    Returns the chain of pairs; the last ``after`` has all pendants on a
    single clique vertex.
    """
    core = clique_core(g)
    if core is None:
        raise GraphError("graph is not a clique with pendant vertices attached")
    chain = []
    cur = g
    while True:
        loads = sorted(
            ((len(pendant_neighbors(cur, x)), x) for x in core), key=lambda t: (-t[0], t[1])
        )
        carrying = [x for c, x in loads if c > 0]
        if len(carrying) <= 1:
            return chain
        pair = pendant_relocation(cur, carrying[-1], carrying[0])
        chain.append(pair)
        cur = pair.after
