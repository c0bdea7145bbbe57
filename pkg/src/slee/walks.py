"""Semi-edge walk counting and finite-horizon dominance checks.

A semi-edge walk step from ``v`` picks an edge ``e`` incident to ``v`` and
moves to either endpoint of ``e`` -- so staying put is a legal step, one per
incident edge.  Walk counts between ``x`` and ``y`` are the entries of
``Q^k``; :func:`enumerate_walks` counts them without that identity and serves
as its oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import CostGuardError
from .graph import Graph
from .spectral import exact_matrix, q_matrix

K_ENUM = 8
N_ENUM = 10
DEFAULT_K = 20
MATERIALIZE_BUDGET = 10**7


def _guard(g: Graph, k: int) -> None:
    if k > K_ENUM or g.n > N_ENUM:
        raise CostGuardError(
            f"walk enumeration is capped at k<={K_ENUM}, n<={N_ENUM} (got k={k}, n={g.n})"
        )


def enumerate_walk_counts(g: Graph, x: int, K: int) -> list[list[int]]:
    """``counts[k][y]`` for every walk of length ``k <= K`` that starts at ``x``.

    Explicit depth-first traversal of every walk; no matrix algebra.
    """
    g.check_vertex(x)
    _guard(g, K)
    counts = [[0] * g.n for _ in range(K + 1)]
    nbrs = g.neighbors
    stack = [(x, 0)]
    while stack:
        v, depth = stack.pop()
        counts[depth][v] += 1
        if depth == K:
            continue
        for w in nbrs[v]:
            # edge vw: step to either endpoint
            stack.append((v, depth + 1))
            stack.append((w, depth + 1))
    return counts


def enumerate_walks(g: Graph, x: int, y: int, k: int) -> int:
    """Number of semi-edge walks of length ``k`` from ``x`` to ``y``, by brute force."""
    g.check_vertex(y)
    return enumerate_walk_counts(g, x, k)[k][y]


def iter_walks(g: Graph, x: int, k: int) -> Iterator[tuple]:
    """Materialize walks ``(v1, e1, v2, ..., ek, v_{k+1})`` starting at ``x``.

    Debug helper for tiny cases; edges appear as ``(u, v)`` tuples.
    """
    g.check_vertex(x)
    _guard(g, k)
    if g.n * (2 * max(g.degrees, default=0)) ** k > MATERIALIZE_BUDGET:
        raise CostGuardError("too many walks to materialize")

    def rec(seq):
        if len(seq) == 2 * k + 1:
            yield tuple(seq)
            return
        v = seq[-1]
        for w in g.neighbors[v]:
            e = (min(v, w), max(v, w))
            for nxt in (v, w):
                yield from rec(seq + [e, nxt])

    yield from rec([x])


@dataclass(frozen=True)
class WalkCountTable:
    """``counts[k][x][y]`` equals the number of length-``k`` walks from ``x`` to ``y``."""

    K: int
    counts: tuple[np.ndarray, ...]

    def closed(self, x: int) -> tuple[int, ...]:
        return tuple(int(c[x, x]) for c in self.counts)

    def between(self, x: int, y: int) -> tuple[int, ...]:
        return tuple(int(c[x, y]) for c in self.counts)

    def traces(self) -> tuple[int, ...]:
        return tuple(int(sum(c[i, i] for i in range(c.shape[0]))) for c in self.counts)


def walk_table(g: Graph, K: int) -> WalkCountTable:
    """Exact powers ``Q^0..Q^K`` in arbitrary-precision integers."""
    if K < 0:
        raise ValueError("K must be non-negative")
    q = exact_matrix(q_matrix(g))
    cur = exact_matrix(np.eye(g.n, dtype=np.int64))
    counts = [cur]
    for _ in range(K):
        cur = cur @ q
        counts.append(cur)
    return WalkCountTable(K, tuple(counts))


class Relation(enum.Enum):
    EQUAL = "equal-up-to-K"
    STRICT = "strict"
    FAILS = "fails"


@dataclass(frozen=True)
class DominanceVerdict:
    """Outcome of comparing two walk-count sequences over ``k = 0..K``.

    ``comparison[k]`` is -1, 0 or 1 as the left count is below, equal to or
    above the right one.  A horizon can refute dominance but never prove it.
    """

    relation: Relation
    K: int
    comparison: tuple[int, ...]
    witness_k: int | None = None
    fail_k: int | None = None

    @property
    def holds(self) -> bool:
        """Left is dominated by right up to ``K`` (equal or strict)."""
        return self.relation is not Relation.FAILS


def compare_sequences(left: Sequence[int], right: Sequence[int]) -> DominanceVerdict:
    if len(left) != len(right):
        raise ValueError("sequences must have equal length")
    cmp = tuple((a > b) - (a < b) for a, b in zip(left, right))
    K = len(cmp) - 1
    fail_k = next((k for k, c in enumerate(cmp) if c > 0), None)
    if fail_k is not None:
        return DominanceVerdict(Relation.FAILS, K, cmp, fail_k=fail_k)
    witness = next((k for k, c in enumerate(cmp) if c < 0), None)
    if witness is None:
        return DominanceVerdict(Relation.EQUAL, K, cmp)
    return DominanceVerdict(Relation.STRICT, K, cmp, witness_k=witness)


def dominance(g: Graph, x: int, g2: Graph, x2: int, K: int = DEFAULT_K) -> DominanceVerdict:
    """Is ``(g; x)`` dominated by ``(g2; x2)`` in closed-walk counts up to ``K``?"""
    if K < 1:
        raise ValueError("K must be at least 1")
    g.check_vertex(x)
    g2.check_vertex(x2)
    left = walk_table(g, K).closed(x)
    right = left if g2 is g and x2 == x else walk_table(g2, K).closed(x2)
    return compare_sequences(left, right)


def pair_dominance(g: Graph, w: int, v: int, u: int, K: int = DEFAULT_K) -> DominanceVerdict:
    """Compare walk counts ``w -> v`` against ``w -> u`` in the same graph."""
    for x in (w, v, u):
        g.check_vertex(x)
    table = walk_table(g, K)
    return compare_sequences(table.between(w, v), table.between(w, u))
