"""Exhaustive small-graph enumeration and extremal SLEE verification."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CostGuardError
from .graph import N_ISO, CanonicalForm, Graph, canonical_form, empty, g_nr, k_pqr
from .invariants import ClassKind, ClassSpec, is_connected, member_of
from .io import iter_graph6, write_graph6
from .spectral import slee

DEFAULT_MAX_ENUM_N = 7
DEFAULT_TIE_TOL = 1e-9
DEFAULT_TOP = 10

UNIQUE_MATCH = "unique-match"
TIE = "tie"
MISMATCH = "mismatch"
EMPTY_CLASS = "empty-class"


def max_enum_n() -> int:
    """Internal enumeration cap; ``SLEE_MAX_N`` raises it at the caller's cost."""
    raw = os.environ.get("SLEE_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_ENUM_N


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    # every graph on n vertices is some (n-1)-vertex class plus one new vertex
    if n == 0:
        return (empty(0),)
    seen: dict[CanonicalForm, None] = {}
    last = n - 1
    for h in _classes(last):
        for subset in range(1 << last):
            extra = {(i, last) for i in range(last) if subset >> i & 1}
            seen.setdefault(canonical_form(Graph(n, h.edges | extra), max_n=max(n, N_ISO)))
    return tuple(cf.to_graph() for cf in sorted(seen))


def enumerate_classes(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class on ``n`` vertices.

    Representatives are the canonical relabelings, yielded in sorted
    canonical-form order.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    cap = max_enum_n()
    if n > cap:
        raise CostGuardError(f"internal enumeration is capped at n={cap} (set SLEE_MAX_N)")
    for g in _classes(n):
        if not connected_only or is_connected(g):
            yield g


@dataclass(frozen=True)
class GraphSource:
    """Where candidate graphs come from: internal enumeration or a graph6 file."""

    kind: str  # "internal" or "graph6"
    n: int | None = None
    connected_only: bool = False
    path: str | None = None

    @classmethod
    def internal(cls, n: int, connected_only: bool = False) -> GraphSource:
        return cls("internal", n=n, connected_only=connected_only)

    @classmethod
    def graph6(cls, path: str) -> GraphSource:
        return cls("graph6", path=path)

    def graphs(self) -> Iterator[Graph]:
        if self.kind == "internal":
            yield from enumerate_classes(self.n, self.connected_only)
        elif self.kind == "graph6":
            with open(self.path) as fh:
                yield from iter_graph6(fh)
        else:
            raise ValueError(f"unknown source kind {self.kind!r}")


def expected_extremal(spec: ClassSpec) -> Graph:
    """The construction claimed to be the unique maximizer of ``spec``."""
    if spec.kind in (ClassKind.CUT_EDGES, ClassKind.PENDANT_VERTICES):
        return g_nr(spec.n, spec.param)
    k = spec.param
    if k == spec.n - 1:
        return k_pqr(0, 1, k)
    return k_pqr(spec.n - 1 - k, 1, k)


@dataclass
class SearchReport:
    spec: ClassSpec
    candidates_examined: int
    members: int
    ranking: list[tuple[CanonicalForm, float]]
    maximizers: list[CanonicalForm]
    expected: CanonicalForm
    verdict: str
    tie_tolerance: float
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == UNIQUE_MATCH

    def to_dict(self, top: int = DEFAULT_TOP) -> dict:
        def g6(cf: CanonicalForm) -> str:
            return write_graph6(cf.to_graph()).decode()

        return {
            "spec": {"kind": self.spec.kind.value, "n": self.spec.n, "param": self.spec.param},
            "counts": {"examined": self.candidates_examined, "members": self.members},
            "ranking": [
                {"rank": i + 1, "graph6": g6(cf), "slee": value}
                for i, (cf, value) in enumerate(self.ranking[:top])
            ],
            "maximizers": [g6(cf) for cf in self.maximizers],
            "expected": g6(self.expected),
            "verdict": self.verdict,
            "tie_tolerance": self.tie_tolerance,
        }

    def csv_rows(self) -> list[tuple[int, str, float]]:
        return [
            (i + 1, write_graph6(cf.to_graph()).decode(), value)
            for i, (cf, value) in enumerate(self.ranking)
        ]


def _evaluate(args: tuple[Graph, ClassSpec]) -> tuple[CanonicalForm, float] | None:
    g, spec = args
    if not member_of(g, spec):
        return None
    return canonical_form(g, max_n=max(g.n, N_ISO)), slee(g)


def _evaluate_all(graphs: Iterable[Graph], spec: ClassSpec, jobs: int):
    work = ((g, spec) for g in graphs)
    if jobs <= 1:
        return list(map(_evaluate, work))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_evaluate, work, chunksize=32))


def extremal_search(
    source: GraphSource,
    spec: ClassSpec,
    tie_tol: float = DEFAULT_TIE_TOL,
    jobs: int = 1,
) -> SearchReport:
    """Rank every member of ``spec`` by SLEE and compare the top with the construction.

    Duplicates (isomorphic graphs in a stream) collapse onto one canonical
    form.  Maximizers are the classes within ``tie_tol`` (relative) of the
    best value.
    """
    graphs = list(source.graphs())
    results = _evaluate_all(graphs, spec, jobs)
    best_by_form: dict[CanonicalForm, float] = {}
    for res in results:
        if res is not None:
            best_by_form.setdefault(res[0], res[1])
    ranking = sorted(best_by_form.items(), key=lambda kv: (-kv[1], kv[0]))
    expected = canonical_form(expected_extremal(spec), max_n=max(spec.n, N_ISO))
    notes = []
    if not ranking:
        verdict = EMPTY_CLASS
        maximizers = []
        notes.append("no graph in the source belongs to this class")
    else:
        top = ranking[0][1]
        maximizers = [cf for cf, value in ranking if value >= top - tie_tol * abs(top)]
        if len(maximizers) > 1:
            verdict = TIE
        elif maximizers[0] == expected:
            verdict = UNIQUE_MATCH
        else:
            verdict = MISMATCH
        if expected not in best_by_form:
            notes.append("expected construction is not a member of this class")
    return SearchReport(
        spec=spec,
        candidates_examined=len(graphs),
        members=len(ranking),
        ranking=ranking,
        maximizers=maximizers,
        expected=expected,
        verdict=verdict,
        tie_tolerance=tie_tol,
        notes=notes,
    )


def admissible_params(kind: ClassKind, n: int) -> range:
    if kind is ClassKind.CUT_EDGES:
        return range(0, n - 2)
    return range(0, n)


def verify_theorem(
    kind: ClassKind | str,
    n: int,
    source: GraphSource | None = None,
    tie_tol: float = DEFAULT_TIE_TOL,
    jobs: int = 1,
) -> list[SearchReport]:
    """Run :func:`extremal_search` for every admissible parameter of one class family."""
    kind = ClassKind(kind)
    if source is None:
        source = GraphSource.internal(n, connected_only=kind is ClassKind.CUT_EDGES)
    return [
        extremal_search(source, ClassSpec(kind, n, p), tie_tol, jobs)
        for p in admissible_params(kind, n)
    ]


@dataclass(frozen=True)
class CliqueMergeCase:
    p: int
    q: int
    r: int
    split: float  # SLEE of the join of (K_p ∪ K_q) with K_r
    merged: float  # SLEE of the join of (K_{p+q-1} ∪ K_1) with K_r

    @property
    def holds(self) -> bool:
        return self.split < self.merged


def verify_clique_merge(limit: int = 10) -> list[CliqueMergeCase]:
    """Check that merging the two cliques beside the ``K_r`` always raises SLEE.

    Covers every ``p >= q >= 2``, ``r >= 1`` with ``p + q + r <= limit``.
    """
    cases = []
    for total in range(5, limit + 1):
        for r in range(1, total - 3):
            for q in range(2, (total - r) // 2 + 1):
                p = total - r - q
                cases.append(
                    CliqueMergeCase(
                        p, q, r, slee(k_pqr(p, q, r)), slee(k_pqr(p + q - 1, 1, r))
                    )
                )
    return cases


def cut_edge_monotonicity(reports: list[SearchReport]) -> list[str]:
    """Flag any cut-edge class whose best SLEE fails to drop as the count rises."""
    flags = []
    tops = [(rep.spec.param, rep.ranking[0][1]) for rep in reports if rep.ranking]
    tops.sort()
    for (r0, a), (r1, b) in zip(tops, tops[1:]):
        if not b < a:
            flags.append(f"max SLEE did not decrease from r={r0} ({a}) to r={r1} ({b})")
    return flags
