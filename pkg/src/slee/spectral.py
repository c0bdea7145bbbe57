"""Signless Laplacian spectra, SLEE/LEE, and exact spectral moments."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SleeError
from .graph import Graph

# exp() overflows a double just above 709.78
_EXP_LIMIT = 709.0


class ConvergenceError(SleeError):
    pass


@dataclass(frozen=True)
class Spectrum:
    source: str  # "Q" or "L"
    values: tuple[float, ...]  # descending

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class MomentVector:
    """Exact moments ``T_0..T_K``; ``values[k] = trace(Q^k)``."""

    K: int
    values: tuple[int, ...]


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def q_matrix(g: Graph) -> np.ndarray:
    """``D + A`` as an int64 array."""
    return np.diag(np.array(g.degrees, dtype=np.int64)) + adjacency_matrix(g)


def l_matrix(g: Graph) -> np.ndarray:
    """``D - A`` as an int64 array."""
    return np.diag(np.array(g.degrees, dtype=np.int64)) - adjacency_matrix(g)


def eigenvalues_sym(m, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotation.

    Sweeps visit ``(p, q)`` pairs in row order and stop once the
    off-diagonal Frobenius mass is at most ``tol * ||m||_F``.  Returned in
    descending order.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    scale = np.linalg.norm(a)
    if n == 0:
        return np.zeros(0)
    target = tol * scale
    offdiag = ~np.eye(n, dtype=bool)

    def off(x):
        return float(np.linalg.norm(x[offdiag]))

    for _ in range(max_sweeps):
        if off(a) <= target:
            return np.sort(np.diag(a))[::-1].copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    if off(a) <= target:
        return np.sort(np.diag(a))[::-1].copy()
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def q_spectrum(g: Graph) -> Spectrum:
    return Spectrum("Q", tuple(float(x) for x in eigenvalues_sym(q_matrix(g))))


def l_spectrum(g: Graph) -> Spectrum:
    return Spectrum("L", tuple(float(x) for x in eigenvalues_sym(l_matrix(g))))


def _guard_overflow(g: Graph) -> None:
    if g.n and 2 * max(g.degrees) > _EXP_LIMIT:
        raise OverflowError("largest eigenvalue bound 2*maxdeg overflows exp()")


def slee(g: Graph) -> float:
    """Sum of ``exp(q_i)`` over the signless Laplacian eigenvalues."""
    _guard_overflow(g)
    return math.fsum(math.exp(x) for x in q_spectrum(g).values)


def lee(g: Graph) -> float:
    """Sum of ``exp(mu_i)`` over the Laplacian eigenvalues."""
    _guard_overflow(g)
    return math.fsum(math.exp(x) for x in l_spectrum(g).values)


def exact_matrix(m) -> np.ndarray:
    """Object-dtype copy so products stay in arbitrary-precision ints."""
    return np.array(m, dtype=np.int64).astype(object)


def moments(g: Graph, K: int) -> MomentVector:
    """Exact ``trace(Q^k)`` for ``k = 0..K``."""
    if K < 0:
        raise ValueError("K must be non-negative")
    q = exact_matrix(q_matrix(g))
    power = exact_matrix(np.eye(g.n, dtype=np.int64))
    values = []
    for k in range(K + 1):
        if k:
            power = power @ q
        values.append(int(sum(power[i, i] for i in range(g.n))))
    return MomentVector(K, tuple(values))


def tail_bound(n: int, max_degree: int, K: int) -> float:
    """Upper bound on ``n * sum_{k>K} (2*maxdeg)^k / k!``.

    Uses the ratio bound when the terms already decrease geometrically and
    the Lagrange remainder otherwise; the smaller of the valid bounds wins.
    """
    x = 2 * max_degree
    if n == 0 or x == 0:
        return 0.0
    # log of the first omitted term x^(K+1)/(K+1)!
    log_first = (K + 1) * math.log(x) - math.lgamma(K + 2)
    bounds = [math.log(n) + x + log_first]
    if x < K + 2:
        bounds.append(math.log(n) + log_first - math.log1p(-x / (K + 2)))
    lb = min(bounds)
    return math.exp(lb) if lb < _EXP_LIMIT else math.inf


def slee_series(g: Graph, K: int) -> tuple[float, float]:
    """Partial sum ``sum_{k<=K} T_k/k!`` and a rigorous bound on the omitted tail.

    The bound relies on ``q_1 <= 2 * maxdeg`` rather than on computed
    eigenvalues.
    """
    mv = moments(g, K)
    total = sum(Fraction(t, math.factorial(k)) for k, t in enumerate(mv.values))
    maxdeg = max(g.degrees, default=0)
    return float(total), tail_bound(g.n, maxdeg, K)
