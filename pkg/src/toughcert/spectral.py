"""Dense symmetric eigenvalue routines sized for small graphs.

Two independent solvers are kept deliberately: a shifted power
iteration for the largest adjacency eigenvalue, and a cyclic Jacobi
sweep for full spectra.  The power iteration runs on A + I so that
bipartite graphs (where -lambda_1 is also an eigenvalue and the plain
iteration oscillates) still converge to the Perron value; the residual
is always measured on A itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, SizeLimitError
from .graphs import Graph, _bits

__all__ = [
    "DENSE_LIMIT",
    "Spectrum",
    "adjacency_matrix",
    "spectral_radius",
    "full_spectrum",
    "quotient_matrix",
    "is_equitable",
    "quotient_spectrum",
    "quotient_radius_check",
]

DENSE_LIMIT = 512


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Symmetric 0/1 adjacency matrix as float64."""
    a = np.zeros((g.n, g.n))
    for v, row in enumerate(g.adj):
        for u in _bits(row):
            a[v, u] = 1.0
    return a


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in nonincreasing order plus the achieved tolerance."""

    values: tuple[float, ...]
    tolerance: float

    @property
    def radius(self) -> float:
        return self.values[0]


def spectral_radius(g: Graph, tol: float = 1e-12, max_iter: int = 1_000_000) -> float:
    """Largest adjacency eigenvalue of ``g``.

    Power iteration from the all-ones vector, accepted once the
    infinity-norm residual ||Av - lambda v|| drops below
    ``tol * max(1, lambda)``.  Falls back to the Jacobi solver if the
    iteration stalls; only both failing raises.
    """
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    n = g.n
    if all(row == 0 for row in g.adj):
        return 0.0
    a = adjacency_matrix(g)
    v = np.full(n, 1.0 / math.sqrt(n))
    for _ in range(max_iter):
        w = a @ v
        lam = float(v @ w)
        if float(np.max(np.abs(w - lam * v))) <= tol * max(1.0, abs(lam)):
            return lam
        v = w + v
        v /= float(np.linalg.norm(v))
    return full_spectrum(a, tol=tol).radius


def full_spectrum(
    matrix, tol: float = 1e-12, dense_limit: int = DENSE_LIMIT
) -> Spectrum:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm falls below
    ``tol * max(1, ||A||_F)``.  Input must be square, symmetric, finite
    and of dimension at most ``dense_limit``.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("matrix must be square")
    m = a.shape[0]
    if m > dense_limit:
        raise SizeLimitError(f"dimension {m} exceeds dense limit {dense_limit}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix must be finite")
    scale = float(np.linalg.norm(a))
    if float(np.max(np.abs(a - a.T))) > 1e-12 * max(1.0, scale):
        raise DomainError("matrix must be symmetric")
    a = (a + a.T) / 2.0
    if m == 1:
        return Spectrum((float(a[0, 0]),), 0.0)
    target = tol * max(1.0, scale)
    off = _off_norm(a)
    for _ in range(60):
        if off <= target:
            break
        skip = off / (m * m)
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                newp = c * colp - s * colq
                newq = s * colp + c * colq
                a[:, p] = newp
                a[p, :] = newp
                a[:, q] = newq
                a[q, :] = newq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
        off = _off_norm(a)
    else:
        raise ConvergenceError("Jacobi sweeps did not reach tolerance")
    values = tuple(sorted((float(x) for x in np.diag(a)), reverse=True))
    return Spectrum(values, off)


def _off_norm(a: np.ndarray) -> float:
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    return float(np.linalg.norm(b))


def _check_partition(m: int, blocks) -> list[list[int]]:
    parts = [list(b) for b in blocks]
    if not parts or any(not p for p in parts):
        raise DomainError("partition blocks must be nonempty")
    seen: set[int] = set()
    for p in parts:
        for v in p:
            if not (0 <= v < m) or v in seen:
                raise DomainError("blocks must partition the index set exactly")
            seen.add(v)
    if len(seen) != m:
        raise DomainError("blocks must cover every index")
    return parts


def quotient_matrix(matrix, blocks) -> np.ndarray:
    """Block-averaged quotient: entry (i, j) is the total weight from a
    block-i row into block j divided by the size of block i."""
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("matrix must be square")
    parts = _check_partition(a.shape[0], blocks)
    k = len(parts)
    q = np.zeros((k, k))
    for i, bi in enumerate(parts):
        for j, bj in enumerate(parts):
            q[i, j] = float(a[np.ix_(bi, bj)].sum()) / len(bi)
    return q


def is_equitable(matrix, blocks, tol: float = 1e-9) -> bool:
    """Whether each vertex of block i sends the same total weight into
    block j, for every pair (i, j)."""
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("matrix must be square")
    parts = _check_partition(a.shape[0], blocks)
    for bi in parts:
        for bj in parts:
            sums = a[np.ix_(bi, bj)].sum(axis=1)
            if float(sums.max() - sums.min()) > tol:
                return False
    return True


def quotient_spectrum(matrix, blocks, tol: float = 1e-12) -> Spectrum:
    """Eigenvalues of the quotient matrix of a symmetric ``matrix``.

    The quotient itself is not symmetric, but scaling by the square
    roots of the block sizes is a similarity onto a symmetric matrix,
    so the Jacobi solver applies.
    """
    a = np.asarray(matrix, dtype=float)
    q = quotient_matrix(a, blocks)
    scale = float(np.linalg.norm(a))
    if float(np.max(np.abs(a - a.T))) > 1e-12 * max(1.0, scale):
        raise DomainError("matrix must be symmetric")
    sizes = np.array([len(list(b)) for b in blocks], dtype=float)
    d = np.sqrt(sizes)
    sym = q * d[:, None] / d[None, :]
    sym = (sym + sym.T) / 2.0
    return full_spectrum(sym, tol=tol)


def quotient_radius_check(g: Graph, blocks, tol: float = 1e-12) -> tuple[float, float]:
    """(largest adjacency eigenvalue, largest quotient eigenvalue) for an
    equitable partition of ``g``; the two agree for equitable partitions.
    Rejects non-equitable partitions."""
    a = adjacency_matrix(g)
    if not is_equitable(a, blocks):
        raise DomainError("partition is not equitable")
    lam = spectral_radius(g, tol=tol)
    qlam = quotient_spectrum(a, blocks, tol=tol).radius
    return lam, qlam
