"""Exact symmetric matrices, a Jacobi eigensolver and closed-form spectra."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ConsistencyError, DomainError, NumericError

JACOBI_RTOL = 1e-12
JACOBI_ATOL = 1e-300
MAX_SWEEPS = 100


@dataclass(frozen=True)
class SymmetricMatrix:
    """Dense symmetric matrix of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise DomainError("matrix dimension must be positive")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise DomainError("matrix is not square")
            for j in range(i):
                if row[j] != self.entries[j][i]:
                    raise DomainError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> SymmetricMatrix:
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.dim)), Fraction(0))

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.entries], dtype=float)

    def as_strings(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.entries]


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    iterations: int
    residual: float

    @property
    def min(self) -> float:
        return self.eigenvalues[0]

    @property
    def max(self) -> float:
        return self.eigenvalues[-1]


def _as_float_array(m) -> np.ndarray:
    if isinstance(m, SymmetricMatrix):
        return m.to_numpy()
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DomainError("expected a nonempty square matrix")
    if not np.array_equal(a, a.T):
        raise DomainError("matrix is not symmetric")
    return a


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings of a round-robin tournament: every index pair exactly once
    per sweep, pairs within a round disjoint."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for k in range(m // 2):
            p, q = players[k], players[m - 1 - k]
            if p < n and q < n:
                ps.append(min(p, q))
                qs.append(max(p, q))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def eigenvalues_symmetric(m, rtol: float = JACOBI_RTOL, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits every off-diagonal pair once in round-robin order;
    the disjoint rotations of one round are applied together. Iteration
    stops once the off-diagonal Frobenius norm is at most
    ``rtol * ||m||_F`` (or ``1e-300`` for the zero matrix).

    Raises
    ------
    NumericError
        If the tolerance is not reached within ``max_sweeps`` sweeps.
    """
    a = _as_float_array(m).copy()
    n = a.shape[0]
    tol = max(rtol * float(np.linalg.norm(a)), JACOBI_ATOL)
    off = _off_norm(a)
    sweeps = 0
    rounds = _round_robin(n) if n > 1 else []
    while off > tol:
        if sweeps >= max_sweeps:
            raise NumericError(f"Jacobi did not converge in {max_sweeps} sweeps", residual=off)
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            with np.errstate(over="ignore"):
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = 0.0
            a[q, p] = 0.0
        sweeps += 1
        off = _off_norm(a)
    return Spectrum(tuple(sorted(float(v) for v in np.diag(a))), sweeps, off)


def gershgorin_intervals(m) -> list[tuple]:
    """Real Gershgorin intervals ``[m_ii - R_i, m_ii + R_i]``.

    Exact (Fraction endpoints) for a SymmetricMatrix, floats otherwise.
    """
    if isinstance(m, SymmetricMatrix):
        rows = m.entries
    else:
        rows = _as_float_array(m).tolist()
    out = []
    for i, row in enumerate(rows):
        radius = sum(abs(v) for j, v in enumerate(row) if j != i)
        out.append((row[i] - radius, row[i] + radius))
    return out


def in_gershgorin_union(value: float, intervals, tol: float = 1e-9) -> bool:
    return any(float(lo) - tol <= value <= float(hi) + tol for lo, hi in intervals)


def tridiagonal_matrix(alpha, beta, a, b, c, n: int) -> np.ndarray:
    """Tridiagonal Toeplitz matrix with perturbed corners.

    Diagonal ``b`` except ``b - alpha`` top-left and ``b - beta``
    bottom-right; ``a`` below and ``c`` above the diagonal.
    """
    mat = np.zeros((n, n))
    for i in range(n):
        mat[i, i] = b
        if i + 1 < n:
            mat[i + 1, i] = a
            mat[i, i + 1] = c
    mat[0, 0] -= alpha
    mat[n - 1, n - 1] -= beta
    return mat


def tridiagonal_toeplitz_eigs(alpha, beta, a, b, c, n: int) -> list[float]:
    """Eigenvalues ``b + 2 sqrt(alpha beta) cos(i pi / n)``, i = 1..n.

    Valid only when ``a c > 0`` and ``alpha = beta = sqrt(a c) != 0``.
    """
    if n < 1:
        raise DomainError("n must be positive")
    if not a * c > 0:
        raise DomainError("need a*c > 0")
    root = math.sqrt(a * c)
    if not (math.isclose(alpha, root) and math.isclose(beta, root)):
        raise DomainError("need alpha = beta = sqrt(a*c)")
    scale = 2.0 * math.sqrt(alpha * beta)
    return [b + scale * math.cos(i * math.pi / n) for i in range(1, n + 1)]


def circulant_matrix(c: Sequence) -> np.ndarray:
    """Circulant with first column ``c`` (entry (i, j) is ``c[(i - j) mod n]``)."""
    n = len(c)
    return np.array([[c[(i - j) % n] for j in range(n)] for i in range(n)], dtype=float)


def circulant_eigs(c: Sequence) -> list[complex]:
    """``lambda_j = sum_k c[(n - k) mod n] * zeta**(k j)``, ``zeta = exp(2 pi i / n)``."""
    n = len(c)
    if n < 1:
        raise DomainError("need at least one coefficient")
    out = []
    for j in range(n):
        out.append(sum(c[(n - k) % n] * cmath.exp(2j * math.pi * k * j / n) for k in range(n)))
    return out


def real_parts(values: Sequence[complex], tol: float = 1e-9) -> list[float]:
    """Drop imaginary parts below ``tol``; larger ones are an error."""
    out = []
    for z in values:
        if abs(z.imag) > tol:
            raise NumericError(f"eigenvalue {z} is not real", residual=abs(z.imag))
        out.append(z.real)
    return out


def schur_complement(q: Sequence[Sequence[Fraction]], keep: int) -> list[list[Fraction]]:
    """Exact Schur complement eliminating every index ``>= keep``.

    The eliminated block must be positive definite; this is checked by
    exact Gaussian elimination (all pivots strictly positive).
    """
    q = [[Fraction(v) for v in row] for row in q]
    n = len(q)
    for k in range(n - 1, keep - 1, -1):
        pivot = q[k][k]
        if pivot <= 0:
            raise ConsistencyError(f"eliminated block not positive definite (pivot {pivot} at {k})")
        col = [q[i][k] for i in range(k)]
        for i in range(k):
            if col[i] == 0:
                continue
            factor = col[i] / pivot
            row_i, row_k = q[i], q[k]
            for j in range(k):
                if row_k[j]:
                    row_i[j] -= factor * row_k[j]
    return [row[:keep] for row in q[:keep]]
