"""Laplacian spectra, spectral gaps and isoperimetric checks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Collection

import numpy as np

from .curvature import global_ricci
from .errors import DomainError, ResourceError
from .graph import Graph, diameter, is_connected
from .linalg import eigenvalues_symmetric

ZERO_MODE_THRESHOLD = 1e-7
EXHAUSTIVE_CAP = 14
DEFAULT_SAMPLES = 100_000


@dataclass(frozen=True)
class SpectralProfile:
    laplacian_eigenvalues: tuple[float, ...]
    spectral_gap: float
    diameter: int


def laplacian(g: Graph) -> np.ndarray:
    """``D - A`` in the order of ``g.vertices``."""
    index = {v: i for i, v in enumerate(g.vertices)}
    n = len(g)
    mat = np.zeros((n, n))
    for v, nbrs in g.adjacency.items():
        i = index[v]
        mat[i, i] = len(nbrs)
        for w in nbrs:
            mat[i, index[w]] = -1.0
    return mat


def spectral_profile(g: Graph) -> SpectralProfile:
    if not is_connected(g):
        raise DomainError("spectral gap needs a connected graph")
    eigs = eigenvalues_symmetric(laplacian(g)).eigenvalues
    gap = next(v for v in eigs if v > ZERO_MODE_THRESHOLD)
    return SpectralProfile(eigs, gap, diameter(g))


@dataclass(frozen=True)
class Verdict:
    status: str  # "pass", "fail" or "not applicable"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def check_gap_vs_curvature(g: Graph, tol: float = 1e-9) -> Verdict:
    ric = global_ricci(g).global_
    if ric <= tol:
        return Verdict("not applicable", f"curvature {ric:.12g} is not positive")
    gap = spectral_profile(g).spectral_gap
    status = "pass" if gap >= ric - tol else "fail"
    return Verdict(status, f"gap {gap:.12g} vs curvature {ric:.12g}")


def boundary_size(g: Graph, subset: Collection[str]) -> int:
    """Number of edges with exactly one end in ``subset``."""
    inside = set(subset)
    for v in inside:
        g.neighbors(v)
    return sum(1 for v in inside for w in g.adjacency[v] if w not in inside)


def isoperimetric_rhs(gap: float, K: float, size_a: int, size_v: int) -> float:
    """``1/2 min(sqrt(gap), gap / sqrt(2|K|)) |A| (1 - |A|/|V|)``."""
    if K == 0:
        raise DomainError("curvature bound K must be nonzero")
    if gap <= 0:
        raise DomainError("spectral gap must be positive")
    if not 0 <= size_a <= size_v:
        raise DomainError("need 0 <= |A| <= |V|")
    coeff = 0.5 * min(math.sqrt(gap), gap / math.sqrt(2 * abs(K)))
    return coeff * size_a * (1 - size_a / size_v)


@dataclass(frozen=True)
class IsoperimetryVerdict:
    status: str
    mode: str  # "exhaustive", "sampled" or "none"
    checked: int
    worst_subset: tuple[str, ...] = ()
    worst_slack: float = math.inf
    curvature: float = math.nan
    gap: float = math.nan

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _cut_sizes(edges_idx: np.ndarray, members: np.ndarray) -> np.ndarray:
    # members: (k, n) boolean; returns |boundary| for each of the k subsets
    return np.count_nonzero(members[:, edges_idx[:, 0]] != members[:, edges_idx[:, 1]], axis=1)


def verify_isoperimetry(
    g: Graph,
    mode: str = "auto",
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    tol: float = 1e-9,
    curvature: float | None = None,
) -> IsoperimetryVerdict:
    """Check ``|boundary(A)| >= isoperimetric_rhs`` over vertex subsets.

    With ``K`` equal to the exact global curvature. Graphs with at most
    ``EXHAUSTIVE_CAP`` vertices are checked on every subset; larger graphs
    on ``samples`` uniform random subsets drawn from a seeded generator
    (``mode="auto"``). ``mode="exhaustive"`` on a larger graph raises
    :class:`ResourceError`.
    """
    n = len(g)
    if mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exhaustive" and n > EXHAUSTIVE_CAP:
        raise ResourceError(f"exhaustive check capped at {EXHAUSTIVE_CAP} vertices, got {n}")
    if mode == "auto":
        mode = "exhaustive" if n <= EXHAUSTIVE_CAP else "sampled"
    ric = global_ricci(g).global_ if curvature is None else curvature
    if abs(ric) <= tol:
        return IsoperimetryVerdict("not applicable", "none", 0, curvature=ric)
    gap = spectral_profile(g).spectral_gap
    coeff = 0.5 * min(math.sqrt(gap), gap / math.sqrt(2 * abs(ric)))
    index = {v: i for i, v in enumerate(g.vertices)}
    edges_idx = np.array([(index[a], index[b]) for a, b in g.edges()], dtype=int)

    if mode == "exhaustive":
        masks = np.arange(1 << n, dtype=np.int64)
        blocks = [((masks[:, None] >> np.arange(n)) & 1).astype(bool)]
    else:
        rng = np.random.default_rng(seed)
        blocks = []
        remaining = samples
        while remaining > 0:
            k = min(remaining, 10_000)
            blocks.append(rng.random((k, n)) < 0.5)
            remaining -= k

    worst_slack, worst_members, checked = math.inf, None, 0
    for members in blocks:
        sizes = members.sum(axis=1)
        rhs = coeff * sizes * (1 - sizes / n)
        slack = _cut_sizes(edges_idx, members) - rhs
        k = int(np.argmin(slack))
        if slack[k] < worst_slack:
            worst_slack, worst_members = float(slack[k]), members[k]
        checked += len(members)
    worst = tuple(v for v, inside in zip(g.vertices, worst_members) if inside)
    status = "pass" if worst_slack >= -tol else "fail"
    return IsoperimetryVerdict(status, mode, checked, worst, worst_slack, ric, gap)


def cayley_gap_lower_bound(group_order: int, generator_count: int, diameter: int) -> float:
    """``|G| / (d |S|^d)``; returns 0.0 when the denominator overflows."""
    if min(group_order, generator_count, diameter) <= 0:
        raise DomainError("all inputs must be positive")
    try:
        denom = diameter * math.pow(generator_count, diameter)
    except OverflowError:
        return 0.0
    if math.isinf(denom):
        return 0.0
    return group_order / denom


def coxeter_isoperimetric_coefficient(
    order: int, generators: int, reflections: int, curvature: float, tol: float = 1e-9
) -> tuple[float, float]:
    """Coefficient ``c`` in ``|boundary(A)| >= c |A| (1 - |A|/|W|)`` for a
    finite Coxeter group, plugging the Cayley gap bound with diameter
    ``|T|`` into the isoperimetric inequality.

    Returns ``(c, log10(c))``; the log stays finite when ``c`` underflows.
    With ``curvature == 0`` (a dihedral factor) the square-root branch is used.
    """
    log_lam = math.log10(order) - reflections * math.log10(generators) - math.log10(reflections)
    if abs(curvature) <= tol:
        log_c = math.log10(0.5) + log_lam / 2
    else:
        log_c = math.log10(0.5) + log_lam - 0.5 * math.log10(2 * abs(curvature))
    return 10.0**log_c, log_c
