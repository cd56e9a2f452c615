"""Bakry-Emery style Ricci curvature of graphs.

Two independent routes to the local curvature at a vertex ``x``:

* :func:`local_ricci` assembles the curvature matrix ``A(x)`` from counts
  in the 2-neighbourhood and takes its smallest eigenvalue;
* :func:`local_ricci_oracle` never looks at those counts. It recovers the
  quadratic form ``f -> Gamma_2(f)(x)`` by polarising the operator
  definitions, eliminates the distance-2 variables exactly and divides by
  ``Gamma(f)(x) = 1/2 sum f(v)^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .errors import DomainError
from .graph import (
    Graph,
    LocalNeighborhood,
    find_quadrilateral,
    find_triangle,
    local_neighborhood,
    max_joint_triangles,
)
from .linalg import SymmetricMatrix, eigenvalues_symmetric, schur_complement

VertexFunction = Mapping[str, float]

# Triangle contributions to A(x). The diagonal gains 5/2 per triangle on the
# edge x-v and adjacent neighbours get -2 off the diagonal; this is what the
# third sum of the Gamma_2 expansion produces and what the oracle confirms.
TRIANGLE_DIAGONAL = Fraction(5, 2)
TRIANGLE_OFF_DIAGONAL = Fraction(-2)


def _value(f: VertexFunction, v: str):
    try:
        return f[v]
    except KeyError:
        raise DomainError(f"function is not defined at vertex {v!r}") from None


def delta(g: Graph, f: VertexFunction, x: str):
    fx = _value(f, x)
    return sum((_value(f, v) - fx for v in g.neighbors(x)), 0)


def gamma(g: Graph, f: VertexFunction, h: VertexFunction, x: str):
    fx, hx = _value(f, x), _value(h, x)
    total = sum(((fx - _value(f, v)) * (hx - _value(h, v)) for v in g.neighbors(x)), 0)
    return Fraction(total, 2) if isinstance(total, (int, Fraction)) else total / 2


def _half(value):
    return Fraction(value, 2) if isinstance(value, (int, Fraction)) else value / 2


def gamma2(g: Graph, f: VertexFunction, x: str):
    """``1/2 Delta(Gamma(f, f))(x) - Gamma(f, Delta f)(x)`` by composition.

    Only values of ``f`` on the ball of radius 2 around ``x`` are read.
    """
    ball1 = (x, *sorted(g.neighbors(x)))
    for v in ball1:
        for w in g.neighbors(v):
            _value(f, w)
    gf = {v: gamma(g, f, f, v) for v in ball1}
    lf = {v: delta(g, f, v) for v in ball1}
    return _half(delta(g, gf, x)) - gamma(g, f, lf, x)


def gamma2_expanded(g: Graph, f: VertexFunction, x: str):
    """Closed expansion of ``Gamma_2(f)(x)`` valid when ``f(x) = 0``."""
    if _value(f, x) != 0:
        raise DomainError("expanded form requires f(x) = 0")
    nbhd = local_neighborhood(g, x)
    s1 = nbhd.sphere1
    fv = {v: _value(f, v) for v in s1}
    paths = 0
    for u in nbhd.sphere2:
        fu = _value(f, u)
        for v in g.neighbors(u):
            if v in fv:
                paths += (fu - 2 * fv[v]) ** 2
    total = _half(paths) + sum(fv.values(), 0) ** 2
    for v, w in combinations(s1, 2):
        if nbhd.joined(v, w):
            total += 2 * (fv[v] - fv[w]) ** 2 + _half(fv[v] ** 2 + fv[w] ** 2)
    dx = nbhd.degrees[x]
    for v in s1:
        total += _half(4 - dx - nbhd.degrees[v]) * fv[v] ** 2
    return _half(total)


@dataclass(frozen=True)
class CurvatureMatrix:
    center: str
    order: tuple[str, ...]
    matrix: SymmetricMatrix


def curvature_matrix(nbhd: LocalNeighborhood) -> CurvatureMatrix:
    """Exact ``A(x)``; its smallest eigenvalue is the local curvature."""
    s1 = nbhd.sphere1
    dx = nbhd.degrees[nbhd.center]
    inv_n = {u: Fraction(1, k) for u, k in nbhd.n.items()}
    rows = []
    for i, v in enumerate(s1):
        row = []
        for j, w in enumerate(s1):
            if i == j:
                val = sum((2 - 2 * inv_n[u] for u in nbhd.up[v]), Fraction(0))
                val += 1 + Fraction(4 - dx - nbhd.degrees[v], 2)
                val += TRIANGLE_DIAGONAL * nbhd.t[v]
            else:
                val = -2 * sum((inv_n[u] for u in nbhd.up[v] & nbhd.up[w]), Fraction(0))
                val += 1
                if nbhd.joined(v, w):
                    val += TRIANGLE_OFF_DIAGONAL
            row.append(val)
        rows.append(tuple(row))
    return CurvatureMatrix(nbhd.center, s1, SymmetricMatrix(tuple(rows)))


def local_ricci(g: Graph, x: str) -> float:
    return eigenvalues_symmetric(curvature_matrix(local_neighborhood(g, x)).matrix).min


def gamma2_form(g: Graph, x: str) -> tuple[tuple[str, ...], list[list[Fraction]]]:
    """Matrix of the quadratic form ``f -> Gamma_2(f)(x)`` on ``f(x) = 0``.

    Variables are the values on the distance-1 sphere followed by the
    distance-2 sphere. Entries come from polarisation of :func:`gamma2`.
    """
    s1 = sorted(g.neighbors(x))
    s2 = sorted({u for v in s1 for u in g.neighbors(v)} - set(s1) - {x})
    variables = (*s1, *s2)
    base = {x: 0, **{v: 0 for v in variables}}

    def q(*support):
        f = dict(base)
        for v in support:
            f[v] += 1
        return gamma2(g, f, x)

    diag = [q(v) for v in variables]
    n = len(variables)
    form = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = Fraction(diag[i])
        for j in range(i + 1, n):
            val = Fraction(q(variables[i], variables[j]) - diag[i] - diag[j], 2)
            form[i][j] = form[j][i] = val
    return variables, form


def local_ricci_oracle(g: Graph, x: str) -> float:
    variables, form = gamma2_form(g, x)
    d = g.degree(x)
    reduced = schur_complement(form, keep=d)
    doubled = SymmetricMatrix(tuple(tuple(2 * v for v in row) for row in reduced))
    return eigenvalues_symmetric(doubled).min


def triangle_upper_bound(g: Graph) -> float:
    return 2 + max_joint_triangles(g) / 2


def _edge_degree_pairs(g: Graph):
    for a, b in g.edges():
        da, db = g.degree(a), g.degree(b)
        yield da, db
        yield db, da


def triangle_free_lower_bound(g: Graph) -> float:
    """``4 - max (3 d(x) + d(y)) / 2`` over ordered adjacent pairs."""
    tri = find_triangle(g)
    if tri is not None:
        raise DomainError(f"graph has a triangle {tri}")
    return 4 - max(3 * dx + dy for dx, dy in _edge_degree_pairs(g)) / 2


def no_tri_quad_bounds(g: Graph) -> tuple[float, float]:
    """Curvature interval for graphs without 3- and 4-cycles.

    The upper end is ``min(2, min (4 + d(x) - d(v)) / 2)`` over ordered
    adjacent pairs: the right end of the Gershgorin interval of row ``v``
    in ``A(x)``, which dominates the diagonal entry ``A_vv(x)`` whenever
    ``d(x) >= 1``.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise DomainError(f"graph has a 3-cycle {'-'.join(tri)}")
    quad = find_quadrilateral(g)
    if quad is not None:
        raise DomainError(f"graph has a 4-cycle {'-'.join(quad)}")
    pairs = list(_edge_degree_pairs(g))
    lower = 4 - max(3 * dx + dy for dx, dy in pairs) / 2
    upper = min(2.0, min((4 + dx - dy) / 2 for dx, dy in pairs))
    return lower, upper


def regular_no_tri_quad_ricci(d: int) -> int:
    # d = 1 is K2, whose curvature is 2, not 1
    if d < 2:
        raise DomainError("formula needs degree >= 2")
    return 2 - d


@dataclass(frozen=True)
class Bound:
    name: str
    value: float
    satisfied: bool
    kind: str  # "upper" or "lower"


@dataclass(frozen=True)
class CurvatureReport:
    per_vertex: Mapping[str, float]
    global_: float
    bounds: tuple[Bound, ...] = ()
    oracle: Mapping[str, float] | None = field(default=None)

    @property
    def max_oracle_deviation(self) -> float | None:
        if self.oracle is None:
            return None
        return max(abs(self.per_vertex[v] - self.oracle[v]) for v in self.per_vertex)


def curvature_bounds(g: Graph, value: float, tol: float = 1e-9) -> list[Bound]:
    out = []
    up = triangle_upper_bound(g)
    out.append(Bound("triangle_upper", up, value <= up + tol, "upper"))
    if find_triangle(g) is None:
        low = triangle_free_lower_bound(g)
        out.append(Bound("triangle_free_lower", low, value >= low - tol, "lower"))
        if find_quadrilateral(g) is None:
            lo, hi = no_tri_quad_bounds(g)
            out.append(Bound("no_tri_quad_lower", lo, value >= lo - tol, "lower"))
            out.append(Bound("no_tri_quad_upper", hi, value <= hi + tol, "upper"))
    return out


def global_ricci(g: Graph, oracle: bool = False) -> CurvatureReport:
    per_vertex = {x: local_ricci(g, x) for x in g.vertices}
    value = min(per_vertex.values())
    oracle_values = {x: local_ricci_oracle(g, x) for x in g.vertices} if oracle else None
    return CurvatureReport(per_vertex, value, tuple(curvature_bounds(g, value)), oracle_values)
