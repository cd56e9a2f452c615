"""Coxeter diagrams, weak-order curvature and concrete Cayley graphs.

The curvature of a weak-order graph depends only on which simple
generators commute: it equals ``2 - lambda_max(M_W)`` where ``M_W`` is the
Laplacian of the unlabelled Coxeter diagram.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Sequence

from .errors import DomainError, ResourceError
from .graph import Graph
from .linalg import (
    SymmetricMatrix,
    circulant_eigs,
    eigenvalues_symmetric,
    real_parts,
    tridiagonal_toeplitz_eigs,
)

INFINITY = math.inf

FINITE_FAMILIES = ("A", "B", "D", "I2", "H3", "H4", "F4", "E6", "E7", "E8")
AFFINE_FAMILIES = ("~A", "~B", "~C", "~D", "~E6", "~E7", "~E8", "~F4", "~G2")
_FIXED_RANK = {"H3", "H4", "F4", "E6", "E7", "E8", "~E6", "~E7", "~E8", "~F4", "~G2"}

# Commonly quoted decimals for the E types, kept as reference
# constants (E6 is known to disagree with its own matrix; see tests).
REFERENCE_RICCI = {
    "E6": 2 - 4.3082775,
    "E7": 2 - 4.33420053,
    "E8": 2 - 4.34292308,
    "~E6": -2.414,
    "~E7": -2.36,
    "~E8": -2.34,
}


@dataclass(frozen=True)
class CoxeterDiagram:
    family: str
    parameter: int | None
    m: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = len(self.m)
        for i in range(n):
            if self.m[i][i] != 1:
                raise DomainError("diagonal of a Coxeter matrix must be 1")
            for j in range(i):
                if self.m[i][j] != self.m[j][i] or self.m[i][j] < 2:
                    raise DomainError(f"bad Coxeter entry at ({i}, {j})")

    @property
    def rank(self) -> int:
        return len(self.m)

    @property
    def label(self) -> str:
        if self.family == "I2":
            return f"I2:{self.parameter}"
        if self.family in _FIXED_RANK:
            return self.family
        if self.family == "product":
            return "product"
        return f"{self.family}{self.parameter}"

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in combinations(range(self.rank), 2) if self.m[i][j] >= 3]

    def is_path(self) -> bool:
        """True when the unlabelled diagram is a path ``0-1-...-(n-1)``."""
        return all((self.m[i][j] >= 3) == (j - i == 1) for i, j in combinations(range(self.rank), 2))


def _from_edges(family, parameter, rank, labelled_edges) -> CoxeterDiagram:
    m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for i, j, label in labelled_edges:
        m[i][j] = m[j][i] = label
    return CoxeterDiagram(family, parameter, tuple(tuple(row) for row in m))


def _path(rank, labels=None):
    labels = labels or [3] * (rank - 1)
    return [(i, i + 1, labels[i]) for i in range(rank - 1)]


def _arms(lengths):
    """Star-shaped tree: node 0 is the branch point, arms of given lengths."""
    edges, k = [], 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, k, 3))
            prev = k
            k += 1
    return k, edges


def diagram(family: str, parameter: int | None = None) -> CoxeterDiagram:
    """Standard Coxeter diagram of an irreducible finite or affine type.

    ``parameter`` is the usual subscript (rank for finite types, rank - 1
    for affine types, ``m`` for ``I2``). Affine diagrams are the extended
    Dynkin shapes; ``~A_n`` (n >= 2) is a cycle on ``n + 1`` nodes.
    """
    p = parameter

    def need(minimum):
        if p is None or p < minimum:
            raise DomainError(f"{family} needs parameter >= {minimum}, got {p}")

    if family == "A":
        need(1)
        return _from_edges(family, p, p, _path(p))
    if family == "B":
        need(2)
        return _from_edges(family, p, p, _path(p, [4] + [3] * (p - 2)))
    if family == "D":
        need(3)
        # 0 and 1 both attach to 2, then a path 2-3-...-(n-1)
        edges = [(0, 2, 3), (1, 2, 3)] + [(i, i + 1, 3) for i in range(2, p - 1)]
        return _from_edges(family, p, p, edges)
    if family == "I2":
        need(2)
        return _from_edges(family, p, 2, [(0, 1, p)] if p >= 3 else [])
    if family == "H3":
        return _from_edges(family, None, 3, _path(3, [5, 3]))
    if family == "H4":
        return _from_edges(family, None, 4, _path(4, [5, 3, 3]))
    if family == "F4":
        return _from_edges(family, None, 4, _path(4, [3, 4, 3]))
    if family in ("E6", "E7", "E8"):
        rank, edges = _arms((1, 2, int(family[1]) - 4))
        return _from_edges(family, None, rank, edges)
    if family == "~A":
        need(1)
        if p == 1:
            return _from_edges(family, p, 2, [(0, 1, INFINITY)])
        return _from_edges(family, p, p + 1, [(i, (i + 1) % (p + 1), 3) for i in range(p + 1)])
    if family == "~B":
        need(3)
        edges = [(0, 2, 3), (1, 2, 3)] + [(i, i + 1, 3) for i in range(2, p - 1)] + [(p - 1, p, 4)]
        return _from_edges(family, p, p + 1, edges)
    if family == "~C":
        need(2)
        return _from_edges(family, p, p + 1, _path(p + 1, [4] + [3] * (p - 2) + [4]))
    if family == "~D":
        need(4)
        if p == 4:
            return _from_edges(family, p, 5, [(0, 2, 3), (1, 2, 3), (3, 2, 3), (4, 2, 3)])
        edges = [(0, 2, 3), (1, 2, 3)] + [(i, i + 1, 3) for i in range(2, p - 2)]
        edges += [(p - 2, p - 1, 3), (p - 2, p, 3)]
        return _from_edges(family, p, p + 1, edges)
    if family == "~E6":
        return _from_edges(family, None, *_arms((2, 2, 2)))
    if family == "~E7":
        return _from_edges(family, None, *_arms((1, 3, 3)))
    if family == "~E8":
        return _from_edges(family, None, *_arms((1, 2, 5)))
    if family == "~F4":
        return _from_edges(family, None, 5, _path(5, [3, 3, 4, 3]))
    if family == "~G2":
        return _from_edges(family, None, 3, _path(3, [3, 6]))
    raise DomainError(f"unknown Coxeter family {family!r}")


_TAG = re.compile(r"^(~?)(A|B|C|D|E|F|G|H|I2:)(\d+)$")


def parse_tag(tag: str) -> list[CoxeterDiagram]:
    """Parse ``A3``, ``I2:7``, ``~D4`` or a product such as ``A3xB2``."""
    parts = tag.strip().split("x")
    if not tag.strip() or any(not part for part in parts):
        raise DomainError(f"cannot parse Coxeter tag {tag!r}")
    out = []
    for part in parts:
        match = _TAG.match(part)
        if match is None:
            raise DomainError(f"cannot parse Coxeter tag {part!r}")
        tilde, letter, num = match.groups()
        num = int(num)
        if letter == "I2:":
            if tilde:
                raise DomainError("no affine I2 type")
            out.append(diagram("I2", num))
            continue
        family = tilde + letter
        fixed = f"{family}{num}"
        if fixed in _FIXED_RANK:
            out.append(diagram(fixed))
        elif family in ("E", "F", "G", "H", "~E", "~F", "~G"):
            raise DomainError(f"unknown Coxeter type {part!r}")
        elif family == "C":
            raise DomainError("finite C_n coincides with B_n; use B")
        else:
            out.append(diagram(family, num))
    return out


def block_diagram(parts: Sequence[CoxeterDiagram]) -> CoxeterDiagram:
    """Diagram of a direct product: blocks on the diagonal, 2 elsewhere."""
    rank = sum(p.rank for p in parts)
    m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    offset = 0
    for p in parts:
        for i in range(p.rank):
            for j in range(p.rank):
                m[offset + i][offset + j] = p.m[i][j]
        offset += p.rank
    return CoxeterDiagram("product", None, tuple(tuple(r) for r in m))


def commutation_matrix(d: CoxeterDiagram) -> SymmetricMatrix:
    """``M_W``: -1 for non-commuting pairs, degree on the diagonal."""
    n = d.rank
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Fraction(sum(1 for k in range(n) if k != i and d.m[i][k] >= 3)))
            else:
                row.append(Fraction(-1 if d.m[i][j] >= 3 else 0))
        rows.append(tuple(row))
    return SymmetricMatrix(tuple(rows))


def diagram_laplacian(d: CoxeterDiagram) -> SymmetricMatrix:
    """Degree matrix minus adjacency of the unlabelled diagram."""
    n = d.rank
    adj = [[0] * n for _ in range(n)]
    for i, j in d.edges():
        adj[i][j] = adj[j][i] = 1
    return SymmetricMatrix.from_rows(
        [[(sum(adj[i]) if i == j else 0) - adj[i][j] for j in range(n)] for i in range(n)]
    )


def weak_order_ricci_spectral(d: CoxeterDiagram) -> float:
    return 2 - eigenvalues_symmetric(commutation_matrix(d)).max


@dataclass(frozen=True)
class Interval:
    lower: float
    upper: float

    def contains(self, value: float, tol: float = 1e-9) -> bool:
        return self.lower - tol <= value <= self.upper + tol


STRICTLY_LINEAR = {"A", "B", "I2", "H3", "H4", "F4", "~C", "~F4", "~G2"}


def closed_form_kind(d: CoxeterDiagram) -> str:
    """One of ``exact``, ``interval`` or ``reference``."""
    f, p = d.family, d.parameter
    if f in STRICTLY_LINEAR or (f == "~A" and p == 1) or (f == "D" and p == 3):
        return "exact"
    if f == "~A" or (f == "~D" and p == 4):
        return "exact"
    if f in ("D", "~B", "~D"):
        return "interval"
    if f in REFERENCE_RICCI:
        return "reference"
    raise DomainError(f"no closed form for {d.label}")


def weak_order_ricci_closed_form(d: CoxeterDiagram) -> float | Interval:
    f, p = d.family, d.parameter
    kind = closed_form_kind(d)
    if kind == "reference":
        return REFERENCE_RICCI[f]
    if kind == "interval":
        return Interval(-4.0, -2.0)
    if f == "~D":
        return -3.0
    if f == "~A" and p >= 2:
        k = d.rank
        lam = real_parts(circulant_eigs([2, -1] + [0] * (k - 3) + [-1]))
        return 2 - max(lam)
    # path-shaped diagram: path Laplacian is Wen's matrix with a=c=-1, b=2
    n = d.rank
    if n == 1:
        return 2.0
    return 2 - max(tridiagonal_toeplitz_eigs(1, 1, -1, 2, -1, n))


def product_ricci(parts: Sequence[CoxeterDiagram]) -> float:
    if not parts:
        raise DomainError("product needs at least one factor")
    return min(weak_order_ricci_spectral(p) for p in parts)


# --- concrete models -------------------------------------------------------

MODEL_CAPS = {"symmetric": 5, "signed": 4, "even-signed": 4, "dihedral": 50}


@dataclass(frozen=True)
class GroupModel:
    """A Coxeter group realised by permutations, signed permutations or
    dihedral normal forms, with its simple generators in diagram order."""

    kind: str
    parameter: int
    identity: tuple
    generators: tuple[tuple, ...]
    multiply: Callable[[tuple, tuple], tuple]
    encode: Callable[[tuple], str]

    def power(self, w: tuple, k: int) -> tuple:
        out = self.identity
        for _ in range(k):
            out = self.multiply(out, w)
        return out


def _signed_mul(a, b):
    # one-line notation on 1..n (signs allowed), composition a after b
    return tuple(a[abs(v) - 1] if v > 0 else -a[abs(v) - 1] for v in b)


def _dihedral_mul(a, b, m):
    (r1, f1), (r2, f2) = a, b
    return ((r1 + (-r2 if f1 else r2)) % m, f1 ^ f2)


def _join(w):
    return ",".join(str(v) for v in w)


def symmetric_model(n: int) -> GroupModel:
    """Type A_n as permutations of n + 1 points; s_i swaps positions i, i+1."""
    if not 1 <= n <= MODEL_CAPS["symmetric"]:
        raise ResourceError(f"A_{n} outside the supported range 1..{MODEL_CAPS['symmetric']}")
    ident = tuple(range(1, n + 2))
    gens = []
    for i in range(n):
        s = list(ident)
        s[i], s[i + 1] = s[i + 1], s[i]
        gens.append(tuple(s))
    return GroupModel("symmetric", n, ident, tuple(gens), _signed_mul, _join)


def signed_model(n: int, even: bool = False) -> GroupModel:
    kind = "even-signed" if even else "signed"
    low = 3 if even else 2
    if not low <= n <= MODEL_CAPS[kind]:
        raise ResourceError(f"{kind} model needs {low} <= n <= {MODEL_CAPS[kind]}")
    ident = tuple(range(1, n + 1))
    gens = []
    first = list(ident)
    if even:
        first[0], first[1] = -2, -1
    else:
        first[0] = -1
    gens.append(tuple(first))
    for i in range(n - 1):
        s = list(ident)
        s[i], s[i + 1] = s[i + 1], s[i]
        gens.append(tuple(s))
    return GroupModel(kind, n, ident, tuple(gens), _signed_mul, _join)


def dihedral_model(m: int) -> GroupModel:
    if not 2 <= m <= MODEL_CAPS["dihedral"]:
        raise ResourceError(f"I2({m}) outside the supported range 2..{MODEL_CAPS['dihedral']}")

    def encode(w):
        return f"{'s' if w[1] else 'r'}{w[0]}"

    return GroupModel(
        "dihedral", m, (0, 0), ((0, 1), (1, 1)), lambda a, b: _dihedral_mul(a, b, m), encode
    )


def model_for(d: CoxeterDiagram) -> GroupModel:
    """Concrete model whose generator order matches the diagram's nodes."""
    f, p = d.family, d.parameter
    if f == "A":
        return symmetric_model(p)
    if f == "B":
        return signed_model(p)
    if f == "D":
        return signed_model(p, even=True)
    if f == "I2":
        return dihedral_model(p)
    raise DomainError(f"no concrete model for {d.label}")


def generator_order(model: GroupModel, a: tuple, b: tuple, limit: int = 100) -> int:
    prod = model.multiply(a, b)
    w = prod
    for k in range(1, limit + 1):
        if w == model.identity:
            return k
        w = model.multiply(w, prod)
    return 0


def check_relations(model: GroupModel, d: CoxeterDiagram) -> bool:
    """Every generator is an involution and ``s_i s_j`` has order exactly ``m_ij``."""
    gens = model.generators
    if len(gens) != d.rank:
        return False
    for i, s in enumerate(gens):
        if s == model.identity or model.multiply(s, s) != model.identity:
            return False
        for j in range(i + 1, d.rank):
            if generator_order(model, s, gens[j]) != d.m[i][j]:
                return False
    return True


def group_elements(model: GroupModel) -> list[tuple]:
    seen = {model.identity: None}
    queue = deque([model.identity])
    while queue:
        w = queue.popleft()
        for s in model.generators:
            ws = model.multiply(w, s)
            if ws not in seen:
                seen[ws] = None
                queue.append(ws)
    return list(seen)


def weak_order_graph(model: GroupModel) -> Graph:
    """Right Cayley graph on the simple generators (Hasse graph of the weak order)."""
    if model.parameter > MODEL_CAPS[model.kind]:
        raise ResourceError(f"{model.kind} model capped at {MODEL_CAPS[model.kind]}")
    edges = []
    for w in group_elements(model):
        for s in model.generators:
            ws = model.multiply(w, s)
            edges.append((model.encode(w), model.encode(ws)))
    return Graph.from_edges(edges)


def bruhat_graph_symmetric(n: int) -> Graph:
    """Undirected Bruhat graph of S_n: w joined to t w for every transposition t."""
    if not 2 <= n <= 5:
        raise ResourceError("Bruhat graphs supported for 2 <= n <= 5")
    edges = []
    for w in permutations(range(1, n + 1)):
        for a, b in combinations(range(1, n + 1), 2):
            tw = tuple(b if v == a else a if v == b else v for v in w)
            edges.append((_join(w), _join(tw)))
    return Graph.from_edges(edges)


# --- orders and reflection counts --------------------------------------------

_EXCEPTIONAL = {
    "H3": (120, 15),
    "H4": (14400, 60),
    "F4": (1152, 24),
    "E6": (51840, 36),
    "E7": (2903040, 63),
    "E8": (696729600, 120),
}


def group_order(d: CoxeterDiagram) -> int:
    f, p = d.family, d.parameter
    if f == "A":
        return math.factorial(p + 1)
    if f == "B":
        return 2**p * math.factorial(p)
    if f == "D":
        return 2 ** (p - 1) * math.factorial(p)
    if f == "I2":
        return 2 * p
    if f in _EXCEPTIONAL:
        return _EXCEPTIONAL[f][0]
    raise DomainError(f"{d.label} is not a finite irreducible type")


def reflection_count(d: CoxeterDiagram) -> int:
    f, p = d.family, d.parameter
    if f == "A":
        return p * (p + 1) // 2
    if f == "B":
        return p * p
    if f == "D":
        return p * (p - 1)
    if f == "I2":
        return p
    if f in _EXCEPTIONAL:
        return _EXCEPTIONAL[f][1]
    raise DomainError(f"{d.label} is not a finite irreducible type")
