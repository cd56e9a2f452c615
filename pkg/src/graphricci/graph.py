"""Finite simple graphs, distance spheres and the local data around a vertex."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .errors import GraphParseError, GraphValidationError, UnknownVertexError


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with string vertex identifiers.

    ``vertices`` keeps first-appearance order; ``adjacency`` maps every
    vertex to the frozenset of its neighbours. Construction validates
    symmetry, absence of loops and absence of isolated vertices.
    """

    vertices: tuple[str, ...]
    adjacency: Mapping[str, frozenset[str]] = field(repr=False)

    def __post_init__(self):
        if set(self.vertices) != set(self.adjacency):
            raise GraphValidationError("vertex list and adjacency keys differ")
        for x, nbrs in self.adjacency.items():
            if x in nbrs:
                raise GraphValidationError(f"self-loop at {x!r}")
            if not nbrs:
                raise GraphValidationError(f"isolated vertex {x!r}")
            for y in nbrs:
                if x not in self.adjacency.get(y, ()):
                    raise GraphValidationError(f"asymmetric adjacency {x!r}-{y!r}")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]]) -> Graph:
        order: dict[str, None] = {}
        adj: dict[str, set[str]] = {}
        for a, b in edges:
            a, b = str(a), str(b)
            if a == b:
                raise GraphValidationError(f"self-loop at {a!r}")
            order.setdefault(a)
            order.setdefault(b)
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        return cls(tuple(order), {v: frozenset(n) for v, n in adj.items()})

    def __contains__(self, x) -> bool:
        return x in self.adjacency

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, x: str) -> frozenset[str]:
        try:
            return self.adjacency[x]
        except KeyError:
            raise UnknownVertexError(x) from None

    def degree(self, x: str) -> int:
        return len(self.neighbors(x))

    def edges(self) -> list[tuple[str, str]]:
        """Each edge once, as a lexicographically ordered pair, sorted."""
        return sorted((a, b) for a in self.adjacency for b in self.adjacency[a] if a < b)

    def num_edges(self) -> int:
        return sum(len(n) for n in self.adjacency.values()) // 2

    def has_edge(self, a: str, b: str) -> bool:
        return b in self.neighbors(a)

    def relabel(self, mapping: Mapping[str, str]) -> Graph:
        return Graph.from_edges((mapping[a], mapping[b]) for a, b in self.edges())


def load_graph(source: str) -> Graph:
    """Parse edge-list text: one ``u v`` pair per line, ``#`` comments."""
    edges = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(lineno, f"expected two vertex tokens, got {len(parts)}")
        if parts[0] == parts[1]:
            raise GraphValidationError(f"line {lineno}: self-loop at {parts[0]!r}")
        edges.append((parts[0], parts[1]))
    if not edges:
        raise GraphValidationError("edge list contains no edges")
    return Graph.from_edges(edges)


def distances(g: Graph, x: str, limit: int | None = None) -> dict[str, int]:
    """BFS distances from ``x``, optionally truncated at depth ``limit``."""
    g.neighbors(x)
    dist = {x: 0}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        if limit is not None and dist[y] >= limit:
            continue
        for z in g.adjacency[y]:
            if z not in dist:
                dist[z] = dist[y] + 1
                queue.append(z)
    return dist


def sphere(g: Graph, x: str, i: int) -> set[str]:
    """Vertices at distance exactly ``i`` from ``x``."""
    if i < 0:
        raise ValueError("radius must be nonnegative")
    return {v for v, d in distances(g, x, limit=i).items() if d == i}


def is_connected(g: Graph) -> bool:
    return len(distances(g, g.vertices[0])) == len(g)


def diameter(g: Graph) -> int:
    best = 0
    for x in g.vertices:
        dist = distances(g, x)
        if len(dist) != len(g):
            raise GraphValidationError("graph is disconnected")
        best = max(best, max(dist.values()))
    return best


@dataclass(frozen=True)
class LocalNeighborhood:
    """Everything within two steps of ``center`` that curvature depends on.

    ``n[u]`` counts 2-paths from the center to ``u``; ``t[v]`` counts
    triangles through the edge ``center-v``; ``adj1`` is the set of edges
    with both ends in ``sphere1``.
    """

    center: str
    sphere1: tuple[str, ...]
    sphere2: tuple[str, ...]
    n: Mapping[str, int]
    t: Mapping[str, int]
    adj1: frozenset[frozenset[str]]
    degrees: Mapping[str, int]
    up: Mapping[str, frozenset[str]]

    def joined(self, v: str, w: str) -> bool:
        return v != w and frozenset((v, w)) in self.adj1


def local_neighborhood(g: Graph, x: str) -> LocalNeighborhood:
    nb = g.neighbors(x)
    s1 = tuple(sorted(nb))
    s2_set = {u for v in s1 for u in g.adjacency[v]} - nb - {x}
    s2 = tuple(sorted(s2_set))
    n = {u: len(g.adjacency[u] & nb) for u in s2}
    t = {v: len(g.adjacency[v] & nb) for v in s1}
    adj1 = frozenset(frozenset((v, w)) for v, w in combinations(s1, 2) if w in g.adjacency[v])
    degrees = {y: len(g.adjacency[y]) for y in (x, *s1)}
    up = {v: frozenset(g.adjacency[v] & s2_set) for v in s1}
    return LocalNeighborhood(x, s1, s2, n, t, adj1, degrees, up)


def max_joint_triangles(g: Graph) -> int:
    """Largest number of triangles sharing a single edge."""
    return max((len(g.adjacency[a] & g.adjacency[b]) for a, b in g.edges()), default=0)


def find_triangle(g: Graph) -> tuple[str, str, str] | None:
    for a, b in g.edges():
        common = g.adjacency[a] & g.adjacency[b]
        if common:
            return (a, b, min(common))
    return None


def find_quadrilateral(g: Graph) -> tuple[str, str, str, str] | None:
    """Some 4-cycle ``a-b-c-d-a`` (chordless or not), or None."""
    for a in g.vertices:
        seen: dict[str, str] = {}
        for b in sorted(g.adjacency[a]):
            for c in sorted(g.adjacency[b]):
                if c == a:
                    continue
                if c in seen and seen[c] != b:
                    return (a, seen[c], c, b)
                seen.setdefault(c, b)
    return None
