"""Named graph families and the fixed test corpus used by ``verify``."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, is_connected


def path_graph(n: int) -> Graph:
    return Graph.from_edges((str(i), str(i + 1)) for i in range(n - 1))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges((str(i), str((i + 1) % n)) for i in range(n))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges((str(a), str(b)) for a, b in combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(("c", f"l{i}") for i in range(leaves))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges((str(a), str(b)) for a, b in outer + spokes + inner)


def regular_tree(d: int, depth: int) -> Graph:
    """Ball of radius ``depth`` in the infinite ``d``-regular tree, rooted at ``"r"``."""
    edges = []
    frontier = ["r"]
    for level in range(depth):
        nxt = []
        for node in frontier:
            children = d if level == 0 else d - 1
            for k in range(children):
                child = f"{node}.{k}"
                edges.append((node, child))
                nxt.append(child)
        frontier = nxt
    return Graph.from_edges(edges)


def _tree_code(adj: dict[int, list[int]], root: int, parent: int | None) -> str:
    return "(" + "".join(sorted(_tree_code(adj, c, root) for c in adj[root] if c != parent)) + ")"


def _tree_canonical(n: int, edges: list[tuple[int, int]]) -> str:
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    # peel leaves down to the one or two centres
    degree = {v: len(adj[v]) for v in adj}
    layer = [v for v in adj if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in adj[leaf]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_tree_code(adj, c, None) for c in layer)


def nonisomorphic_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on ``n`` vertices."""
    if n < 2:
        return []
    level = {_tree_canonical(2, [(0, 1)]): [(0, 1)]}
    for size in range(3, n + 1):
        nxt: dict[str, list[tuple[int, int]]] = {}
        for edges in level.values():
            for v in range(size - 1):
                grown = edges + [(v, size - 1)]
                nxt.setdefault(_tree_canonical(size, grown), grown)
        level = nxt
    return [Graph.from_edges((str(a), str(b)) for a, b in edges) for _, edges in sorted(level.items())]


def random_graph(rng: random.Random, n_min: int = 2, n_max: int = 9) -> Graph:
    """Connected Erdos-Renyi sample (rejection until connected)."""
    while True:
        n = rng.randint(n_min, n_max)
        p = rng.uniform(0.2, 0.9)
        edges = [(str(a), str(b)) for a, b in combinations(range(n), 2) if rng.random() < p]
        if not edges:
            continue
        g = Graph.from_edges(edges)
        if len(g) == n and is_connected(g):
            return g


def small_corpus(max_tree: int = 10) -> dict[str, Graph]:
    """Trees, cycles, complete graphs and the Petersen graph."""
    out: dict[str, Graph] = {}
    for n in range(2, max_tree + 1):
        for k, tree in enumerate(nonisomorphic_trees(n)):
            out[f"tree{n}_{k}"] = tree
    for n in range(3, 11):
        out[f"C{n}"] = cycle_graph(n)
    for n in range(2, 7):
        out[f"K{n}"] = complete_graph(n)
    out["petersen"] = petersen_graph()
    return out
