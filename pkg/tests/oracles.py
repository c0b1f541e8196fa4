"""Independent reference computations used by the tests.

Nothing here calls the refinement search or Schreier-Sims; each oracle is a
plain exhaustive computation or comes from networkx.
"""
from __future__ import annotations

from collections import deque

import networkx as nx

from gentrunc.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def reference_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode("ascii").strip()


def reference_girth(g: Graph) -> float:
    return nx.girth(to_nx(g))


def brute_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms by backtracking over vertex images in order 0..n-1."""
    n = g.n
    adj = [set(g.neighbors(u)) for u in range(n)]
    deg = [len(a) for a in adj]
    image = [-1] * n
    used = [False] * n
    out = []

    def rec(u):
        if u == n:
            out.append(tuple(image))
            return
        for x in range(n):
            if used[x] or deg[x] != deg[u]:
                continue
            if all((w in adj[u]) == (image[w] in adj[x]) for w in range(u)):
                image[u] = x
                used[x] = True
                rec(u + 1)
                used[x] = False
        image[u] = -1

    rec(0)
    return out


def closure(gens: list[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    """Every element of the group generated by ``gens`` (breadth-first products)."""
    ident = tuple(range(n))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = tuple(s[x[i]] for i in range(n))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def is_auto(g: Graph, images) -> bool:
    return all(g.has_edge(images[u], images[w]) for u, w in g.edges())
