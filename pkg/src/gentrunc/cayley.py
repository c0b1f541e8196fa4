from __future__ import annotations

from typing import Sequence

from .graph import Graph
from .perm import Perm
from .permgroup import PermGroup


def _check_connection(connection: Sequence[Perm], member) -> None:
    cset = set(connection)
    for s in connection:
        if s.is_identity():
            raise ValueError("connection set must not contain the identity")
        if not member(s):
            raise ValueError("connection element is not in the group")
        if ~s not in cset:
            raise ValueError("connection set is not closed under inverses")


def cayley_graph(group: PermGroup, connection: Sequence[Perm]) -> Graph:
    """Cay(G; S) for ``G`` in a regular permutation representation.

    Vertex ``x`` stands for the unique element ``g`` with ``0^g = x``;
    ``g`` is joined to ``s*g`` for every ``s`` in ``connection``.
    """
    n = group.degree
    if group.order() != n or not group.is_transitive():
        raise ValueError("group must act regularly (e.g. a Todd-Coxeter regular representation)")
    _check_connection(connection, group.contains)
    elem = group.transversal(0)
    edges = set()
    for x in range(n):
        g = elem[x]
        for s in connection:
            y = g[s[0]]
            edges.add((min(x, y), max(x, y)))
    return Graph.from_edges(n, edges)


def cayley_graph_from_elements(elements: Sequence[Perm], connection: Sequence[Perm]) -> Graph:
    """Cay(G; S) for ``G`` listed explicitly; vertex ``i`` is ``elements[i]``."""
    index = {g: i for i, g in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("repeated group element")
    _check_connection(connection, index.__contains__)
    edges = set()
    for i, g in enumerate(elements):
        for s in connection:
            j = index.get(s * g)
            if j is None:
                raise ValueError("element list is not closed under multiplication")
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(len(elements), edges)
