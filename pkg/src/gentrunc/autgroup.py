"""Automorphism groups, canonical forms and isomorphism via individualization-refinement.

The search follows the usual McKay scheme.  Partitions are refined to
equitable ones by neighbour counts; the target cell is the first smallest
non-singleton cell; every vertex of it is individualized in turn.  Subtrees
are pruned only with automorphisms already found: children in one orbit of
the found automorphisms fixing the current prefix are equivalent, and a leaf
equivalent to the first or the best leaf lets the search jump back to the
common ancestor.  The canonical labeling is the leaf whose relabeled
adjacency rows are lexicographically smallest.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graph import Graph, encode_graph6
from .perm import Perm
from .permgroup import PermGroup, is_automorphism


@dataclass(frozen=True)
class CanonicalForm:
    string: str
    relabeling: Perm  # vertex v of the input becomes relabeling[v]


@dataclass(frozen=True)
class SearchResult:
    generators: tuple[Perm, ...]
    labeling: tuple[int, ...]  # position -> vertex at the canonical leaf
    leaves: int


class _Partition:
    """Ordered partition: ``lab`` lists vertices, cells are contiguous runs.

    ``cellof[v]`` is the start position of the cell containing ``v`` and
    ``size[s]`` the length of the cell starting at ``s``.
    """

    __slots__ = ("lab", "cellof", "size")

    def __init__(self, lab, cellof, size):
        self.lab = lab
        self.cellof = cellof
        self.size = size

    def copy(self) -> "_Partition":
        return _Partition(self.lab[:], self.cellof[:], self.size[:])

    def is_discrete(self) -> bool:
        return all(self.size[s] == 1 for s in set(self.cellof))


def _initial_partition(n: int, colors: Sequence[int] | None) -> tuple[_Partition, list[int]]:
    if colors is None:
        colors = [0] * n
    order = sorted(range(n), key=lambda v: (colors[v], v))
    cellof = [0] * n
    size = [0] * n
    starts = []
    s = 0
    while s < n:
        e = s
        while e < n and colors[order[e]] == colors[order[s]]:
            e += 1
        for p in range(s, e):
            cellof[order[p]] = s
        size[s] = e - s
        starts.append(s)
        s = e
    return _Partition(order, cellof, size), starts


def _refine(nbrs, part: _Partition, splitters: list[int]) -> None:
    """Refine ``part`` in place to the coarsest equitable refinement."""
    lab, cellof, size = part.lab, part.cellof, part.size
    pending = set(splitters)
    queue = sorted(pending)
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        pending.discard(w)
        cnt: dict[int, int] = {}
        for x in lab[w:w + size[w]]:
            for y in nbrs[x]:
                cnt[y] = cnt.get(y, 0) + 1
        touched = sorted({cellof[y] for y in cnt})
        for s in touched:
            length = size[s]
            if length == 1:
                continue
            members = lab[s:s + length]
            counts = [cnt.get(v, 0) for v in members]
            first = counts[0]
            if all(c == first for c in counts):
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(members, counts):
                groups.setdefault(c, []).append(v)
            p = s
            new_starts = []
            for c in sorted(groups):
                grp = groups[c]
                lab[p:p + len(grp)] = grp
                for v in grp:
                    cellof[v] = p
                size[p] = len(grp)
                new_starts.append(p)
                p += len(grp)
            for ns in new_starts:
                if ns not in pending:
                    pending.add(ns)
                    queue.append(ns)


class _Search:
    def __init__(self, g: Graph, colors: Sequence[int] | None):
        self.n = g.n
        self.nbrs = [g.neighbors(u) for u in range(g.n)]
        self.colors = colors
        self.gens: list[tuple[int, ...]] = []
        self.first = None  # (cert, lab, path)
        self.best = None
        self.leaves = 0

    def run(self) -> SearchResult:
        part, starts = _initial_partition(self.n, self.colors)
        if self.n:
            _refine(self.nbrs, part, starts)
            self._search(part, [])
        lab = tuple(self.best[1]) if self.best else ()
        gens = tuple(Perm(g, check=False) for g in self.gens)
        return SearchResult(gens, lab, self.leaves)

    def _certificate(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        nbrs = self.nbrs
        rows = []
        for v in lab:
            r = 0
            for w in nbrs[v]:
                r |= 1 << pos[w]
            rows.append(r)
        return tuple(rows)

    def _orbit_roots(self, path: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[p] == p for p in path):
                for x in range(self.n):
                    a, b = find(x), find(g[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(x) for x in range(self.n)]

    def _leaf(self, lab: list[int], path: list[int]) -> int | None:
        self.leaves += 1
        cert = self._certificate(lab)
        if self.first is None:
            self.first = self.best = (cert, lab, path)
            return None
        for ref in (self.first, self.best):
            if cert == ref[0]:
                gamma = [0] * self.n
                for a, b in zip(ref[1], lab):
                    gamma[a] = b
                self.gens.append(tuple(gamma))
                return _common_prefix(path, ref[2])
        if cert < self.best[0]:
            self.best = (cert, lab, path)
        return None

    def _search(self, part: _Partition, path: list[int]) -> int | None:
        size = part.size
        target, tsize = -1, self.n + 1
        s = 0
        while s < self.n:
            if 1 < size[s] < tsize:
                target, tsize = s, size[s]
            s += size[s]
        if target < 0:
            return self._leaf(part.lab, path)
        depth = len(path)
        candidates = sorted(part.lab[target:target + tsize])
        explored: list[int] = []
        ngens_seen = -1
        roots = None
        for x in candidates:
            if explored:
                if ngens_seen != len(self.gens):
                    roots = self._orbit_roots(path)
                    ngens_seen = len(self.gens)
                rx = roots[x]
                if any(roots[y] == rx for y in explored):
                    continue
            explored.append(x)
            child = part.copy()
            lab, cellof, csize = child.lab, child.cellof, child.size
            i = lab.index(x, target, target + tsize)
            lab[target], lab[i] = lab[i], lab[target]
            csize[target] = 1
            csize[target + 1] = tsize - 1
            for v in lab[target + 1:target + tsize]:
                cellof[v] = target + 1
            _refine(self.nbrs, child, [target])
            jump = self._search(child, path + [x])
            if jump is not None and jump < depth:
                return jump
        return None


def _common_prefix(a: list[int], b: list[int]) -> int:
    k = 0
    while k < len(a) and k < len(b) and a[k] == b[k]:
        k += 1
    return k


@lru_cache(maxsize=512)
def _search_cached(g: Graph, colors: tuple[int, ...] | None) -> SearchResult:
    return _Search(g, colors).run()


def search(g: Graph, colors: Sequence[int] | None = None) -> SearchResult:
    return _search_cached(g, tuple(colors) if colors is not None else None)


def automorphism_group(g: Graph, colors: Sequence[int] | None = None) -> PermGroup:
    """Full automorphism group (colour-preserving if ``colors`` is given)."""
    res = search(g, colors)
    return PermGroup(g.n, res.generators)


def canonical_form(g: Graph) -> CanonicalForm:
    lab = search(g).labeling
    relabel = [0] * g.n
    for i, v in enumerate(lab):
        relabel[v] = i
    return CanonicalForm(encode_graph6(g.relabel(relabel)), Perm(relabel, check=False))


def are_isomorphic(a: Graph, b: Graph) -> Perm | None:
    """An isomorphism ``a -> b`` as a vertex map, or ``None``."""
    if a.n != b.n or a.num_edges != b.num_edges or sorted(a.degrees()) != sorted(b.degrees()):
        return None
    ca, cb = canonical_form(a), canonical_form(b)
    if ca.string != cb.string:
        return None
    inv_b = ~cb.relabeling
    mapping = ca.relabeling * inv_b
    for u, w in a.edges():
        if not b.has_edge(mapping[u], mapping[w]):
            raise AssertionError("canonical forms agree but the induced map is not an isomorphism")
    return mapping


def is_vertex_transitive(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return automorphism_group(g).is_transitive()


def verify_automorphisms(g: Graph, group: PermGroup) -> bool:
    return all(is_automorphism(g, s) for s in group.generators)
