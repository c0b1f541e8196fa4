"""Finitely generated permutation groups backed by a deterministic Schreier-Sims BSGS."""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .perm import Perm, format_perm, parse_perm


class PermGroup:
    """A permutation group of degree ``degree`` generated by ``generators``.

    The base and strong generating set are built eagerly.  Base points are
    taken from ``base_prefix`` first and then in increasing point order, so
    transversals (and everything derived from them) are reproducible.
    """

    def __init__(self, degree: int, generators: Iterable[Perm] = (), base_prefix: Sequence[int] = ()):
        self.degree = degree
        self.generators = [g for g in generators]
        for g in self.generators:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in group of degree {degree}")
        self._identity = Perm.identity(degree)
        self.base: list[int] = []
        self.strong: list[Perm] = []
        # per level: point -> element u with base[i]^u = point, and its inverse
        self._trans: list[dict[int, Perm]] = []
        self._itrans: list[dict[int, Perm]] = []
        self._level_gens: list[list[Perm]] = []
        self._schreier_sims(list(base_prefix))

    # -- construction ------------------------------------------------------

    def _fixes_prefix(self, g: Perm, k: int) -> bool:
        return all(g[b] == b for b in self.base[:k])

    def _rebuild_level(self, i: int) -> None:
        gens = [s for s in self.strong if self._fixes_prefix(s, i)]
        self._level_gens[i] = gens
        root = self.base[i]
        trans = {root: self._identity}
        queue = deque([root])
        while queue:
            p = queue.popleft()
            up = trans[p]
            for s in gens:
                q = s[p]
                if q not in trans:
                    trans[q] = up * s
                    queue.append(q)
        self._trans[i] = trans
        self._itrans[i] = {p: ~u for p, u in trans.items()}

    def _add_base_point(self, point: int) -> None:
        self.base.append(point)
        self._trans.append({})
        self._itrans.append({})
        self._level_gens.append([])

    def _strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, len(self.base)):
            b = g[self.base[i]]
            inv = self._itrans[i].get(b)
            if inv is None:
                return g, i
            g = g * inv
        return g, len(self.base)

    def _schreier_sims(self, prefix: list[int]) -> None:
        for b in prefix:
            if b in self.base:
                raise ValueError(f"repeated base point {b}")
            self._add_base_point(b)
        for g in self.generators:
            if g.is_identity() or g in self.strong:
                continue
            self.strong.append(g)
            if all(g[b] == b for b in self.base):
                self._add_base_point(g.support()[0])
        for i in range(len(self.base)):
            self._rebuild_level(i)
        i = len(self.base) - 1
        while i >= 0:
            restart = False
            for p in list(self._trans[i]):
                up = self._trans[i][p]
                for s in self._level_gens[i]:
                    q = s[p]
                    h = up * s * self._itrans[i][q]
                    if h.images == self._identity.images:
                        continue
                    residue, j = self._strip(h, i + 1)
                    if j < len(self.base) or not residue.is_identity():
                        if j == len(self.base):
                            self._add_base_point(residue.support()[0])
                        self.strong.append(residue)
                        for lvl in range(i + 1, j + 1):
                            self._rebuild_level(lvl)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    # -- queries -------------------------------------------------------------

    def order(self) -> int:
        out = 1
        for t in self._trans:
            out *= len(t)
        return out

    def __len__(self) -> int:
        return self.order()

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        residue, j = self._strip(g)
        return j == len(self.base) and residue.is_identity()

    __contains__ = contains

    def basic_orbit_sizes(self) -> list[int]:
        return [len(t) for t in self._trans]

    def transversal(self, point: int) -> dict[int, Perm]:
        """Map each ``x`` in the orbit of ``point`` to an element sending ``point`` to ``x``.

        Elements are found by breadth-first search over the generators in
        order, so the choice is deterministic.
        """
        identity = self._identity
        trans = {point: identity}
        queue = deque([point])
        while queue:
            p = queue.popleft()
            up = trans[p]
            for s in self.generators:
                q = s[p]
                if q not in trans:
                    trans[q] = up * s
                    queue.append(q)
        return trans

    def orbit(self, point: int) -> list[int]:
        return sorted(self.transversal(point))

    def orbits(self) -> list[list[int]]:
        return _orbits(self.degree, self.generators)

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def stabilizer(self, v: int) -> "PermGroup":
        return point_stabilizer(self, v)

    def elements(self) -> Iterator[Perm]:
        """Every element, each exactly once."""
        levels = [list(t.values()) for t in self._trans]

        def rec(i: int, acc: Perm):
            if i < 0:
                yield acc
                return
            for u in levels[i]:
                yield from rec(i - 1, acc * u)

        yield from rec(len(levels) - 1, self._identity)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order()}, ngens={len(self.generators)})"


def _orbits(n: int, gens: Sequence[Perm]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def schreier_sims(gens: Sequence[Perm], degree: int | None = None) -> PermGroup:
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator list")
        degree = gens[0].degree
    return PermGroup(degree, gens)


def point_stabilizer(g: PermGroup, v: int) -> PermGroup:
    """Generators of ``G_v``; the stabilizer group keeps ``degree``."""
    if not 0 <= v < g.degree:
        raise ValueError(f"point {v} out of range")
    h = PermGroup(g.degree, g.generators, base_prefix=[v])
    gens = h._level_gens[1] if len(h.base) > 1 else []
    return PermGroup(g.degree, gens)


def pointwise_stabilizer(g: PermGroup, points: Sequence[int]) -> PermGroup:
    h = PermGroup(g.degree, g.generators, base_prefix=list(points))
    k = len(points)
    gens = h._level_gens[k] if len(h.base) > k else []
    return PermGroup(g.degree, gens)


def orbits_on_pairs(g: PermGroup, domain: Iterable[int]) -> list[list[tuple[int, int]]]:
    """Orbits of ``g`` on the unordered pairs of ``domain`` (pairs as sorted tuples)."""
    dom = sorted(set(domain))
    dset = set(dom)
    for s in g.generators:
        if any(s[x] not in dset for x in dom):
            raise ValueError("domain is not invariant under the group")
    seen: set[tuple[int, int]] = set()
    out = []
    for pair in combinations(dom, 2):
        if pair in seen:
            continue
        orbit = [pair]
        seen.add(pair)
        k = 0
        while k < len(orbit):
            a, b = orbit[k]
            k += 1
            for s in g.generators:
                x, y = s[a], s[b]
                q = (x, y) if x < y else (y, x)
                if q not in seen:
                    seen.add(q)
                    orbit.append(q)
        out.append(sorted(orbit))
    return out


class Transitivity(NamedTuple):
    transitive: bool
    two_transitive: bool
    arc_transitive_on_graph: bool | None


def is_automorphism(graph, p: Perm) -> bool:
    if p.degree != graph.n:
        return False
    img = p.images
    for u in range(graph.n):
        row = 0
        for w in graph.neighbors(u):
            row |= 1 << img[w]
        if row != graph.adj[img[u]]:
            return False
    return True


def transitivity(g: PermGroup, graph=None) -> Transitivity:
    if graph is not None:
        if graph.n != g.degree:
            raise ValueError("group degree differs from graph order")
        for s in g.generators:
            if not is_automorphism(graph, s):
                raise ValueError(f"generator {format_perm(s)} is not an automorphism of the graph")
    transitive = g.is_transitive()
    two = False
    if transitive:
        if g.degree <= 1:
            two = True
        else:
            stab = point_stabilizer(g, 0)
            two = len(stab.orbit(1)) == g.degree - 1
    arc = None
    if graph is not None:
        arc = transitive and arc_transitive(g, graph)
    return Transitivity(transitive, two, arc)


def arc_transitive(g: PermGroup, graph) -> bool:
    """Transitive on ordered pairs of adjacent vertices."""
    arcs = [(u, w) for u in range(graph.n) for w in graph.neighbors(u)]
    if not arcs:
        return True
    start = arcs[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u, w = queue.popleft()
        for s in g.generators:
            a = (s[u], s[w])
            if a not in seen:
                seen.add(a)
                queue.append(a)
    return len(seen) == len(arcs)


def symmetric_group(n: int) -> PermGroup:
    gens = []
    if n >= 2:
        gens.append(Perm.from_cycles(n, [list(range(n))]))
        gens.append(Perm.from_cycles(n, [[0, 1]]))
    return PermGroup(n, gens)


def read_generator_file(path) -> PermGroup:
    """First line ``degree n``, then one 1-based cycle-notation permutation per line."""
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError(f"{path}: empty generator file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "degree":
        raise ValueError(f"{path}: first line must be 'degree n'")
    n = int(head[1])
    return PermGroup(n, [parse_perm(ln, n) for ln in lines[1:]])


def write_generator_file(path, g: PermGroup) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"degree {g.degree}\n")
        for s in g.generators:
            fh.write(format_perm(s) + "\n")
