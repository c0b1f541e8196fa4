"""Generalized truncations T(base, rho; inserted) and the lift/projection calculus.

Vertex ``(u, v_i)`` of a truncation is stored as ``u*k + (i-1)``, so the
partition class of a vertex ``x`` is ``x // k``.  Edges inside a class are
*red*, the remaining ones (one per base edge) are *blue*.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Mapping, NamedTuple

from .autgroup import automorphism_group
from .graph import INFINITE, Graph, basic_props, min_cycle_through_edge
from .perm import Perm, format_perm
from .permgroup import PermGroup, is_automorphism

EXHAUSTIVE_LIMIT = 10**6


class NotAnAutomorphism(ValueError):
    pass


@dataclass(frozen=True)
class Labeling:
    """Vertex-neighbourhood labeling of a regular graph.

    ``table[u][j]`` is the label (``1..k``) of the dart from ``u`` to its
    ``j``-th neighbour in sorted order.
    """

    base: Graph
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.table) != self.base.n:
            raise ValueError("labeling needs one row per base vertex")
        for u, row in enumerate(self.table):
            k = self.base.degree(u)
            if sorted(row) != list(range(1, k + 1)):
                raise ValueError(f"labels at vertex {u} are not a bijection onto 1..{k}: {row}")

    @classmethod
    def from_mapping(cls, base: Graph, labels: Mapping[tuple[int, int], int]) -> "Labeling":
        rows = []
        for u in range(base.n):
            try:
                rows.append(tuple(labels[(u, w)] for w in base.neighbors(u)))
            except KeyError as exc:
                raise ValueError(f"dart {exc.args[0]} has no label") from None
        return cls(base, tuple(rows))

    @classmethod
    def sorted_order(cls, base: Graph) -> "Labeling":
        """Label the darts at each vertex 1..k in increasing neighbour order."""
        return cls(base, tuple(tuple(range(1, base.degree(u) + 1)) for u in range(base.n)))

    @classmethod
    def random(cls, base: Graph, rng: random.Random) -> "Labeling":
        rows = []
        for u in range(base.n):
            row = list(range(1, base.degree(u) + 1))
            rng.shuffle(row)
            rows.append(tuple(row))
        return cls(base, tuple(rows))

    @cached_property
    def _index(self) -> list[dict[int, int]]:
        return [dict(zip(self.base.neighbors(u), row)) for u, row in enumerate(self.table)]

    def label(self, u: int, w: int) -> int:
        return self._index[u][w]

    def to_text(self) -> str:
        k = self.base.degree(0) if self.base.n else 0
        lines = [f"base {self.base.n} {k}"]
        for u in range(self.base.n):
            parts = [f"{w}->{lab}" for w, lab in zip(self.base.neighbors(u), self.table[u])]
            lines.append(f"{u}: " + " ".join(parts))
        return "\n".join(lines) + "\n"


_DART_RE = re.compile(r"^(\d+)\s*(?:->|→)\s*(\d+)$")


def parse_labeling(text: str, base: Graph) -> Labeling:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty labeling file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "base":
        raise ValueError("first line must be 'base n k'")
    n, k = int(head[1]), int(head[2])
    if n != base.n:
        raise ValueError(f"labeling is for {n} vertices, base graph has {base.n}")
    labels: dict[tuple[int, int], int] = {}
    for ln in lines[1:]:
        u_txt, _, rest = ln.partition(":")
        u = int(u_txt)
        for tok in rest.split():
            m = _DART_RE.match(tok)
            if not m:
                raise ValueError(f"bad dart entry {tok!r} on line for vertex {u}")
            w, lab = int(m.group(1)), int(m.group(2))
            if not base.has_edge(u, w):
                raise ValueError(f"({u}, {w}) is not an edge of the base graph")
            if not 1 <= lab <= k:
                raise ValueError(f"label {lab} outside 1..{k}")
            labels[(u, w)] = lab
    return Labeling.from_mapping(base, labels)


@dataclass(frozen=True)
class Truncation:
    result: Graph
    base: Graph
    inserted: Graph
    labeling: Labeling

    @property
    def k(self) -> int:
        return self.inserted.n

    def vertex(self, u: int, i: int) -> int:
        """Index of ``(u, v_i)`` with ``i`` in ``1..k``."""
        return u * self.k + i - 1

    def cell(self, x: int) -> int:
        return x // self.k

    @cached_property
    def partition(self) -> tuple[tuple[int, ...], ...]:
        k = self.k
        return tuple(tuple(range(u * k, u * k + k)) for u in range(self.base.n))

    @cached_property
    def blue_edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for u, w in self.base.edges():
            a = self.vertex(u, self.labeling.label(u, w))
            b = self.vertex(w, self.labeling.label(w, u))
            out.add((min(a, b), max(a, b)))
        return frozenset(out)

    def is_blue(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.blue_edges


def truncate(base: Graph, rho: Labeling, inserted: Graph) -> Truncation:
    props = basic_props(base)
    if base.n and props.regular_degree is None:
        raise ValueError("base graph must be regular")
    k = props.regular_degree or 0
    if inserted.n != k:
        raise ValueError(f"inserted graph has {inserted.n} vertices, base is {k}-regular")
    if rho.base != base:
        raise ValueError("labeling belongs to a different base graph")
    edges = []
    for u in range(base.n):
        off = u * k
        edges.extend((off + i, off + j) for i, j in inserted.edges())
    for u, w in base.edges():
        edges.append((u * k + rho.label(u, w) - 1, w * k + rho.label(w, u) - 1))
    return Truncation(Graph.from_edges(base.n * k, edges), base, inserted, rho)


def blue_girth(t: Truncation):
    """Length of a shortest cycle through at least one blue edge."""
    best = INFINITE
    for a, b in sorted(t.blue_edges):
        c = min_cycle_through_edge(t.result, a, b)
        if c < best:
            best = c
    return best


def _candidate_lift(t: Truncation, g: Perm) -> Perm:
    k = t.k
    rho = t.labeling
    images = [0] * t.result.n
    for u in range(t.base.n):
        gu = g[u]
        for w in t.base.neighbors(u):
            images[u * k + rho.label(u, w) - 1] = gu * k + rho.label(gu, g[w]) - 1
    return Perm(images, check=False)


def lift(t: Truncation, g: Perm) -> Perm | None:
    """The lift of a base automorphism ``g``, or ``None`` if it does not lift."""
    if not is_automorphism(t.base, g):
        raise NotAnAutomorphism(f"{format_perm(g)} is not an automorphism of the base graph")
    cand = _candidate_lift(t, g)
    return cand if is_automorphism(t.result, cand) else None


def project(t: Truncation, gt: Perm) -> Perm | None:
    """The induced base automorphism, or ``None`` for a mixer."""
    if not is_automorphism(t.result, gt):
        raise NotAnAutomorphism(f"{format_perm(gt)} is not an automorphism of the truncation")
    k = t.k
    images = []
    for u in range(t.base.n):
        targets = {gt[x] // k for x in range(u * k, u * k + k)}
        if len(targets) != 1:
            return None
        images.append(targets.pop())
    return Perm(images, check=False)


class ProjectingInfo(NamedTuple):
    aut: PermGroup
    projecting: PermGroup
    has_mixers: bool


def partition_stabilizer(t: Truncation) -> PermGroup:
    """Automorphisms of the truncation permuting the natural partition.

    Computed as the colour-preserving automorphism group of the truncation
    with one extra vertex per class joined to all members of that class.
    """
    N, k, n = t.result.n, t.k, t.base.n
    edges = list(t.result.edges())
    for u in range(n):
        edges.extend((N + u, x) for x in range(u * k, u * k + k))
    aug = Graph.from_edges(N + n, edges)
    colors = [0] * N + [1] * n
    group = automorphism_group(aug, colors)
    gens = [Perm(s.images[:N], check=False) for s in group.generators]
    return PermGroup(N, gens)


def projecting_subgroup(t: Truncation) -> ProjectingInfo:
    aut = automorphism_group(t.result)
    proj = partition_stabilizer(t)
    return ProjectingInfo(aut, proj, aut.order() != proj.order())


def projected_group(t: Truncation, projecting: PermGroup | None = None) -> PermGroup:
    """Image in Aut(base) of the partition-preserving automorphisms."""
    if projecting is None:
        projecting = partition_stabilizer(t)
    return PermGroup(t.base.n, [project(t, s) for s in projecting.generators])


def lifted_subgroup(t: Truncation, group: PermGroup) -> PermGroup:
    """Lifts of all elements of ``group`` that lift, as a group on the truncation.

    If every generator lifts the answer is immediate.  Otherwise the set of
    liftable base automorphisms equals the projection of the partition
    stabilizer, and the answer is its intersection with ``group``.
    """
    for s in group.generators:
        if not is_automorphism(t.base, s):
            raise NotAnAutomorphism(f"{format_perm(s)} is not an automorphism of the base graph")
    lifts = [_candidate_lift(t, s) for s in group.generators]
    if all(is_automorphism(t.result, x) for x in lifts):
        return PermGroup(t.result.n, lifts)
    proj_t = partition_stabilizer(t)
    liftable = projected_group(t, proj_t)
    if all(group.contains(s) for s in liftable.generators):
        return proj_t
    inter = _intersection(liftable, group, t)
    return PermGroup(t.result.n, [_candidate_lift(t, s) for s in inter.generators])


def _intersection(liftable: PermGroup, group: PermGroup, t: Truncation) -> PermGroup:
    if liftable.order() <= EXHAUSTIVE_LIMIT:
        pool, keep = liftable, group.contains
    elif group.order() <= EXHAUSTIVE_LIMIT:
        pool, keep = group, (lambda s: is_automorphism(t.result, _candidate_lift(t, s)))
    else:
        raise RuntimeError("both groups exceed the exhaustive intersection limit")
    sub = PermGroup(group.degree)
    for s in pool.elements():
        if keep(s) and not sub.contains(s):
            sub = PermGroup(group.degree, sub.generators + [s])
    return sub


def lift_orbit_set(t: Truncation, elements: Iterable[Perm]) -> list[Perm]:
    """The members of ``elements`` that lift (exhaustive helper)."""
    return [g for g in elements if lift(t, g) is not None]


def all_labelings(base: Graph, inserted: Graph) -> Iterable[Labeling]:
    """Every labeling of ``base`` modulo relabeling each inserted copy by Aut(inserted).

    Two labelings that differ at each vertex by an automorphism of the
    inserted graph give identical truncations up to a class-wise relabeling.
    """
    k = inserted.n
    aut = automorphism_group(inserted)
    reps = []
    seen = set()
    for p in permutations(range(1, k + 1)):
        if p in seen:
            continue
        reps.append(p)
        for a in aut.elements():
            seen.add(tuple(a[x - 1] + 1 for x in p))

    def rec(u, acc):
        if u == base.n:
            yield Labeling(base, tuple(acc))
            return
        for r in reps:
            yield from rec(u + 1, acc + [r])

    yield from rec(0, [])
