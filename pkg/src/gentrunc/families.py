"""Generators for the named graph families."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

FAMILY_NAMES = (
    "complete",
    "cycle",
    "complete_bipartite",
    "prism",
    "moebius",
    "gen_prism",
    "petersen",
    "dodecahedron",
    "cayley_cyclic",
    "cayley_dihedral",
)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides nonempty")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def prism(n: int) -> Graph:
    """Pr(n) = Cay(Z2 x Zn; {(1,0), (0,±1)}); vertex (i, j) is i*n + j."""
    if n < 3:
        raise ValueError("prism needs n >= 3")
    edges = []
    for j in range(n):
        edges.append((j, n + j))
        edges.append((j, (j + 1) % n))
        edges.append((n + j, n + (j + 1) % n))
    return Graph.from_edges(2 * n, edges)


def moebius(n: int) -> Graph:
    """Ml(n) = Cay(Z_{2n}; {±1, n})."""
    if n < 3:
        raise ValueError("Moebius ladder needs n >= 3")
    m = 2 * n
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)] + [(i, i + n) for i in range(n)])


def gen_prism(n: int) -> Graph:
    """GPr(n) on Z2 x Z_{2n}; vertex (i, j) is i*2n + j.

    (i, j) ~ (i, j+1) always, and (i, j) ~ (i+1, j+1) for even j.
    """
    if n < 2:
        raise ValueError("generalized prism needs n >= 2")
    m = 2 * n
    edges = []
    for i in range(2):
        for j in range(m):
            edges.append((i * m + j, i * m + (j + 1) % m))
            if j % 2 == 0:
                edges.append((i * m + j, (1 - i) * m + (j + 1) % m))
    return Graph.from_edges(2 * m, edges)


def generalized_petersen(n: int, k: int) -> Graph:
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def dodecahedron() -> Graph:
    return generalized_petersen(10, 2)


def heawood() -> Graph:
    """Point-line incidence graph of the Fano plane (points 0..6, lines 7..13)."""
    lines = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    return Graph.from_edges(14, ((p, 7 + li) for li, line in enumerate(lines) for p in line))


def cayley_cyclic(n: int, connection) -> Graph:
    """Cay(Z_n; S) with S closed under negation automatically."""
    s = {c % n for c in connection}
    s |= {(-c) % n for c in s}
    if 0 in s:
        raise ValueError("connection set must not contain the identity")
    return Graph.from_edges(n, {tuple(sorted((x, (x + c) % n))) for x in range(n) for c in s})


def dihedral_mul(m: int, x: int, y: int) -> int:
    """Product in D_{2m} = <t, r | t^2, r^m, (tr)^2>; element t^a r^b is a*m + b."""
    a, b = divmod(x, m)
    c, d = divmod(y, m)
    b2 = (-b if c else b) + d
    return ((a + c) % 2) * m + b2 % m


def dihedral_inv(m: int, x: int) -> int:
    a, b = divmod(x, m)
    return x if a else (-b) % m


def cayley_dihedral(m: int, connection) -> Graph:
    """Cay(D_{2m}; S) with the rule h = s*g; S closed under inverses automatically."""
    s = {c % (2 * m) for c in connection}
    s |= {dihedral_inv(m, c) for c in s}
    if 0 in s:
        raise ValueError("connection set must not contain the identity")
    edges = set()
    for g in range(2 * m):
        for c in s:
            h = dihedral_mul(m, c, g)
            edges.add((min(g, h), max(g, h)))
    return Graph.from_edges(2 * m, edges)


def make_family(spec: FamilySpec) -> Graph:
    name, p = spec.name, tuple(spec.params)

    def need(count):
        if len(p) != count:
            raise ValueError(f"family {name!r} takes {count} parameter(s), got {len(p)}")

    if name == "complete":
        need(1)
        return complete(p[0])
    if name == "cycle":
        need(1)
        return cycle(p[0])
    if name == "complete_bipartite":
        need(2)
        return complete_bipartite(*p)
    if name == "prism":
        need(1)
        return prism(p[0])
    if name == "moebius":
        need(1)
        return moebius(p[0])
    if name == "gen_prism":
        need(1)
        return gen_prism(p[0])
    if name == "petersen":
        need(0)
        return petersen()
    if name == "dodecahedron":
        need(0)
        return dodecahedron()
    if name == "cayley_cyclic":
        if len(p) < 2:
            raise ValueError("cayley_cyclic takes n followed by connection elements")
        return cayley_cyclic(p[0], p[1:])
    if name == "cayley_dihedral":
        if len(p) < 2:
            raise ValueError("cayley_dihedral takes m followed by connection elements")
        return cayley_dihedral(p[0], p[1:])
    raise ValueError(f"unknown family {name!r}")
