"""Truncations built from a vertex-transitive group and a union of pair orbits.

Given ``G <= Aut(base)`` transitive on vertices, a vertex ``v`` and a union
``O_v`` of orbits of ``G_v`` on 2-subsets of the neighbourhood of ``v``, the
truncation by the orbital graph ``(N(v), O_v)`` uses the labeling
``rho(u, w) = phi(w^{g_u})`` where ``g_u`` maps ``u`` to ``v`` and ``phi``
numbers ``N(v)`` in increasing order.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .autgroup import are_isomorphic, automorphism_group, canonical_form
from .builtin import builtin_group, group_name, is_supported_prime_power
from .families import complete, cycle
from .graph import Graph, girth
from .perm import Perm, format_perm
from .permgroup import PermGroup, is_automorphism, orbits_on_pairs, point_stabilizer, transitivity
from .truncation import Labeling, NotAnAutomorphism, Truncation, partition_stabilizer, truncate

log = logging.getLogger(__name__)

SKIPPED_BY_DEFAULT = (16,)
TABLE_COLUMNS = ("n", "group", "group_order", "order", "girth", "aut_order", "aut_equals_lift", "canonical")


@dataclass(frozen=True)
class OrbitSelection:
    v: int
    pairs: frozenset[tuple[int, int]]
    orbit_ids: tuple[int, ...]

    def orbital_graph(self, neighbourhood: Sequence[int]) -> Graph:
        index = {w: i for i, w in enumerate(neighbourhood)}
        return Graph.from_edges(len(neighbourhood), ((index[a], index[b]) for a, b in self.pairs))


@dataclass(frozen=True)
class TableRow:
    n: int
    group: str
    group_order: int
    order: int
    girth: int
    aut_order: int
    aut_equals_lift: bool
    canonical: str

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class NamedGroup:
    name: str
    group: PermGroup


def pair_orbits_at(base: Graph, group: PermGroup, v: int) -> list[list[tuple[int, int]]]:
    return orbits_on_pairs(point_stabilizer(group, v), base.neighbors(v))


def selection_from_orbits(base: Graph, group: PermGroup, v: int, orbit_ids: Iterable[int]) -> OrbitSelection:
    orbits = pair_orbits_at(base, group, v)
    ids = tuple(sorted(orbit_ids))
    pairs = frozenset(p for i in ids for p in orbits[i])
    return OrbitSelection(v, pairs, ids)


def _check_group(base: Graph, group: PermGroup) -> None:
    if group.degree != base.n:
        raise ValueError("group degree differs from base order")
    for s in group.generators:
        if not is_automorphism(base, s):
            raise NotAnAutomorphism(f"{format_perm(s)} is not an automorphism of the base graph")


def orbit_labeling(base: Graph, group: PermGroup, v: int) -> Labeling:
    """``rho(u, w) = phi(w^{g_u})`` with ``g_u`` from a deterministic transversal."""
    phi = {w: i + 1 for i, w in enumerate(base.neighbors(v))}
    to_u = group.transversal(v)  # v^t = u
    rows = []
    for u in range(base.n):
        g_u = ~to_u[u]
        rows.append(tuple(phi[g_u[w]] for w in base.neighbors(u)))
    return Labeling(base, tuple(rows))


def orbit_truncation(base: Graph, group: PermGroup, sel: OrbitSelection) -> Truncation:
    _check_group(base, group)
    if not group.is_transitive():
        raise ValueError("group is not vertex-transitive on the base graph")
    nbhd = base.neighbors(sel.v)
    stab = point_stabilizer(group, sel.v)
    for s in stab.generators:
        for a, b in sel.pairs:
            x, y = s[a], s[b]
            if (min(x, y), max(x, y)) not in sel.pairs:
                raise ValueError("selection is not a union of stabilizer orbits")
    rho = orbit_labeling(base, group, sel.v)
    return truncate(base, rho, sel.orbital_graph(nbhd))


def orbit_unions_matching(base: Graph, group: PermGroup, v: int, target: Graph) -> list[OrbitSelection]:
    """All unions of ``G_v`` pair orbits whose orbital graph is isomorphic to ``target``."""
    _check_group(base, group)
    nbhd = base.neighbors(v)
    if len(nbhd) != target.n:
        return []
    orbits = pair_orbits_at(base, group, v)
    want_edges = target.num_edges
    want_degs = sorted(target.degrees())
    max_deg = max(want_degs, default=0)
    out = []

    def rec(i, chosen, count, deg):
        if count == want_edges:
            pairs = frozenset(p for j in chosen for p in orbits[j])
            sel = OrbitSelection(v, pairs, tuple(chosen))
            og = sel.orbital_graph(nbhd)
            if sorted(og.degrees()) == want_degs and are_isomorphic(og, target) is not None:
                out.append(sel)
            return
        if i == len(orbits):
            return
        orb = orbits[i]
        if count + len(orb) <= want_edges:
            d2 = dict(deg)
            for a, b in orb:
                d2[a] = d2.get(a, 0) + 1
                d2[b] = d2.get(b, 0) + 1
            if max(d2.values()) <= max_deg:
                rec(i + 1, chosen + [i], count + len(orb), d2)
        rec(i + 1, chosen, count, deg)

    rec(0, [], 0, {})
    return out


def lift_criterion(base: Graph, group: PermGroup, sel: OrbitSelection, h: Perm) -> bool:
    """Whether ``h`` lifts: ``O_v`` must be a union of ``<G, h>_v`` pair orbits."""
    if not is_automorphism(base, h):
        raise NotAnAutomorphism(f"{format_perm(h)} is not an automorphism of the base graph")
    big = PermGroup(group.degree, list(group.generators) + [h])
    stab = point_stabilizer(big, sel.v)
    for s in stab.generators:
        for a, b in sel.pairs:
            x, y = s[a], s[b]
            if (min(x, y), max(x, y)) not in sel.pairs:
                return False
    return True


def builtin_candidates(n: int) -> list[NamedGroup]:
    out = []
    if is_supported_prime_power(n):
        out.append(NamedGroup(group_name("AGL1", n), builtin_group("AGL1", n)))
    if is_supported_prime_power(n - 1):
        for kind in ("PSL2", "PGL2"):
            out.append(NamedGroup(group_name(kind, n - 1), builtin_group(kind, n - 1)))
    return out


def candidate_groups(n: int, extra: Sequence[NamedGroup] = ()) -> list[NamedGroup]:
    """Built-in (plus user) groups 2-transitive on ``n`` points of order n(n-1) or 2n(n-1)."""
    if not 4 <= n <= 20:
        raise ValueError("n must lie in 4..20")
    pool = builtin_candidates(n) + [g for g in extra if g.group.degree == n]
    keep = []
    for ng in pool:
        order = ng.group.order()
        if order not in (n * (n - 1), 2 * n * (n - 1)):
            continue
        if transitivity(ng.group).two_transitive:
            keep.append(ng)
    return keep


def table_row(n: int, ng: NamedGroup, sel: OrbitSelection) -> TableRow:
    """Build one truncation of K_n by C_{n-1} and measure it."""
    base = complete(n)
    t = orbit_truncation(base, ng.group, sel)
    canon = canonical_form(t.result).string
    aut = automorphism_group(t.result)
    lifted = partition_stabilizer(t)  # every element of Sym(n) = Aut(K_n) that lifts
    return TableRow(
        n=n,
        group=ng.name,
        group_order=ng.group.order(),
        order=t.result.n,
        girth=girth(t.result),
        aut_order=aut.order(),
        aut_equals_lift=aut.order() == lifted.order(),
        canonical=canon,
    )


def _row_job(args):
    n, ng, sel = args
    return table_row(n, ng, sel)


def enumerate_table(
    n_values: Iterable[int],
    extra_groups: Sequence[NamedGroup] = (),
    include_16: bool = False,
    jobs: int = 1,
) -> list[TableRow]:
    """Truncations of K_n by C_{n-1} from candidate groups, one row per isomorphism class."""
    work = []
    for n in n_values:
        if n in SKIPPED_BY_DEFAULT and not include_16:
            log.info("skipping n=%d", n)
            continue
        base = complete(n)
        target = cycle(n - 1)
        for ng in candidate_groups(n, extra_groups):
            for sel in orbit_unions_matching(base, ng.group, 0, target):
                work.append((n, ng, sel))
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_job, work))
    else:
        rows = [_row_job(w) for w in work]
    seen: dict[str, TableRow] = {}
    for row in rows:  # work order is deterministic, so the first writer is too
        seen.setdefault(row.canonical, row)
    return sorted(seen.values(), key=lambda r: (r.n, r.girth, r.aut_order, r.canonical))
