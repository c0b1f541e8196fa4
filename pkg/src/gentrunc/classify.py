"""Recognising cubic vertex-transitive graphs of girth 3, 4 and 5.

Such a graph is either a member of a short list of families or a truncation
of an arc-transitive graph by a cycle of length equal to the girth; the
second case is detected by cutting the graph into vertex-disjoint induced
cycles and checking the block conditions.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .autgroup import are_isomorphic, automorphism_group, canonical_form
from .families import complete, dodecahedron, gen_prism, moebius, petersen, prism, cycle
from .graph import Graph, basic_props, decode_graph6, girth
from .perm import Perm
from .permgroup import arc_transitive
from .truncation import Labeling, Truncation, truncate

log = logging.getLogger(__name__)

TAGS = (
    "K4", "Prism3", "TruncC3", "K33_Ml3", "Prism", "Moebius", "GenPrism",
    "TruncC4", "Petersen", "Dodecahedron", "TruncC5", "NotCubicVTGirth345",
)
NOT_CLASSIFIED = "NotCubicVTGirth345"
PARTITION_SEARCH_CAP = 10**6


@dataclass(frozen=True)
class Decomposition:
    blocks: tuple[tuple[int, ...], ...]  # each block listed in cycle order
    quotient: Graph
    inserted: Graph
    labeling: Labeling

    def truncation(self) -> Truncation:
        return truncate(self.quotient, self.labeling, self.inserted)

    def isomorphism(self) -> Perm:
        """Map from truncation vertex ``(b, v_i)`` to the original vertex."""
        return Perm([v for block in self.blocks for v in block])


@dataclass(frozen=True)
class ClassLabel:
    tag: str
    aut_order: int
    quotient: Graph | None = None
    quotient_aut_order: int | None = None
    decomposition: Decomposition | None = None


def cycles_of_length(g: Graph, length: int, induced: bool = False) -> list[tuple[int, ...]]:
    """All cycles of the given length, each once: starts at its minimum vertex,
    second vertex smaller than the last."""
    out = []
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend():
            u = path[-1]
            if len(path) == length:
                if g.has_edge(u, s) and path[1] < path[-1]:
                    out.append(tuple(path))
                return
            for w in g.neighbors(u):
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend()
                    path.pop()
                    on_path.discard(w)

        extend()
    if induced:
        out = [c for c in out if _is_induced_cycle(g, c)]
    return out


def _is_induced_cycle(g: Graph, cyc: tuple[int, ...]) -> bool:
    mask = 0
    for v in cyc:
        mask |= 1 << v
    return all((g.adj[v] & mask).bit_count() == 2 for v in cyc)


def _block_ok(g: Graph, cyc: tuple[int, ...]) -> bool:
    """Induced, and each vertex has exactly one neighbour outside, all in distinct places."""
    mask = 0
    for v in cyc:
        mask |= 1 << v
    for v in cyc:
        if (g.adj[v] & mask).bit_count() != 2 or (g.adj[v] & ~mask).bit_count() != 1:
            return False
    return True


def _build(g: Graph, blocks: list[tuple[int, ...]]) -> Decomposition | None:
    length = len(blocks[0])
    blocks = sorted(blocks, key=min)
    block_of = {}
    for b, cyc in enumerate(blocks):
        for v in cyc:
            block_of[v] = b
    labels: dict[tuple[int, int], int] = {}
    edges = set()
    for b, cyc in enumerate(blocks):
        seen = set()
        for i, v in enumerate(cyc):
            (w,) = [x for x in g.neighbors(v) if block_of[x] != b]
            c = block_of[w]
            if c in seen:
                return None
            seen.add(c)
            labels[(b, c)] = i + 1
            edges.add((min(b, c), max(b, c)))
    quotient = Graph.from_edges(len(blocks), edges)
    dec = Decomposition(tuple(blocks), quotient, cycle(length), Labeling.from_mapping(quotient, labels))
    t = dec.truncation()
    iso = dec.isomorphism()
    if t.result.relabel(iso.images) != g:
        raise AssertionError("recovered truncation does not reproduce the input graph")
    return dec


def _partition_search(g: Graph, cycles: list[tuple[int, ...]], cap: int) -> list[tuple[int, ...]] | None:
    through: dict[int, list[tuple[int, ...]]] = {v: [] for v in range(g.n)}
    for c in cycles:
        for v in c:
            through[v].append(c)
    masks = {c: sum(1 << v for v in c) for c in cycles}
    states = 0

    def compatible(c, chosen):
        cm = masks[c]
        for d in chosen:
            links = sum((g.adj[v] & cm).bit_count() for v in d)
            if links > 1:
                return False
        return True

    def rec(covered: int, chosen: list):
        nonlocal states
        states += 1
        if states > cap:
            raise _CapReached
        if covered == (1 << g.n) - 1:
            return list(chosen)
        v = (~covered & (covered + 1)).bit_length() - 1
        for c in through[v]:
            if masks[c] & covered or not compatible(c, chosen):
                continue
            chosen.append(c)
            found = rec(covered | masks[c], chosen)
            if found:
                return found
            chosen.pop()
        return None

    try:
        return rec(0, [])
    except _CapReached:
        log.warning("partition search hit the cap of %d states", cap)
        return None


class _CapReached(Exception):
    pass


def truncation_decomposition(
    g: Graph, cycle_len: int, search_partitions: bool = False, cap: int = PARTITION_SEARCH_CAP
) -> Decomposition | None:
    """Split ``g`` into induced ``cycle_len``-cycles satisfying the block conditions.

    The default route requires every vertex to lie on exactly one such cycle.
    With ``search_partitions`` a bounded exact-cover search over induced
    cycles is tried when that fails.
    """
    props = basic_props(g)
    if not props.connected or props.regular_degree is None or g.n % cycle_len:
        return None
    cycles = cycles_of_length(g, cycle_len)
    count = [0] * g.n
    for c in cycles:
        for v in c:
            count[v] += 1
    if all(x == 1 for x in count) and all(_block_ok(g, c) for c in cycles):
        dec = _build(g, cycles)
        if dec is not None:
            return dec
    if not search_partitions:
        return None
    candidates = [c for c in cycles if _block_ok(g, c)]
    found = _partition_search(g, candidates, cap)
    return _build(g, found) if found else None


def _quotient_label(tag: str, aut_order: int, dec: Decomposition) -> ClassLabel:
    qaut = automorphism_group(dec.quotient)
    if not arc_transitive(qaut, dec.quotient):
        log.warning("%s decomposition with a quotient that is not arc-transitive", tag)
        return ClassLabel(NOT_CLASSIFIED, aut_order)
    return ClassLabel(tag, aut_order, dec.quotient, qaut.order(), dec)


def classify_cubic_vt(g: Graph) -> ClassLabel:
    aut = automorphism_group(g)
    order = aut.order()
    props = basic_props(g)
    if props.regular_degree != 3 or not props.connected or not aut.is_transitive():
        return ClassLabel(NOT_CLASSIFIED, order)
    gi = girth(g)
    if gi not in (3, 4, 5):
        return ClassLabel(NOT_CLASSIFIED, order)

    def iso(h: Graph) -> bool:
        return h.n == g.n and are_isomorphic(g, h) is not None

    if gi == 3:
        if iso(complete(4)):
            return ClassLabel("K4", order)
        if iso(prism(3)):
            return ClassLabel("Prism3", order)
    elif gi == 4:
        m = g.n // 2
        if m >= 3 and iso(moebius(m)):
            return ClassLabel("K33_Ml3" if m == 3 else "Moebius", order)
        if m >= 4 and iso(prism(m)):
            return ClassLabel("Prism", order)
        if m % 2 == 0 and m >= 4 and iso(gen_prism(m // 2)):
            return ClassLabel("GenPrism", order)
    else:
        if iso(petersen()):
            return ClassLabel("Petersen", order)
        if iso(dodecahedron()):
            return ClassLabel("Dodecahedron", order)
    dec = truncation_decomposition(g, gi)
    if dec is None:
        log.warning("vertex-transitive cubic graph of girth %d with no decomposition", gi)
        return ClassLabel(NOT_CLASSIFIED, order)
    return _quotient_label(f"TruncC{gi}", order, dec)


class CorpusEntry(NamedTuple):
    line_no: int
    n: int | None
    label: ClassLabel | None
    error: str | None = None
    girth_decomposition: Decomposition | None = None


def classify_lines(lines: Iterable[str], decompose: bool = False) -> list[CorpusEntry]:
    out = []
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            g = decode_graph6(line.strip())
        except ValueError as exc:
            out.append(CorpusEntry(line_no, None, None, str(exc)))
            continue
        label = classify_cubic_vt(g)
        extra = None
        if decompose and label.tag == NOT_CLASSIFIED:
            gi = girth(g)
            if isinstance(gi, int):
                extra = truncation_decomposition(g, gi)
        out.append(CorpusEntry(line_no, g.n, label, None, extra))
    return out


def classify_corpus(path, decompose: bool = False) -> list[CorpusEntry]:
    with open(path, encoding="ascii", errors="replace") as fh:
        return classify_lines(fh, decompose)


def summary_counts(entries: Iterable[CorpusEntry]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for e in entries:
        key = e.label.tag if e.label else "error"
        counts[key] = counts.get(key, 0) + 1
    return counts


def quotient_canonical(label: ClassLabel) -> str:
    return canonical_form(label.quotient).string if label.quotient is not None else "-"
