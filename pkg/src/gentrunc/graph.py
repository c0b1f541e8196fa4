"""Simple undirected graphs stored as adjacency bit rows.

Vertices are ``0..n-1``.  Row ``u`` of :attr:`Graph.adj` is a Python int whose
bit ``w`` is set iff ``u ~ w``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_ORDER = 65535


class _Infinite:
    """Girth of an acyclic graph.  Compares greater than every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "inf"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    _nbrs: tuple[tuple[int, ...], ...] | None = field(
        default=None, compare=False, repr=False, hash=False
    )

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"graph order {self.n} out of range")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        for u, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError(f"row {u} has bits beyond vertex {self.n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
        for u, row in enumerate(self.adj):
            r = row
            while r:
                low = r & -r
                w = low.bit_length() - 1
                if not (self.adj[w] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {w})")
                r ^= low
        nbrs = tuple(tuple(_bits(row)) for row in self.adj)
        object.__setattr__(self, "_nbrs", nbrs)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, w in edges:
            if u == w:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= w < n):
                raise ValueError(f"edge ({u}, {w}) out of range for n={n}")
            rows[u] |= 1 << w
            rows[w] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Sorted neighbours of ``u``."""
        return self._nbrs[u]

    def has_edge(self, u: int, w: int) -> bool:
        return bool((self.adj[u] >> w) & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for w in self._nbrs[u]:
                if u < w:
                    yield (u, w)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which vertex ``perm[u]`` plays the role of ``u``."""
        return Graph.from_edges(self.n, ((perm[u], perm[w]) for u, w in self.edges()))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertex ``vertices[i]`` becoming ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[w]) for u in vertices for w in self._nbrs[u]
             if w in index and index[u] < index[w]),
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges()) + [(u + a.n, w + a.n) for u, w in b.edges()]
    return Graph.from_edges(a.n + b.n, edges)


# ---------------------------------------------------------------------------
# graph6


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise ValueError("graph6 encoding supports at most 65535 vertices")
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = [chr(126)] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    bits = []
    for w in range(1, n):
        row = g.adj[w]
        for u in range(w):
            bits.append((row >> u) & 1)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    base = len(text) - len(text.lstrip("\r\n"))
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range", i + base)
    if not s:
        raise Graph6Error("empty graph6 line", 0)
    if ord(s[0]) < 126:
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) < 4:
            raise Graph6Error("truncated order header", len(s))
        if ord(s[1]) == 126:
            raise Graph6Error("orders above 258047 are not supported", 1)
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        pos = 4
        if n > MAX_ORDER:
            raise Graph6Error(f"order {n} exceeds {MAX_ORDER}", 1)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes, got {len(body)}", pos + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing data after graph6 body", pos + nbytes)
    rows = [0] * n
    k = 0
    for w in range(1, n):
        for u in range(w):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                rows[u] |= 1 << w
                rows[w] |= 1 << u
            k += 1
    if nbytes:
        pad = nbytes * 6 - nbits
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", pos + nbytes - 1)
    return Graph(n, tuple(rows))


def read_graph6_file(path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return [decode_graph6(line) for line in fh if line.strip()]


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


# ---------------------------------------------------------------------------
# invariants


class BasicProps(NamedTuple):
    connected: bool
    regular_degree: int | None


def bfs_distances(g: Graph, source: int, skip_edge: tuple[int, int] | None = None) -> list[int]:
    """Distances from ``source``; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    a, b = skip_edge if skip_edge else (-1, -1)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                if (u == a and w == b) or (u == b and w == a):
                    continue
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return min(bfs_distances(g, 0)) >= 0


def basic_props(g: Graph) -> BasicProps:
    degs = g.degrees()
    regular = degs[0] if degs and all(d == degs[0] for d in degs) else None
    return BasicProps(is_connected(g), regular)


def girth(g: Graph):
    """Length of a shortest cycle, or :data:`INFINITE` for forests.

    One BFS per vertex; a non-tree edge met at depth ``d`` closes a cycle of
    length at most ``2d+1`` and the search stops once no shorter cycle can
    appear.
    """
    best = INFINITE
    n = g.n
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not INFINITE and 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is INFINITE or length < best:
                        best = length
        if best == 3:
            break
    return best


def min_cycle_through_edge(g: Graph, u: int, w: int):
    """Length of a shortest cycle using edge ``uw``; :data:`INFINITE` for bridges."""
    if not g.has_edge(u, w):
        raise ValueError(f"({u}, {w}) is not an edge")
    d = bfs_distances(g, u, skip_edge=(u, w))[w]
    return INFINITE if d < 0 else d + 1
