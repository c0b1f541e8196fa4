"""Todd-Coxeter coset enumeration (HLT strategy) over the trivial subgroup."""
from __future__ import annotations

import os
from dataclasses import dataclass

from .perm import Perm
from .permgroup import PermGroup

DEFAULT_MAX_COSETS = 100_000


class CosetOverflow(RuntimeError):
    """The coset table outgrew its bound before closing."""


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[str, ...]

    def parsed_relators(self) -> list[list[int]]:
        return [parse_word(r, self.generators) for r in self.relators]


def parse_word(text: str, names) -> list[int]:
    """Parse a word into column indices: generator ``i`` is ``2i``, its inverse ``2i+1``.

    Accepted syntax: generator names, parentheses, and integer exponents
    introduced by ``^`` (e.g. ``acab``, ``(ac)^6``, ``a^-1 b``).
    """
    names = sorted(((n, i) for i, n in enumerate(names)), key=lambda t: -len(t[0]))
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(text) and text[pos] in " \t*":
            pos += 1

    def exponent():
        nonlocal pos
        skip()
        if pos < len(text) and text[pos] == "^":
            pos += 1
            skip()
            start = pos
            if pos < len(text) and text[pos] in "+-":
                pos += 1
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            try:
                return int(text[start:pos])
            except ValueError:
                raise ValueError(f"bad exponent at column {start} in {text!r}") from None
        return 1

    def power(w, e):
        if e < 0:
            w = [c ^ 1 for c in reversed(w)]
            e = -e
        return w * e

    def word():
        nonlocal pos
        out = []
        while True:
            skip()
            if pos >= len(text) or text[pos] == ")":
                return out
            if text[pos] == "(":
                pos += 1
                inner = word()
                if pos >= len(text) or text[pos] != ")":
                    raise ValueError(f"unbalanced parentheses in {text!r}")
                pos += 1
                out += power(inner, exponent())
                continue
            for name, i in names:
                if text.startswith(name, pos):
                    pos += len(name)
                    out += power([2 * i], exponent())
                    break
            else:
                raise ValueError(f"unknown symbol at column {pos} in {text!r}")

    w = word()
    if pos != len(text):
        raise ValueError(f"unbalanced parentheses in {text!r}")
    return w


def read_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError(f"{path}: empty presentation file")
    gens = tuple(lines[0].replace(",", " ").split())
    return Presentation(gens, tuple(lines[1:]))


def max_cosets_from_env(default: int = DEFAULT_MAX_COSETS) -> int:
    value = os.environ.get("TRUNC_MAX_COSETS")
    return int(value) if value else default


class _Enumerator:
    def __init__(self, ngens: int, relators: list[list[int]], max_cosets: int):
        self.ncols = 2 * ngens
        self.relators = [r for r in relators if r]
        self.max_cosets = max_cosets
        self.table: list[list[int]] = []
        self.forward: list[int] = []
        self._new_coset()

    def _new_coset(self) -> int:
        if len(self.table) >= self.max_cosets:
            raise CosetOverflow(f"coset table exceeded {self.max_cosets} cosets")
        self.table.append([-1] * self.ncols)
        self.forward.append(len(self.forward))
        return len(self.table) - 1

    def live(self, c: int) -> bool:
        return self.forward[c] == c

    def rep(self, c: int) -> int:
        root = c
        fw = self.forward
        while fw[root] != root:
            root = fw[root]
        while fw[c] != root:
            fw[c], c = root, fw[c]
        return root

    def define(self, c: int, x: int) -> None:
        d = self._new_coset()
        self.table[c][x] = d
        self.table[d][x ^ 1] = c

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.forward[hi] = lo
            queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        table = self.table
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(self.ncols):
                d = table[g][x]
                if d < 0:
                    continue
                table[d][x ^ 1] = -1
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] >= 0:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    self._merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(self, c: int, w: list[int]) -> None:
        table = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def run(self) -> None:
        c = 0
        while c < len(self.table):
            if self.live(c):
                for r in self.relators:
                    self.scan_and_fill(c, r)
                    if not self.live(c):
                        break
                if self.live(c):
                    for x in range(self.ncols):
                        if self.table[c][x] < 0:
                            self.define(c, x)
            c += 1

    def compact(self) -> list[list[int]]:
        alive = [c for c in range(len(self.table)) if self.live(c)]
        index = {c: i for i, c in enumerate(alive)}
        return [[index[self.table[c][x]] for x in range(self.ncols)] for c in alive]


def coset_table(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> list[list[int]]:
    """Closed coset table of the trivial subgroup; row ``i`` is coset ``i``, column ``2g``/``2g+1``."""
    e = _Enumerator(len(p.generators), p.parsed_relators(), max_cosets)
    e.run()
    return e.compact()


def todd_coxeter(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> PermGroup:
    """Regular representation of the presented group.

    Generator ``i`` of the result is the action of ``p.generators[i]`` on
    cosets of the trivial subgroup (coset ``0`` is the identity).  Raises
    :class:`CosetOverflow` if the bound is exceeded.
    """
    table = coset_table(p, max_cosets)
    n = len(table)
    gens = [Perm([table[c][2 * i] for c in range(n)]) for i in range(len(p.generators))]
    return PermGroup(n, gens)
