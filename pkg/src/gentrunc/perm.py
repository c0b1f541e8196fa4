"""Permutations acting on the right: ``x^(p*q) = (x^p)^q``."""
from __future__ import annotations

import re
from typing import Iterable, Sequence


class Perm:
    """A permutation of ``0..n-1`` stored as its image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        self.images = images
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n), check=False)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if x in seen:
                    raise ValueError(f"point {x} repeated in cycles")
                if not 0 <= x < n:
                    raise ValueError(f"point {x} out of range for degree {n}")
                seen.add(x)
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images, check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, x: int) -> int:
        return self.images[x]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(map(other.images.__getitem__, self.images), check=False)

    def __invert__(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm(inv, check=False)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return (~self) ** (-k)
        result = Perm.identity(len(self.images))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if self.support() else 1

    def __repr__(self) -> str:
        return f"Perm({format_perm(self)}, n={len(self.images)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, n: int) -> Perm:
    """Parse 1-based disjoint cycle notation such as ``"(1 2 3)(4 5)"``."""
    s = text.strip()
    pos = 0
    cycles = []
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(s, pos)
        if not m:
            raise ValueError(f"unbalanced or malformed cycle notation at column {pos}: {text!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(tok) for tok in body]
        except ValueError:
            raise ValueError(f"non-integer point in {m.group(0)!r}") from None
        for p in pts:
            if not 1 <= p <= n:
                raise ValueError(f"point {p} out of range 1..{n}")
        if pts:
            cycles.append([p - 1 for p in pts])
        pos = m.end()
    if not s:
        raise ValueError("empty permutation text; use '()' for the identity")
    return Perm.from_cycles(n, cycles)


def format_perm(p: Perm) -> str:
    """1-based cycle notation; the identity prints as ``()``."""
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cyc)
