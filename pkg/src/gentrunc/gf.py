"""Small finite fields GF(p^k).

Elements are encoded as integers ``0..q-1``: the base-``p`` digits of the
integer are the polynomial coefficients, lowest degree first.  This is also
the "additive enumeration order" used for the projective line.
"""
from __future__ import annotations

from functools import cached_property

# Monic irreducible moduli, coefficients lowest degree first (leading 1 omitted).
IRREDUCIBLE = {
    4: (2, (1, 1)),        # x^2 + x + 1
    8: (2, (1, 1, 0)),     # x^3 + x + 1
    9: (3, (1, 0)),        # x^2 + 1
    16: (2, (1, 1, 0, 0)),  # x^4 + x + 1
    25: (5, (1, 1)),       # x^2 + x + 1
    27: (3, (1, 2, 0)),    # x^3 + 2x + 1
}

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27)


class GF:
    def __init__(self, q: int):
        if q not in SUPPORTED_ORDERS:
            raise ValueError(f"GF({q}) is not supported; choose one of {SUPPORTED_ORDERS}")
        self.q = q
        if q in IRREDUCIBLE:
            self.p, self.modulus = IRREDUCIBLE[q]
            self.k = len(self.modulus)
        else:
            self.p, self.modulus, self.k = q, (), 1
        self._mul = [[self._slow_mul(a, b) for b in range(q)] for a in range(q)]
        self._add = [[self._slow_add(a, b) for b in range(q)] for a in range(q)]

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        out = 0
        for d in reversed(ds):
            out = out * self.p + d
        return out

    def _slow_add(self, a: int, b: int) -> int:
        return self.from_digits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def _slow_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce with x^k = -(modulus)
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i, m in enumerate(self.modulus):
                    prod[d - k + i] = (prod[d - k + i] - c * m) % p
        return self.from_digits(prod[:k])

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._add[a].index(0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._mul[a].index(1)

    def mult_order(self, a: int) -> int:
        x, k = a, 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    @cached_property
    def primitive(self) -> int:
        """Smallest (in encoding order) generator of the multiplicative group."""
        for a in range(1, self.q):
            if self.mult_order(a) == self.q - 1:
                return a
        raise AssertionError("no primitive element")
