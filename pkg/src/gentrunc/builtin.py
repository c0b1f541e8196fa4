"""Built-in 2-transitive groups: AGL1(q) on GF(q), PSL2(q) and PGL2(q) on the projective line."""
from __future__ import annotations

from .gf import GF, SUPPORTED_ORDERS
from .perm import Perm
from .permgroup import PermGroup

KINDS = ("AGL1", "PSL2", "PGL2")


def is_supported_prime_power(q: int) -> bool:
    return q in SUPPORTED_ORDERS


def _affine(field: GF, a: int, b: int) -> Perm:
    """x -> a*x + b."""
    return Perm([field.add(field.mul(a, x), b) for x in range(field.q)], check=False)


def _mobius(field: GF, a: int, b: int, c: int, d: int) -> Perm:
    """x -> (a x + b) / (c x + d) on GF(q) u {inf}, inf encoded as q."""
    q = field.q
    inf = q
    images = []
    for x in range(q + 1):
        if x == inf:
            num, den = a, c
        else:
            num = field.add(field.mul(a, x), b)
            den = field.add(field.mul(c, x), d)
        if den == 0:
            images.append(inf)
        else:
            images.append(field.mul(num, field.inv(den)))
    return Perm(images)


def builtin_group(kind: str, q: int) -> PermGroup:
    if kind not in KINDS:
        raise ValueError(f"unknown group kind {kind!r}; expected one of {KINDS}")
    field = GF(q)
    w = field.primitive
    one, zero = 1, 0
    if kind == "AGL1":
        return PermGroup(q, [_affine(field, one, one), _affine(field, w, zero)])
    translate = _mobius(field, one, one, zero, one)
    invert = _mobius(field, zero, field.neg(one), one, zero)
    scale = w if kind == "PGL2" else field.mul(w, w)
    dilate = _mobius(field, scale, zero, zero, one)
    return PermGroup(q + 1, [translate, dilate, invert])


def group_name(kind: str, q: int) -> str:
    return f"{kind}({q})"
