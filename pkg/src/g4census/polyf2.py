"""Polynomials over GF(2) packed into ints, and the weighted Moebius action.

A polynomial is an int whose bit i is the coefficient of x^i.  ``0`` is
the zero polynomial; :func:`degree` returns -1 for it.
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

import numpy as np

from .gf2k import FieldCtx

Poly = int


def degree(p: Poly) -> int:
    return p.bit_length() - 1


def add(p: Poly, q: Poly) -> Poly:
    return p ^ q


def mul(p: Poly, q: Poly) -> Poly:
    r = 0
    while q:
        if q & 1:
            r ^= p
        q >>= 1
        p <<= 1
    return r


def divmod_(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if q == 0:
        raise ZeroDivisionError("polynomial division by zero")
    dq = degree(q)
    quo = 0
    while p and degree(p) >= dq:
        s = degree(p) - dq
        quo ^= 1 << s
        p ^= q << s
    return quo, p


def rem(p: Poly, q: Poly) -> Poly:
    return divmod_(p, q)[1]


def gcd(p: Poly, q: Poly) -> Poly:
    while q:
        p, q = q, rem(p, q)
    return p


def derivative(p: Poly) -> Poly:
    # keep odd exponents, shift down by one
    return (p & 0xAAAAAAAAAAAAAAAAAAAAAAAAAAAAAAAA) >> 1


def square(p: Poly) -> Poly:
    r = 0
    i = 0
    while p:
        if p & 1:
            r |= 1 << (2 * i)
        p >>= 1
        i += 1
    return r


def power(p: Poly, e: int) -> Poly:
    r = 1
    while e:
        if e & 1:
            r = mul(r, p)
        p = mul(p, p)
        e >>= 1
    return r


def coeff(p: Poly, i: int) -> int:
    return p >> i & 1


def eval_poly(p: Poly, ctx: FieldCtx, e):
    """Horner evaluation of ``p`` at ``e`` (int or numpy array) in ``ctx``."""
    if isinstance(e, (int, np.integer)):
        acc = 0
        for i in range(degree(p), -1, -1):
            acc = ctx.mul(acc, int(e)) ^ (p >> i & 1)
        return acc
    e = np.asarray(e)
    acc = np.zeros_like(e)
    for i in range(degree(p), -1, -1):
        acc = ctx.mul(acc, e) ^ (p >> i & 1)
    return acc


def reverse(p: Poly, n: int) -> Poly:
    """x^n p(1/x), for deg p <= n."""
    r = 0
    for i in range(n + 1):
        if p >> i & 1:
            r |= 1 << (n - i)
    return r


def to_str(p: Poly, var: str = "x") -> str:
    """Human form, e.g. ``x^4 + x^3 + 1``."""
    if p == 0:
        return "0"
    terms = []
    for i in range(degree(p), -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return " + ".join(terms)


def from_str(s: str, var: str = "x") -> Poly:
    s = s.replace(" ", "")
    if s == "0":
        return 0
    p = 0
    for t in s.split("+"):
        if t == "1":
            i = 0
        elif t == var:
            i = 1
        elif t.startswith(var + "^"):
            i = int(t[len(var) + 1:])
        else:
            raise ValueError(f"cannot parse term {t!r}")
        p ^= 1 << i
    return p


def to_hex(p: Poly) -> str:
    return format(p, "x")


class Mat2(NamedTuple):
    """Invertible 2x2 matrix (a b; c d) over GF(2), acting as x -> (ax+b)/(cx+d)."""

    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: "Mat2") -> "Mat2":
        a, b, c, d = self
        e, f, g, h = other
        return Mat2((a & e) ^ (b & g), (a & f) ^ (b & h), (c & e) ^ (d & g), (c & f) ^ (d & h))

    def inverse(self) -> "Mat2":
        # det = 1, so the inverse is the adjugate
        return Mat2(self.d, self.b, self.c, self.a)


IDENTITY2 = Mat2(1, 0, 0, 1)


def pgl2_elements() -> list[Mat2]:
    return [Mat2(*m) for m in product((0, 1), repeat=4) if (m[0] & m[3]) ^ (m[1] & m[2])]


def moebius_act(n: int, A: Mat2, q: Poly) -> Poly:
    """(cx+d)^n q((ax+b)/(cx+d)) for deg q <= n.

    With the literal formula, acting by B and then by A equals acting by
    the product B @ A (a right action).
    """
    if degree(q) > n:
        raise ValueError(f"degree {degree(q)} exceeds weight {n}")
    num = (A.a << 1) | A.b
    den = (A.c << 1) | A.d
    out = 0
    for i in range(degree(q) + 1):
        if q >> i & 1:
            out ^= mul(power(num, i), power(den, n - i))
    return out


def orbit_and_stabilizer(n: int, q: Poly) -> tuple[set[Poly], list[Mat2]]:
    orbit = set()
    stab = []
    for A in pgl2_elements():
        image = moebius_act(n, A, q)
        orbit.add(image)
        if image == q:
            stab.append(A)
    return orbit, stab


def classify_deg_le(n: int) -> list[Poly]:
    """Minimal-mask representative of each orbit on nonzero polys of degree <= n."""
    seen: set[Poly] = set()
    reps = []
    for q in range(1, 1 << (n + 1)):
        if q in seen:
            continue
        orbit, _ = orbit_and_stabilizer(n, q)
        seen |= orbit
        reps.append(q)
    return reps
