"""Arithmetic in the binary fields GF(2^k), 1 <= k <= 8.

Elements are plain ints (or numpy integer arrays) holding the k-bit
residue of a polynomial modulo the field's defining polynomial; bit i is
the coefficient of x^i. Addition is XOR. Multiplication goes through
exp/log tables, which also gives vectorised versions for free.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# Fixed defining polynomials, bit i = coefficient of x^i.  k = 1 uses the
# prime field itself (modulus "x": residues are the constants 0, 1).
MODULI = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
}


def _mulmod(a: int, b: int, modulus: int, k: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> k & 1:
            a ^= modulus
    return r


class FieldCtx:
    """The field GF(2^k) with a fixed modulus.

    Immutable after construction; every method is a pure function. Methods
    accept either Python ints or numpy integer arrays.
    """

    def __init__(self, k: int, modulus: int | None = None):
        if not 1 <= k <= 8:
            raise ValueError("unsupported extension degree")
        self.k = k
        self.modulus = MODULI[k] if modulus is None else modulus
        if self.modulus.bit_length() != k + 1:
            raise ValueError("modulus must have degree exactly k")
        self.order = 1 << k
        n = self.order - 1

        # find a generator of the multiplicative group
        for g in range(1, self.order):
            exp = [1]
            for _ in range(n - 1):
                exp.append(_mulmod(exp[-1], g, self.modulus, k) if k > 1 else exp[-1])
            if len(set(exp)) == n:
                break
        else:  # pragma: no cover - only reached for a reducible modulus
            raise ValueError("modulus is not irreducible (no generator found)")
        self.generator = g

        self.exp = np.array(exp + exp, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        log[np.array(exp)] = np.arange(n)
        self.log = log

        tr = np.zeros(self.order, dtype=np.uint8)
        for a in range(self.order):
            s, t = 0, a
            for _ in range(k):
                s ^= t
                t = self._mul_scalar(t, t)
            if s not in (0, 1):  # pragma: no cover
                raise ValueError("trace left the prime field; modulus not irreducible")
            tr[a] = s
        self.trace_table = tr
        self.elements = np.arange(self.order, dtype=np.int64)

        for arr in (self.exp, self.log, self.trace_table, self.elements):
            arr.setflags(write=False)

    def __repr__(self):
        return f"FieldCtx(k={self.k}, modulus={self.modulus:#x})"

    def _mul_scalar(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def mul(self, a, b):
        if isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer)):
            return self._mul_scalar(int(a), int(b))
        a = np.asarray(a)
        b = np.asarray(b)
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def square(self, a):
        return self.mul(a, a)

    def power(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % (self.order - 1)])

    def inv(self, a):
        if isinstance(a, (int, np.integer)):
            if a == 0:
                raise ZeroDivisionError("inverse of zero in GF(2^k)")
            return int(self.exp[(-self.log[a]) % (self.order - 1)])
        a = np.asarray(a)
        return np.where(a == 0, 0, self.exp[(-self.log[a]) % (self.order - 1)])

    def div(self, a, b):
        """a / b; array version maps division by zero to 0."""
        return self.mul(a, self.inv(b))

    def frobenius(self, a):
        return self.square(a)

    def sqrt(self, a):
        """a^(2^(k-1)), the unique square root."""
        for _ in range(self.k - 1):
            a = self.square(a)
        return a

    def trace(self, a):
        if isinstance(a, (int, np.integer)):
            return int(self.trace_table[a])
        return self.trace_table[np.asarray(a)]

    def artin_schreier_count(self, b, c):
        """Number of y in the field with y^2 + b*y = c."""
        if isinstance(b, (int, np.integer)) and isinstance(c, (int, np.integer)):
            if b == 0:
                return 1
            return 0 if self.trace(self.div(c, self.square(b))) else 2
        b = np.asarray(b)
        c = np.asarray(c)
        t = self.trace(self.div(c, self.square(b)))
        return np.where(b == 0, 1, 2 - 2 * t.astype(np.int64))


@lru_cache(maxsize=None)
def field_new(k: int) -> FieldCtx:
    return FieldCtx(k)
