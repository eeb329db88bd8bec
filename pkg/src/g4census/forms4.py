"""Quadratic and cubic forms in X, Y, Z, T over GF(2).

Forms are bit masks over a fixed monomial order (exponent vectors sorted
descending lexicographically), so bit 0 of a quadric is X^2 and bit 0 of
a cubic is X^3.  A matrix in GL(4,2) is a tuple of four row masks; row i
bit j is the entry A[i][j].  Acting by A substitutes v -> A v, i.e. the
variable v_i is replaced by the linear form sum_j A[i][j] v_j.  With this
convention act(B, act(A, F)) == act(A @ B, F).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement, product

import numpy as np

VARS = "XYZT"
NVARS = 4

Mat4 = tuple  # (row0, row1, row2, row3), each a 4-bit mask


def monomials(d: int) -> list[tuple[int, ...]]:
    exps = []
    for combo in combinations_with_replacement(range(NVARS), d):
        e = [0] * NVARS
        for i in combo:
            e[i] += 1
        exps.append(tuple(e))
    return sorted(set(exps), reverse=True)


QUAD_MONOMIALS = monomials(2)
CUBIC_MONOMIALS = monomials(3)
QUAD_INDEX = {e: i for i, e in enumerate(QUAD_MONOMIALS)}
CUBIC_INDEX = {e: i for i, e in enumerate(CUBIC_MONOMIALS)}
_INDEX = {2: QUAD_INDEX, 3: CUBIC_INDEX}
_MONOMIALS = {1: [tuple(int(i == j) for j in range(NVARS)) for i in range(NVARS)],
              2: QUAD_MONOMIALS, 3: CUBIC_MONOMIALS}


# -- sparse polynomials: frozenset of exponent tuples (coefficients mod 2) --

def _pmul(f: frozenset, g: frozenset) -> frozenset:
    out: set = set()
    for a in f:
        for b in g:
            out ^= {tuple(x + y for x, y in zip(a, b))}
    return frozenset(out)


def _linear(mask: int) -> frozenset:
    return frozenset(_MONOMIALS[1][j] for j in range(NVARS) if mask >> j & 1)


def mask_to_sparse(mask: int, d: int) -> frozenset:
    mons = _MONOMIALS[d]
    return frozenset(mons[i] for i in range(len(mons)) if mask >> i & 1)


def sparse_to_mask(f: frozenset, d: int) -> int:
    idx = _INDEX[d]
    m = 0
    for e in f:
        m |= 1 << idx[e]
    return m


def _monomial_image(A: Mat4, e: tuple[int, ...]) -> frozenset:
    out = frozenset([(0,) * NVARS])
    for i, ei in enumerate(e):
        for _ in range(ei):
            out = _pmul(out, _linear(A[i]))
    return out


def basis_images(A: Mat4, d: int) -> list[int]:
    """Masks of the images of each degree-d basis monomial under A."""
    return [sparse_to_mask(_monomial_image(A, e), d) for e in _MONOMIALS[d]]


def _apply_images(images: list[int], mask: int) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out ^= images[i]
        mask >>= 1
        i += 1
    return out


def act_quad(A: Mat4, Q: int) -> int:
    return _apply_images(basis_images(A, 2), Q)


def act_cubic(A: Mat4, F: int) -> int:
    return _apply_images(basis_images(A, 3), F)


def linear_act(A: Mat4, ell: int) -> int:
    """ell o A for a linear form ell (4-bit mask over X, Y, Z, T)."""
    out = 0
    for i in range(NVARS):
        if ell >> i & 1:
            out ^= A[i]
    return out


def multiply_forms(f: int, df: int, g: int, dg: int) -> int:
    """Product of a degree-df form and a degree-dg form, as a mask."""
    fs = _linear(f) if df == 1 else mask_to_sparse(f, df)
    gs = _linear(g) if dg == 1 else mask_to_sparse(g, dg)
    return sparse_to_mask(_pmul(fs, gs), df + dg)


def form_to_str(mask: int, d: int) -> str:
    if mask == 0:
        return "0"
    terms = []
    for i, e in enumerate(_MONOMIALS[d]):
        if mask >> i & 1:
            parts = []
            for v, ei in zip(VARS, e):
                if ei == 1:
                    parts.append(v)
                elif ei > 1:
                    parts.append(f"{v}^{ei}")
            terms.append("*".join(parts))
    return " + ".join(terms)


def form_from_str(s: str, d: int) -> int:
    f: frozenset = frozenset()
    for term in s.replace(" ", "").split("+"):
        e = [0] * NVARS
        for factor in term.replace("~", "*").split("*"):
            v, _, pw = factor.partition("^")
            e[VARS.index(v)] += int(pw) if pw else 1
        if sum(e) != d:
            raise ValueError(f"term {term!r} is not of degree {d}")
        f = f ^ frozenset([tuple(e)])
    return sparse_to_mask(f, d)


# -- the group ----------------------------------------------------------

def _rank_rows(rows) -> int:
    rows = list(rows)
    r = 0
    for bit in range(NVARS):
        piv = next((i for i in range(r, len(rows)) if rows[i] >> bit & 1), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] >> bit & 1:
                rows[i] ^= rows[r]
        r += 1
    return r


def mat_mul(A: Mat4, B: Mat4) -> Mat4:
    # (AB)[i] = sum_j A[i][j] * B[j]
    return tuple(linear_act(B, A[i]) for i in range(NVARS))


IDENTITY4: Mat4 = (1, 2, 4, 8)


def mat_inverse(A: Mat4) -> Mat4:
    rows = list(A)
    inv = list(IDENTITY4)
    for col in range(NVARS):
        piv = next(i for i in range(col, NVARS) if rows[i] >> col & 1)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        for i in range(NVARS):
            if i != col and rows[i] >> col & 1:
                rows[i] ^= rows[col]
                inv[i] ^= inv[col]
    return tuple(inv)


@lru_cache(maxsize=None)
def gl4_enumerate() -> tuple[Mat4, ...]:
    """All 20160 invertible 4x4 matrices over GF(2)."""
    return tuple(m for m in product(range(16), repeat=NVARS) if _rank_rows(m) == NVARS)


# -- invariants of quadrics ---------------------------------------------

def quad_value(Q: int, v: int) -> int:
    """Q evaluated at the GF(2)-vector v (bit j = coordinate j)."""
    s = 0
    for i, e in enumerate(QUAD_MONOMIALS):
        if Q >> i & 1:
            t = 1
            for j, ej in enumerate(e):
                if ej:
                    t &= v >> j & 1
            s ^= t
    return s


def polar(Q: int, u: int, v: int) -> int:
    return quad_value(Q, u ^ v) ^ quad_value(Q, u) ^ quad_value(Q, v)


def rank_arf(Q: int) -> tuple[int, int | None]:
    """(rank, Arf invariant); the Arf invariant is None unless rank == 4."""
    vecs = range(1 << NVARS)
    radical = [v for v in vecs if all(polar(Q, v, u) == 0 for u in vecs)]
    quasi = [v for v in radical if quad_value(Q, v) == 0]
    rank = NVARS - (len(quasi).bit_length() - 1)
    if rank < NVARS:
        return rank, None
    # greedy symplectic basis
    space = list(range(1, 1 << NVARS))
    arf = 0
    while space:
        e = space[0]
        f = next(u for u in space if polar(Q, e, u))
        arf ^= quad_value(Q, e) & quad_value(Q, f)
        # project onto the orthogonal complement of <e, f>
        space = [u for u in space if polar(Q, u, e) == 0 and polar(Q, u, f) == 0]
    return rank, arf


Q1 = form_from_str("X*Y + Z*T", 2)
Q2 = form_from_str("X*Y + Z^2 + Z*T + T^2", 2)
Q3 = form_from_str("X*Y + Z^2", 2)
QUADRICS = {"q1": Q1, "q2": Q2, "q3": Q3}


# -- vectorised actions -------------------------------------------------

def _span_table(images: np.ndarray) -> np.ndarray:
    """table[m] = XOR of images[i] over the set bits i of m."""
    tab = np.zeros(1, dtype=np.int64)
    for img in images:
        tab = np.concatenate([tab, tab ^ img])
    return tab


@lru_cache(maxsize=1)
def quad_action_table() -> np.ndarray:
    """(20160, 1024) array: row a is act_quad(gl4_enumerate()[a], .)."""
    mats = gl4_enumerate()
    out = np.empty((len(mats), 1 << len(QUAD_MONOMIALS)), dtype=np.int16)
    for a, A in enumerate(mats):
        out[a] = _span_table(np.array(basis_images(A, 2), dtype=np.int64))
    return out


def stabilizer4(Q: int) -> list[Mat4]:
    tab = quad_action_table()
    mats = gl4_enumerate()
    return [mats[a] for a in np.flatnonzero(tab[:, Q] == Q)]


def quad_orbits() -> list[tuple[int, int]]:
    """(minimal mask, size) of every GL(4,2)-orbit on quadratic forms."""
    tab = quad_action_table()
    visited = np.zeros(tab.shape[1], dtype=bool)
    out = []
    for Q in range(tab.shape[1]):
        if visited[Q]:
            continue
        orb = np.unique(tab[:, Q])
        visited[orb] = True
        out.append((Q, len(orb)))
    return out


def quad_classify_check() -> list[dict]:
    """Orbits of forms of rank >= 3 with their rank, Arf invariant and size."""
    rows = []
    for Q, size in quad_orbits():
        rank, arf = rank_arf(Q)
        if rank >= 3:
            rows.append({"rep": Q, "size": size, "rank": rank, "arf": arf})
    return rows


class CubicAction:
    """act_cubic for a fixed list of matrices, vectorised over matrices."""

    def __init__(self, mats):
        self.mats = list(mats)
        lo = np.empty((len(self.mats), 1024), dtype=np.int64)
        hi = np.empty_like(lo)
        for a, A in enumerate(self.mats):
            imgs = np.array(basis_images(A, 3), dtype=np.int64)
            lo[a] = _span_table(imgs[:10])
            hi[a] = _span_table(imgs[10:])
        self.lo = lo
        self.hi = hi

    def images(self, F: int) -> np.ndarray:
        return self.lo[:, F & 1023] ^ self.hi[:, F >> 10]
