"""Genus-4 trigonal curves over GF(2): a quadric and a cubic in P^3.

For each quadric normal form Q the cubics are swept in increasing mask
order.  The class of a cubic f is {f o A + Q*l : A in Stab(Q), l linear};
it is closed after one pass because (Q*l) o A = Q*(l o A) whenever A fixes
Q.  Smoothness is decided by looking for singular points of V(Q, f) over
GF(2^k) for k <= kmax.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import forms4 as F4
from .gf2k import FieldCtx, field_new

DEFAULT_KMAX = 6
NCUBIC = 1 << len(F4.CUBIC_MONOMIALS)


class DegenerateCubic(ValueError):
    pass


@dataclass(frozen=True, order=True)
class TrigonalModel:
    quadric: str
    cubic: int

    @property
    def Q(self) -> int:
        return F4.QUADRICS[self.quadric]

    @property
    def pretty(self) -> str:
        return f"{F4.form_to_str(self.Q, 2)} = 0, {F4.form_to_str(self.cubic, 3)} = 0"


def q_multiples(Q: int) -> set[int]:
    return {F4.multiply_forms(Q, 2, ell, 1) for ell in range(1, 16)}


@lru_cache(maxsize=None)
def _multiples_array(Q: int) -> np.ndarray:
    return np.array(sorted(q_multiples(Q) | {0}), dtype=np.int64)


@lru_cache(maxsize=None)
def stabilizer_action(Q: int) -> F4.CubicAction:
    return F4.CubicAction(F4.stabilizer4(Q))


def cubic_orbit(Q: int, f: int, action: F4.CubicAction | None = None) -> np.ndarray:
    """Sorted array of all cubics equivalent to f modulo Stab(Q) and multiples of Q."""
    action = action or stabilizer_action(Q)
    imgs = action.images(f)
    return np.unique((imgs[:, None] ^ _multiples_array(Q)[None, :]).ravel())


def cubic_classes(Q: int) -> list[tuple[int, int]]:
    """(minimal mask, orbit size) for every class of non-multiple cubics."""
    action = stabilizer_action(Q)
    visited = np.zeros(NCUBIC, dtype=bool)
    visited[_multiples_array(Q)] = True
    out = []
    f = 0
    while True:
        # next unvisited mask; the ascending sweep makes it the orbit minimum
        rest = np.flatnonzero(~visited[f:f + 4096])
        while rest.size == 0 and f < NCUBIC:
            f += 4096
            rest = np.flatnonzero(~visited[f:f + 4096])
        if rest.size == 0:
            break
        f += int(rest[0])
        orb = cubic_orbit(Q, f, action)
        visited[orb] = True
        out.append((f, orb.size))
    return out


# -- points of the quadric over GF(2^k) ----------------------------------

def projective_points(ctx: FieldCtx, lead: int | None = None, first: int | None = None) -> np.ndarray:
    """(4, n) array of normalised points of P^3 over ctx (first nonzero coordinate 1).

    ``lead``/``first`` restrict to the points whose leading 1 sits at index
    ``lead`` and (when lead < 3) whose next coordinate equals ``first``.
    """
    q = ctx.order
    blocks = []
    for ld in range(4) if lead is None else (lead,):
        free = 3 - ld
        grid = np.indices((q,) * free).reshape(free, -1) if free else np.zeros((0, 1), dtype=np.int64)
        if first is not None and free:
            grid = grid[:, grid[0] == first]
        pts = np.zeros((4, grid.shape[1]), dtype=np.int64)
        pts[ld] = 1
        pts[ld + 1:] = grid
        blocks.append(pts)
    return np.concatenate(blocks, axis=1)


def quadric_solutions(ctx: FieldCtx, Q: int) -> np.ndarray:
    """Normalised points of P^3 over ctx where Q vanishes, scanned in slices."""
    found = []
    for lead in range(4):
        firsts = range(ctx.order) if lead < 3 else (None,)
        for a in firsts:
            pts = projective_points(ctx, lead, a)
            qmon = _eval_monomials(ctx, pts, F4.QUAD_MONOMIALS)
            qval = np.bitwise_xor.reduce(qmon[[i for i in range(10) if Q >> i & 1]], axis=0)
            found.append(pts[:, qval == 0])
    return np.concatenate(found, axis=1)


def _eval_monomials(ctx: FieldCtx, pts: np.ndarray, exps) -> np.ndarray:
    out = np.empty((len(exps), pts.shape[1]), dtype=np.int64)
    powers = [[np.ones(pts.shape[1], dtype=np.int64)] for _ in range(4)]
    for i in range(4):
        for _ in range(3):
            powers[i].append(ctx.mul(powers[i][-1], pts[i]))
    for m, e in enumerate(exps):
        v = powers[0][e[0]]
        for i in range(1, 4):
            if e[i]:
                v = ctx.mul(v, powers[i][e[i]])
        out[m] = v
    return out


class QuadricPoints:
    """Points of V(Q) over GF(2^k) with cubic monomials and their partials tabulated."""

    def __init__(self, Q: int, k: int):
        ctx = field_new(k)
        self.ctx = ctx
        pts = quadric_solutions(ctx, Q)
        self.points = pts
        self.grad_q = self._gradient(ctx, pts, Q, 2)
        self.mon = _eval_monomials(ctx, pts, F4.CUBIC_MONOMIALS)
        # partials of each cubic monomial: d/dv_i x^e = e_i x^(e - unit_i)
        quad = _eval_monomials(ctx, pts, F4.QUAD_MONOMIALS)
        dmon = np.zeros((len(F4.CUBIC_MONOMIALS), 4, pts.shape[1]), dtype=np.int64)
        for m, e in enumerate(F4.CUBIC_MONOMIALS):
            for i in range(4):
                if e[i] % 2:
                    d = list(e)
                    d[i] -= 1
                    dmon[m, i] = quad[F4.QUAD_INDEX[tuple(d)]]
        self.dmon = dmon

    @staticmethod
    def _gradient(ctx, pts, form, d):
        mons = F4.QUAD_MONOMIALS if d == 2 else F4.CUBIC_MONOMIALS
        g = np.zeros((4, pts.shape[1]), dtype=np.int64)
        for m, e in enumerate(mons):
            if not form >> m & 1:
                continue
            for i in range(4):
                if e[i] % 2:
                    rest = list(e)
                    rest[i] -= 1
                    v = np.ones(pts.shape[1], dtype=np.int64)
                    for j in range(4):
                        for _ in range(rest[j]):
                            v = ctx.mul(v, pts[j])
                    g[i] ^= v
        return g

    @property
    def size(self) -> int:
        return self.points.shape[1]

    def cubic_zero_mask(self, f: int) -> np.ndarray:
        idx = [i for i in range(20) if f >> i & 1]
        return np.bitwise_xor.reduce(self.mon[idx], axis=0) == 0

    def count(self, f: int) -> int:
        return int(self.cubic_zero_mask(f).sum())

    def singular_mask(self, f: int, on: np.ndarray | None = None) -> np.ndarray:
        """Which points of V(Q, f) have a Jacobian matrix of rank < 2."""
        if on is None:
            on = self.cubic_zero_mask(f)
        sel = np.flatnonzero(on)
        idx = [i for i in range(20) if f >> i & 1]
        gf = np.bitwise_xor.reduce(self.dmon[idx][:, :, sel], axis=0)
        gq = self.grad_q[:, sel]
        mul = self.ctx.mul
        sing = np.ones(sel.size, dtype=bool)
        for i in range(4):
            for j in range(i + 1, 4):
                sing &= mul(gq[i], gf[j]) == mul(gq[j], gf[i])
        out = np.zeros(self.size, dtype=bool)
        out[sel[sing]] = True
        return out

    def has_singular_point(self, f: int) -> bool:
        return bool(self.singular_mask(f).any())


@lru_cache(maxsize=None)
def quadric_points(Q: int, k: int) -> QuadricPoints:
    return QuadricPoints(Q, k)


def smooth_genus4(Q: int, f: int, kmax: int = DEFAULT_KMAX) -> bool:
    """True when V(Q, f) has no singular point over GF(2^k), k = 1..kmax."""
    if f in q_multiples(Q) or f == 0:
        raise DegenerateCubic("degenerate pencil member")
    for k in range(1, kmax + 1):
        if quadric_points(Q, k).has_singular_point(f):
            return False
    return True


def trig_count_points(Q: int, f: int, k: int) -> int:
    return quadric_points(Q, k).count(f)


def trig_models(kmax: int = DEFAULT_KMAX, quadrics=("q1", "q2", "q3"), progress=None) -> list[TrigonalModel]:
    """Canonical smooth models for the requested quadric labels, sorted."""
    models = []
    for label in quadrics:
        Q = F4.QUADRICS[label]
        reps = [f for f, _ in cubic_classes(Q)]
        # cheap small fields first; most singular candidates die here
        for k in range(1, kmax + 1):
            pts = quadric_points(Q, k)
            reps = [f for f in reps if not pts.has_singular_point(f)]
            if progress:
                progress(label, k, len(reps))
        models.extend(TrigonalModel(label, f) for f in reps)
    return sorted(models)


def canonical_trigonal(Q: int, f: int) -> TrigonalModel:
    """Census representative of the curve V(Q, f) for an arbitrary rank >= 3 quadric Q."""
    tab = F4.quad_action_table()
    targets = {v: k for k, v in F4.QUADRICS.items()}
    hits = np.flatnonzero(np.isin(tab[:, Q], list(targets)))
    if hits.size == 0:
        raise ValueError("quadric is not of rank >= 3")
    a = int(hits[0])
    A = F4.gl4_enumerate()[a]
    label = targets[int(tab[a, Q])]
    g = F4.act_cubic(A, f)
    return TrigonalModel(label, int(cubic_orbit(F4.QUADRICS[label], g)[0]))
