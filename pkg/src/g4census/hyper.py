"""Genus-4 hyperelliptic curves y^2 + q(x) y = p(x) over GF(2).

The census fixes q to one representative of each PGL(2,2)-orbit on
nonzero polynomials of degree <= 5, then sweeps the 2^11 polynomials p of
degree <= 10, collapsing each class {psi_10(A)(p) + r^2 + q r} to its
minimal mask.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import polyf2 as P
from .gf2k import FieldCtx, field_new
from .polyf2 import Mat2

GENUS = 4
Q_WEIGHT = GENUS + 1  # 5
P_WEIGHT = 2 * GENUS + 2  # 10


@dataclass(frozen=True, order=True)
class HyperellipticModel:
    q: int
    p: int

    @property
    def pretty(self) -> str:
        return f"y^2 + ({P.to_str(self.q)})*y = {P.to_str(self.p)}"


def genus4_check(q: int, p: int) -> bool:
    """Smoothness (hence genus 4) of y^2 + q y = p in both charts."""
    dq = P.derivative(q)
    h = P.square(P.derivative(p)) ^ P.mul(P.square(dq), p)
    if P.gcd(q, h) != 1:
        return False
    if P.degree(q) == Q_WEIGHT:
        return True
    a9, a10, b4 = P.coeff(p, 9), P.coeff(p, 10), P.coeff(q, 4)
    return a9 != (a10 & b4)


def _r_moves(q: int) -> list[int]:
    return [P.square(r) ^ P.mul(q, r) for r in range(1 << (Q_WEIGHT + 1))]


def p_orbit(q: int, stab: list[Mat2], p: int, moves: list[int] | None = None) -> set[int]:
    """All p' giving a curve isomorphic to y^2 + q y = p by a q-preserving change."""
    if moves is None:
        moves = _r_moves(q)
    out = set()
    for A in stab:
        base = P.moebius_act(P_WEIGHT, A, p) if p else 0
        out.update(base ^ m for m in moves)
    return out


def q_representatives() -> list[int]:
    return P.classify_deg_le(Q_WEIGHT)


def classes_for_q(q: int) -> list[tuple[int, int]]:
    """(minimal p mask, orbit size) for every p-class with this q, genus or not."""
    _, stab = P.orbit_and_stabilizer(Q_WEIGHT, q)
    moves = _r_moves(q)
    visited = np.zeros(1 << (P_WEIGHT + 1), dtype=bool)
    out = []
    for p in range(visited.size):
        if visited[p]:
            continue
        orb = p_orbit(q, stab, p, moves)
        visited[list(orb)] = True
        out.append((p, len(orb)))
    return out


def hyper_models() -> list[HyperellipticModel]:
    """Canonical genus-4 models, sorted by (q mask, p mask)."""
    models = []
    for q in q_representatives():
        for p, _ in classes_for_q(q):
            if genus4_check(q, p):
                models.append(HyperellipticModel(q, p))
    return sorted(models)


def hyper_count_points(m: HyperellipticModel, k: int, ctx: FieldCtx | None = None) -> int:
    """Number of GF(2^k)-points on the smooth model, infinity included."""
    ctx = ctx or field_new(k)
    xs = ctx.elements
    qa = P.eval_poly(m.q, ctx, xs)
    pa = P.eval_poly(m.p, ctx, xs)
    affine = int(ctx.artin_schreier_count(qa, pa).sum())
    b5 = P.coeff(m.q, Q_WEIGHT)
    a10 = P.coeff(m.p, P_WEIGHT)
    return affine + ctx.artin_schreier_count(b5, a10)


def _eval_many(polys: np.ndarray, ctx: FieldCtx, xs: np.ndarray, n: int) -> np.ndarray:
    """(len(polys), len(xs)) table of values of each poly (deg <= n) at each x."""
    pw = [np.ones_like(xs)]
    for _ in range(n):
        pw.append(ctx.mul(pw[-1], xs))
    out = np.zeros((polys.size, xs.size), dtype=np.int64)
    for i in range(n + 1):
        hit = (polys >> i & 1).astype(bool)
        out[hit] ^= pw[i]
    return out


def has_singular_point_bruteforce(q: int, ps, kmax: int = 5) -> np.ndarray:
    """For each p in ``ps``: does y^2 + q y + p = 0 have a singular point over GF(2^k), k <= kmax?

    Independent of :func:`genus4_check`.  Every (x, y) of the affine chart
    and every (0, y) of the chart at infinity, (x, y) -> (1/x, y/x^5), is
    tested against f = f_x = f_y = 0.  Any singular point has x-coordinate
    a root of q (affine) or of its reversal, so degree <= 5 suffices.
    """
    ps = np.asarray(ps, dtype=np.int64)
    rev_p = np.array([P.reverse(int(p), P_WEIGHT) for p in ps], dtype=np.int64)
    charts = [(q, ps), (P.reverse(q, Q_WEIGHT), rev_p)]
    sing = np.zeros(ps.size, dtype=bool)
    for k in range(1, kmax + 1):
        ctx = field_new(k)
        ys = ctx.elements
        ysq = ctx.mul(ys, ys)
        for chart, (qc, pc) in enumerate(charts):
            xs = ctx.elements if chart == 0 else np.zeros(1, dtype=np.int64)
            qx = _eval_many(np.array([qc]), ctx, xs, Q_WEIGHT)[0]
            dqx = _eval_many(np.array([P.derivative(qc)]), ctx, xs, Q_WEIGHT)[0]
            px = _eval_many(pc, ctx, xs, P_WEIGHT)
            dpx = _eval_many((pc & 0x2AA) >> 1, ctx, xs, P_WEIGHT)
            # axes: (p, x, y)
            f = ysq[None, None, :] ^ ctx.mul(qx[:, None], ys[None, :])[None] ^ px[:, :, None]
            fx = ctx.mul(dqx[:, None], ys[None, :])[None] ^ dpx[:, :, None]
            fy = np.broadcast_to((qx != 0)[None, :, None], f.shape)
            sing |= ((f == 0) & (fx == 0) & ~fy).any(axis=(1, 2))
    return sing


def canonical_hyperelliptic(q: int, p: int) -> HyperellipticModel:
    """Census representative of y^2 + q y = p for arbitrary q (deg <= 5), p (deg <= 10)."""
    reps = set(q_representatives())
    for A in P.pgl2_elements():
        q2 = P.moebius_act(Q_WEIGHT, A, q)
        if q2 in reps:
            break
    p2 = P.moebius_act(P_WEIGHT, A, p) if p else 0
    _, stab = P.orbit_and_stabilizer(Q_WEIGHT, q2)
    return HyperellipticModel(q2, min(p_orbit(q2, stab, p2)))
