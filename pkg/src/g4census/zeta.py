"""Point counts, degree-n point counts, L-polynomials and isogeny grouping.

Conventions: L(T) = prod_i (1 - alpha_i T) = sum_i c_i T^i, with power
sums s_k = sum_i alpha_i^k = 2^k + 1 - N_k.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

GENUS = 4
Q = 2


class CountError(ValueError):
    """Point counts inconsistent with a smooth genus-4 curve over GF(2)."""


def a_numbers(N) -> list[int]:
    """Number of closed points of each exact degree n from N_1..N_m."""
    a: list[int] = []
    for n, Nn in enumerate(N, start=1):
        r = Nn - sum(d * a[d - 1] for d in range(1, n) if n % d == 0)
        if r < 0 or r % n:
            raise CountError(f"a_{n} = {r}/{n} is not a nonnegative integer")
        a.append(r // n)
    return a


def weil_ok(k: int, s: int) -> bool:
    # |s| <= 2g q^(k/2), compared exactly
    bound_sq = (2 * GENUS) ** 2 * Q**k
    return s * s <= bound_sq


def power_sums(N) -> list[int]:
    return [Q**k + 1 - Nk for k, Nk in enumerate(N, start=1)]


def l_from_counts(N) -> tuple[int, ...]:
    """Coefficients c_0..c_8 of the L-polynomial from N_1..N_4."""
    N = list(N)[:GENUS]
    if len(N) < GENUS:
        raise ValueError("need N_1..N_4")
    s = power_sums(N)
    for k, sk in enumerate(s, start=1):
        if not weil_ok(k, sk):
            raise CountError(f"N_{k} = {N[k - 1]} violates the Weil bound")
    e = [1]
    for k in range(1, GENUS + 1):
        t = sum((-1) ** (i - 1) * e[k - i] * s[i - 1] for i in range(1, k + 1))
        if t % k:
            raise CountError(f"Newton step {k} is not integral")
        e.append(t // k)
    c = [(-1) ** i * e[i] for i in range(GENUS + 1)]
    for i in range(GENUS - 1, -1, -1):
        c.append(Q ** (GENUS - i) * c[i])
    return tuple(c)


def power_sums_from_l(L, kmax: int) -> list[int]:
    e = [(-1) ** i * ci for i, ci in enumerate(L)]
    e += [0] * max(0, kmax + 1 - len(e))
    s: list[int] = []
    for k in range(1, kmax + 1):
        t = k * e[k] - sum((-1) ** (i - 1) * e[k - i] * s[i - 1] for i in range(1, k))
        s.append((-1) ** (k - 1) * t)
    return s


def counts_from_l(L, k: int) -> int:
    return Q**k + 1 - power_sums_from_l(L, k)[-1]


def check_l(L) -> list[str]:
    """Problems with an L-polynomial (empty list when it looks valid)."""
    errs = []
    if len(L) != 2 * GENUS + 1 or L[0] != 1:
        errs.append("bad shape or c_0 != 1")
        return errs
    for i in range(GENUS):
        if L[2 * GENUS - i] != Q ** (GENUS - i) * L[i]:
            errs.append(f"functional equation fails at c_{2 * GENUS - i}")
    for k, sk in enumerate(power_sums_from_l(L, 8), start=1):
        if not weil_ok(k, sk):
            errs.append(f"power sum s_{k} = {sk} violates the Weil bound")
    return errs


@dataclass
class CurveRecord:
    family: str  # "hyp" or "trig"
    model: dict
    N: tuple[int, ...]
    a: tuple[int, ...] = ()
    L: tuple[int, ...] = ()
    id: int = -1
    iso_class: int = -1
    iso_size: int = 0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.a:
            self.a = tuple(a_numbers(self.N))
        if not self.L:
            self.L = l_from_counts(self.N[:GENUS])


def isogeny_group(records: list[CurveRecord]) -> dict:
    """Fill iso_class/iso_size in place and return multiplicity histograms.

    Class ids follow the lexicographic order of the coefficient vectors.
    """
    by_l: dict[tuple, list[CurveRecord]] = defaultdict(list)
    for r in records:
        by_l[tuple(r.L)].append(r)
    for cid, L in enumerate(sorted(by_l)):
        for r in by_l[L]:
            r.iso_class = cid
            r.iso_size = len(by_l[L])
    return multiplicity_table(records)


def multiplicity_table(records) -> dict:
    """For each family: histogram of 'number of members per L-polynomial'.

    Keys "hyp"/"trig" count, over all L-polynomials of the whole census,
    how many have exactly m members of that family (m = 0 included);
    "all" counts total members (all classes have at least one).
    """
    by_l: dict[tuple, Counter] = defaultdict(Counter)
    for r in records:
        by_l[tuple(_get(r, "L"))][_get(r, "family")] += 1
    out = {}
    for fam in ("hyp", "trig"):
        out[fam] = _dense(Counter(c[fam] for c in by_l.values()), start=0)
    out["all"] = _dense(Counter(sum(c.values()) for c in by_l.values()), start=0)
    out["classes"] = len(by_l)
    return out


def _get(r, key):
    return r[key] if isinstance(r, dict) else getattr(r, key)


def _dense(c: Counter, start: int) -> list[int]:
    if not c:
        return []
    return [c.get(i, 0) for i in range(start, max(c) + 1)]


def histogram(values, length: int | None = None) -> list[int]:
    c = Counter(values)
    n = length if length is not None else max(c) + 1
    return [c.get(i, 0) for i in range(n)]
