"""Named pass/fail checks over the census and its building blocks."""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from typing import Callable, NamedTuple

import numpy as np

from . import forms4 as F4
from . import hyper, trig
from . import polyf2 as P
from . import reference as R
from .tables import all_tables
from .zeta import a_numbers, check_l, counts_from_l, l_from_counts

log = logging.getLogger(__name__)

VALIDATED_KMAX = 6


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def _eq(name, got, want) -> Check:
    return Check(name, got == want, f"got {got}, expected {want}")


# -- census-level -------------------------------------------------------

def check_counts(rows) -> list[Check]:
    fam = Counter(r["family"] for r in rows)
    return [
        _eq("hyperelliptic_count", fam["hyp"], R.HYP_COUNT),
        _eq("trigonal_count", fam["trig"], R.TRIG_COUNT),
        _eq("total_count", len(rows), R.TOTAL_COUNT),
        _eq("isogeny_classes", len({tuple(r["L"]) for r in rows}), R.ISOGENY_CLASSES),
    ]


def check_tables(rows) -> list[Check]:
    t = all_tables(rows)
    out = []
    for n in (1, 2, 3, 4):
        for fam in ("hyp", "trig", "total"):
            out.append(_eq(f"table_a{n}_{fam}", t[n][fam], R.A_TABLES[n][fam]))
    for fam in ("hyp", "trig", "total"):
        out.append(_eq(f"table_L_{fam}", t["L"][fam], R.L_TABLE[fam]))
    return out


def check_record_invariants(rows) -> list[Check]:
    bad = defaultdict(list)
    for r in rows:
        N, a, L = r["N"], r["a"], tuple(r["L"])
        try:
            if list(a_numbers(N)) != list(a):
                bad["a_recurrence"].append(r["id"])
        except ValueError:
            bad["a_recurrence"].append(r["id"])
        if check_l(L):
            bad["l_shape_weil"].append(r["id"])
        try:
            if l_from_counts(N[:4]) != L:
                bad["l_from_counts"].append(r["id"])
        except ValueError:
            bad["l_from_counts"].append(r["id"])
        if [counts_from_l(L, k) for k in range(1, 5)] != list(N[:4]):
            bad["l_round_trip"].append(r["id"])
        if counts_from_l(L, 5) != N[4]:
            bad["n5_from_l"].append(r["id"])
        if any((Nk - (2**k + 1)) ** 2 > 64 * 2**k for k, Nk in enumerate(N, start=1)):
            bad["weil_bound"].append(r["id"])
    sizes = Counter(tuple(r["L"]) for r in rows)
    for r in rows:
        if r["iso_size"] != sizes[tuple(r["L"])]:
            bad["iso_size"].append(r["id"])
    classes = defaultdict(set)
    for r in rows:
        classes[r["iso_class"]].add(tuple(r["L"]))
    if any(len(v) != 1 for v in classes.values()) or len(classes) != len(sizes):
        bad["iso_class"].append(-1)
    names = ["a_recurrence", "l_shape_weil", "l_from_counts", "l_round_trip", "n5_from_l",
             "weil_bound", "iso_size", "iso_class"]
    return [Check(f"records_{n}", not bad[n], f"failing ids {bad[n][:10]}" if bad[n] else "")
            for n in names]


def _find_hyp(rows, q, p):
    m = hyper.canonical_hyperelliptic(q, p)
    return [r for r in rows if r["family"] == "hyp"
            and int(r["q"], 16) == m.q and int(r["p"], 16) == m.p]


def _find_trig(rows, Q, f):
    m = trig.canonical_trigonal(Q, f)
    return [r for r in rows if r["family"] == "trig"
            and r["quadric"] == m.quadric and int(r["cubic"], 16) == m.cubic]


def check_fixtures(rows) -> list[Check]:
    """The named special curves, located in the census and matched to their invariants."""
    out = []

    def unique(name, pred, fixture, extra: Callable | None = None):
        hits = [r for r in rows if pred(r)]
        found = _find_trig(rows, *fixture)
        ok = len(hits) == 1 and found == hits and (extra is None or extra(hits[0]))
        out.append(Check(name, ok, f"{len(hits)} matching rows; fixture located: {bool(found)}"))

    unique("fixture_maximal_N1_8", lambda r: r["N"][0] == 8, R.MAXIMAL_CURVE,
           lambda r: r["a"][1] == 0 and r["a"][2] == 0 and r["a"][3] == 2)
    unique("fixture_a2_7", lambda r: r["a"][1] == 7, R.A2_MAX_CURVE,
           lambda r: r["N"][1] == 15 and r["N"][0] == 1)
    unique("fixture_a4_10", lambda r: r["a"][3] == 10, R.A4_MAX_CURVE, lambda r: r["N"][3] == 45)
    unique("fixture_a5_14", lambda r: r["a"][4] == 14, R.A5_MAX_CURVE,
           lambda r: r["N"][4] == 71 and r["N"][0] == 1)
    unique("fixture_minimal", lambda r: list(r["a"][:4]) == [0, 0, 0, 1], R.MINIMAL_CURVE)

    a3 = [r for r in rows if r["a"][2] == 8]
    located = [x for fx in R.A3_MAX_CURVES for x in _find_trig(rows, *fx)]
    out.append(Check("fixture_a3_8_pair",
                     len(a3) == 2 and sorted(r["id"] for r in located) == sorted(r["id"] for r in a3)
                     and all(r["N"][2] == 25 for r in a3),
                     f"{len(a3)} rows with a_3 = 8"))
    out.append(Check("max_N2_15_count",
                     sum(r["N"][1] == 15 for r in rows) == 8, "curves with 15 points over GF(4)"))

    a5_zero = [r for r in rows if r["a"][4] == 0]
    shared = [c for c in Counter(tuple(r["L"]) for r in a5_zero).values() if c > 1]
    out.append(Check("fixture_a5_zero_four",
                     len(a5_zero) == 4 and shared == [2],
                     f"{len(a5_zero)} curves with a_5 = 0 "
                     f"({sum(r['family'] == 'trig' for r in a5_zero)} trigonal); "
                     f"L multiplicities among them {sorted(Counter(tuple(r['L']) for r in a5_zero).values())}"))

    trig_zero = [r for r in a5_zero if r["family"] == "trig"]
    trig_shared = [c for c in Counter(tuple(r["L"]) for r in trig_zero).values() if c > 1]
    out.append(Check("a5_zero_trigonal_subset", len(trig_zero) == 4 and trig_shared == [2],
                     f"{len(trig_zero)} trigonal curves with a_5 = 0, shared L counts {trig_shared}"))

    # the size-7 isogeny class
    hyp_rows = [x for p in R.SHARED_L_HYP_P for x in _find_hyp(rows, R.SHARED_L_HYP_Q, p)]
    trig_rows = [x for fx in R.SHARED_L_TRIG for x in _find_trig(rows, *fx)]
    seven = [r for r in rows if r["iso_size"] == 7]
    Ls = {tuple(r["L"]) for r in seven}
    ok = (len(seven) == 7 and len(Ls) == 1
          and sorted(r["id"] for r in seven) == sorted(r["id"] for r in hyp_rows + trig_rows)
          and Counter(r["family"] for r in seven) == Counter(hyp=4, trig=3)
          and all(tuple(r["N"][:4]) == R.SHARED_L_COUNTS and tuple(r["a"][:4]) == R.SHARED_L_A
                  for r in seven))
    out.append(Check("fixture_size7_class", ok, f"{len(seven)} rows in size-7 classes"))

    (h,) = _find_hyp(rows, *R.HYP_WITH_FOUR_TRIG) or [None]
    if h is None:
        out.append(Check("fixture_x_x9p1_isogenous", False, "model not in census"))
    else:
        mates = [r for r in rows if r["L"] == h["L"] and r["id"] != h["id"]]
        labels = sorted(r["quadric"] for r in mates if r["family"] == "trig")
        out.append(Check("fixture_x_x9p1_isogenous",
                         len(mates) == 4 and all(r["family"] == "trig" for r in mates)
                         and set(labels) == {"q1", "q2", "q3"},
                         f"isogenous to {len(mates)} others, quadrics {labels}"))
    return out


def check_database(rows, reference_rows) -> list[Check]:
    """A stored database must agree row-for-row with a fresh computation."""
    diffs = [r.get("id") for r, s in zip(rows, reference_rows) if r != s]
    ok = len(rows) == len(reference_rows) and not diffs
    return [Check("database_matches_recomputation", ok,
                  f"{len(rows)} rows vs {len(reference_rows)}; differing ids {diffs[:10]}")]


# -- building blocks ----------------------------------------------------

def check_q_classification() -> list[Check]:
    reps = P.classify_deg_le(5)
    orbit_of = {}
    for rep in reps:
        for f in P.orbit_and_stabilizer(5, rep)[0]:
            orbit_of[f] = rep
    listed = sorted(orbit_of[q] for q in R.Q_LIST)
    out = [_eq("q_orbit_count", len(reps), 15),
           Check("q_list_matches_orbits", listed == sorted(reps), "one listed polynomial per orbit"),
           _eq("q_orbit_sizes_sum", sum(len(P.orbit_and_stabilizer(5, q)[0]) for q in reps), 63)]
    stab = {q: len(P.orbit_and_stabilizer(5, q)[1]) for q in R.Q_LIST}
    want = {q: 2 for q in R.Q_LIST}
    want.update({q: 1 for q in R.Q_TRIVIAL_STAB})
    want[R.Q_FULL_STAB] = 6
    want[R.Q_ORDER3_STAB] = 3
    out.append(Check("q_stabilizer_orders", stab == want,
                     ", ".join(f"{P.to_str(q)}:{n}" for q, n in stab.items())))
    return out


def check_quadric_classification() -> list[Check]:
    rows = F4.quad_classify_check()
    inv = sorted((r["rank"], -1 if r["arf"] is None else r["arf"]) for r in rows)
    stabs = {lbl: len(F4.stabilizer4(Q)) for lbl, Q in F4.QUADRICS.items()}
    normal = {lbl: F4.rank_arf(Q) for lbl, Q in F4.QUADRICS.items()}
    return [
        _eq("quadric_orbits_rank_ge3", len(rows), 3),
        _eq("quadric_orbit_invariants", inv, [(3, -1), (4, 0), (4, 1)]),
        _eq("quadric_normal_forms", normal, {"q1": (4, 0), "q2": (4, 1), "q3": (3, None)}),
        Check("quadric_stabilizers", stabs["q1"] == 72 and stabs["q2"] == 120
              and all(20160 % n == 0 for n in stabs.values()), str(stabs)),
    ]


def check_hyper_criterion() -> list[Check]:
    mism = 0
    for q in hyper.q_representatives():
        ps = np.arange(1 << 11)
        brute = hyper.has_singular_point_bruteforce(q, ps)
        crit = np.array([hyper.genus4_check(q, int(p)) for p in ps])
        mism += int((crit == brute).sum())
    return [Check("hyper_criterion_vs_bruteforce", mism == 0, f"{mism} disagreements over 15 x 2048")]


def check_config(kmax: int) -> list[str]:
    warnings = []
    if kmax < VALIDATED_KMAX:
        warnings.append(f"kmax={kmax} is below the validated bound {VALIDATED_KMAX}")
    return warnings


def run_all(rows, stored_rows=None) -> list[Check]:
    checks = []
    checks += check_q_classification()
    checks += check_quadric_classification()
    checks += check_hyper_criterion()
    checks += check_counts(rows)
    checks += check_tables(rows)
    checks += check_record_invariants(rows)
    checks += check_fixtures(rows)
    if stored_rows is not None:
        checks += [c._replace(name="stored_" + c.name) for c in check_record_invariants(stored_rows)]
        checks += check_database(stored_rows, rows)
    return checks
