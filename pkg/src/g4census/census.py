"""The combined census: models, point counts, L-polynomials, isogeny classes."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor

from . import forms4 as F4
from . import hyper, trig
from . import polyf2 as P
from .zeta import CurveRecord, isogeny_group

log = logging.getLogger(__name__)

NCOUNTS = 5  # N_1..N_5 are stored for every curve


def hyp_record(m: hyper.HyperellipticModel) -> CurveRecord:
    N = tuple(hyper.hyper_count_points(m, k) for k in range(1, NCOUNTS + 1))
    model = {"q": P.to_hex(m.q), "p": P.to_hex(m.p), "pretty": m.pretty}
    return CurveRecord("hyp", model, N)


def trig_record(m: trig.TrigonalModel) -> CurveRecord:
    N = tuple(trig.trig_count_points(m.Q, m.cubic, k) for k in range(1, NCOUNTS + 1))
    model = {"q": format(m.Q, "03x"), "quadric": m.quadric,
             "cubic": format(m.cubic, "05x"), "pretty": m.pretty}
    return CurveRecord("trig", model, N)


def hyper_census() -> list[CurveRecord]:
    return [hyp_record(m) for m in hyper.hyper_models()]


def _trig_for_quadric(args) -> list[CurveRecord]:
    label, kmax = args
    return [trig_record(m) for m in trig.trig_models(kmax=kmax, quadrics=(label,))]


def trig_census(kmax: int = trig.DEFAULT_KMAX, threads: int = 1) -> list[CurveRecord]:
    jobs = [(label, kmax) for label in F4.QUADRICS]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as ex:
            parts = list(ex.map(_trig_for_quadric, jobs))
    else:
        parts = [_trig_for_quadric(j) for j in jobs]
    return [r for part in parts for r in part]


def sort_key(r: CurveRecord):
    if r.family == "hyp":
        return (0, "", int(r.model["q"], 16), int(r.model["p"], 16))
    return (1, r.model["quadric"], int(r.model["cubic"], 16), 0)


def full_census(families=("hyp", "trig"), kmax: int = trig.DEFAULT_KMAX, threads: int = 1):
    """Sorted records with ids and isogeny classes assigned, plus the multiplicity table."""
    records: list[CurveRecord] = []
    if "hyp" in families:
        records += hyper_census()
        log.info("hyperelliptic: %d", len(records))
    if "trig" in families:
        t = trig_census(kmax, threads)
        log.info("trigonal: %d", len(t))
        records += t
    records.sort(key=sort_key)
    for i, r in enumerate(records):
        r.id = i
    mult = isogeny_group(records)
    return records, mult
