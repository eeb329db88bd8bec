"""Isomorphism-class census of genus-4 curves over GF(2)."""

from .gf2k import FieldCtx, field_new
from .hyper import HyperellipticModel, genus4_check, hyper_count_points
from .trig import TrigonalModel, smooth_genus4, trig_count_points
from .zeta import CurveRecord, a_numbers, counts_from_l, isogeny_group, l_from_counts

__version__ = "0.1.0"

__all__ = [
    "FieldCtx", "field_new", "HyperellipticModel", "genus4_check", "hyper_count_points",
    "TrigonalModel", "smooth_genus4", "trig_count_points", "CurveRecord", "a_numbers",
    "counts_from_l", "isogeny_group", "l_from_counts",
]
