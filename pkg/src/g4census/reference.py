"""Published census values that the computation is checked against."""

from . import forms4 as F4
from . import polyf2 as P

HYP_COUNT = 264
TRIG_COUNT = 780
TOTAL_COUNT = 1044
ISOGENY_CLASSES = 620

A_TABLES = {
    1: {"hyp": [9, 32, 58, 66, 58, 32, 9, 0, 0],
        "trig": [31, 119, 202, 201, 117, 68, 30, 11, 1],
        "total": [40, 151, 260, 267, 175, 100, 39, 11, 1]},
    2: {"hyp": [33, 61, 79, 61, 27, 3, 0, 0],
        "trig": [78, 169, 211, 175, 103, 35, 8, 1],
        "total": [111, 230, 290, 236, 130, 38, 8, 1]},
    3: {"hyp": [55, 28, 98, 28, 55, 0, 0, 0, 0],
        "trig": [53, 135, 195, 180, 109, 62, 36, 8, 2],
        "total": [108, 163, 293, 208, 164, 62, 36, 8, 2]},
    4: {"hyp": [17, 20, 52, 39, 63, 38, 23, 12, 0, 0, 0],
        "trig": [19, 78, 135, 179, 152, 98, 68, 28, 16, 6, 1],
        "total": [36, 98, 187, 218, 215, 136, 91, 40, 16, 6, 1]},
}

L_TABLE = {
    "hyp": [403, 174, 40, 2, 1],
    "trig": [99, 341, 128, 31, 15, 6],
    "total": [0, 361, 165, 49, 25, 15, 4, 1],
}

# orbit representatives of nonzero polynomials of degree <= 5
Q_LIST = [P.from_str(s) for s in (
    "1", "x", "x^2", "x^2+x", "x^2+x+1",
    "x^3+x^2", "x^3+x^2+x", "x^3+x+1",
    "x^4+x", "x^4+x^2+1", "x^4+x^2+x", "x^4+x+1", "x^4+x^3+1",
    "x^5+x+1", "x^5+x^2+1",
)]
Q_TRIVIAL_STAB = [P.from_str(s) for s in (
    "x", "x^2", "x^3+x^2+x", "x^3+x+1", "x^4+x^2+x", "x^4+x^3+1", "x^5+x^2+1")]
Q_FULL_STAB = P.from_str("x^4+x")
Q_ORDER3_STAB = P.from_str("x^5+x+1")


def _trig(q: str, f: str) -> tuple[int, int]:
    return F4.form_from_str(q, 2), F4.form_from_str(f, 3)


# named trigonal curves, with the invariants stated alongside them
MINIMAL_CURVE = _trig("X^2 + X*Y + Y^2 + Z*T", "Y^3 + X*Z^2 + Z^3 + X*Y*T + T^3")
MAXIMAL_CURVE = _trig("X*Y + Z*T", "X*Y^2 + Y^3 + X^2*Z + Y^2*Z + X*Z^2 + X^2*T + Y^2*T + X*T^2")
A2_MAX_CURVE = _trig("X^2 + X*Y + Y^2 + Z*T", "X^2*Y + X^2*T + X*Y^2 + X*T^2 + Z^3")
A4_MAX_CURVE = _trig("X^2 + X*Y + Y^2 + Z*T", "X^2*Y + X*Y^2 + X*Y*Z + X*Y*T + X*T^2 + Y*Z^2")
A3_MAX_CURVES = [
    _trig("X*Y + T^2", "X^3 + X^2*Z + X*Y^2 + X*Y*Z + X*Y*T + X*Z*T + Y^3 + Y^2*T + Z^3"),
    _trig("X*Y + Z*T", "X^3 + X^2*Z + X^2*T + X*T^2 + Y^3 + Y^2*Z + Y^2*T + Y*T^2 + Z^3"),
]
A5_MAX_CURVE = _trig("X^2 + X*Y + Y^2 + Z*T",
                     "X^3 + X^2*Y + X*Y^2 + X^2*Z + Y^2*Z + Y*Z^2 + Z^3 + X^2*T + X*T^2")

# the seven curves sharing one L-polynomial
SHARED_L_HYP_Q = P.from_str("x^4+x^3+1")
SHARED_L_HYP_P = [P.from_str(s) for s in ("x^9+1", "x^9+x^8+x", "x^9+x^8+x^3", "x^9+x^3+x+1")]
SHARED_L_TRIG = [
    _trig("X*Y + Z*T", "X^3 + X*Y^2 + Y^3 + X^2*Z + X*Y*Z + X*Z^2 + X*T^2"),
    _trig("X*Y + Z*T", "X^3 + X^2*Y + X*Y^2 + Y^3 + X^2*Z + X*Y*Z + Y^2*Z + X*Z^2 + X^2*T + X*Y*T + X*T^2"),
    _trig("X*Y + T^2", "X^2*Y + Y^3 + X*Y*Z + Z^3 + X^2*T + X*Y*T + Y^2*T + X*Z*T"),
]
SHARED_L_COUNTS = (3, 9, 9, 21)
SHARED_L_A = (3, 3, 2, 3)

# y^2 + x y = x^9 + 1, isogenous to one trigonal curve on each quadric
HYP_WITH_FOUR_TRIG = (P.from_str("x"), P.from_str("x^9+1"))
