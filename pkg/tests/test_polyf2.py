from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from g4census import polyf2 as P
from g4census.gf2k import field_new
from g4census.polyf2 import IDENTITY2, Mat2

polys = st.integers(min_value=0, max_value=(1 << 20) - 1)
nonzero = st.integers(min_value=1, max_value=(1 << 12) - 1)

INV = Mat2(0, 1, 1, 0)     # x -> 1/x
SHIFT = Mat2(1, 1, 0, 1)   # x -> x + 1


def test_arith_examples():
    assert P.gcd(P.from_str("x^2+x"), P.from_str("x^2+1")) == P.from_str("x+1")
    assert P.derivative(P.from_str("x^9+x^8+x^3")) == P.from_str("x^8+x^2")
    assert P.mul(0b11, 0b11) == 0b101
    assert P.gcd(0b1011, 0) == 0b1011
    assert P.degree(0) == -1
    with pytest.raises(ZeroDivisionError):
        P.rem(5, 0)


@given(polys, nonzero)
def test_division_identity(a, b):
    quo, r = P.divmod_(a, b)
    assert P.mul(quo, b) ^ r == a
    assert P.degree(r) < P.degree(b)


@given(polys, polys)
def test_derivative_is_a_derivation(a, b):
    d = P.derivative
    assert d(P.mul(a, b)) == P.mul(d(a), b) ^ P.mul(a, d(b))


@given(st.integers(0, (1 << 15) - 1), st.integers(0, (1 << 15) - 1), st.integers(1, 255))
def test_gcd_divides_both(a, b, c):
    a, b = P.mul(a, c), P.mul(b, c)
    g = P.gcd(a, b)
    if a or b:
        assert P.rem(a, g) == 0 and P.rem(b, g) == 0
        assert P.rem(g, c) == 0 or a == 0 or b == 0


@given(st.integers(0, (1 << 30) - 1))
def test_square_is_frobenius(a):
    assert P.square(a) == P.mul(a, a)


def test_eval_examples():
    f1, f2 = field_new(1), field_new(2)
    assert P.eval_poly(0b111, f1, 1) == 1
    assert P.eval_poly(0b111, f2, 0b10) == 0
    assert P.eval_poly(0, f2, 3) == 0


def test_string_forms():
    assert P.to_str(P.from_str("x^4 + x^3 + 1")) == "x^4 + x^3 + 1"
    assert P.to_hex(P.from_str("x^4+x^3+1")) == "19"
    assert P.to_str(0) == "0"


def test_moebius_examples():
    q = P.from_str("x^4+x+1")
    assert P.moebius_act(5, IDENTITY2, q) == q
    assert P.moebius_act(5, INV, q) == P.from_str("x^5+x^4+x")
    assert P.moebius_act(5, SHIFT, P.from_str("x")) == P.from_str("x+1")
    with pytest.raises(ValueError):
        P.moebius_act(3, SHIFT, P.from_str("x^4"))


def test_pgl2():
    g = P.pgl2_elements()
    assert len(g) == 6 and IDENTITY2 in g
    assert all(A @ B in g for A in g for B in g)
    assert all(A @ A.inverse() == IDENTITY2 for A in g)


@pytest.mark.parametrize("n", range(0, 6))
def test_action_law_exhaustive(n):
    # literal formula: act(A) after act(B) is act(B @ A)
    g = P.pgl2_elements()
    for q in range(1, 1 << (n + 1)):
        for A, B in product(g, g):
            lhs = P.moebius_act(n, A, P.moebius_act(n, B, q))
            assert lhs == P.moebius_act(n, B @ A, q)


def test_multiplicativity():
    g = P.pgl2_elements()
    for A in g:
        for f in range(1, 1 << 4):        # deg <= 3
            for h in range(1, 1 << 3):    # deg <= 2
                assert P.moebius_act(5, A, P.mul(f, h)) == P.mul(
                    P.moebius_act(3, A, f), P.moebius_act(2, A, h))
        q = P.from_str("x^4+x^3+1")
        for r in range(1 << 6):
            lhs = P.moebius_act(10, A, P.square(r) ^ P.mul(q, r)) if r else 0
            rr = P.moebius_act(5, A, r) if r else 0
            assert lhs == P.square(rr) ^ P.mul(P.moebius_act(5, A, q), rr)


def test_stabilizer_examples():
    assert len(P.orbit_and_stabilizer(5, P.from_str("x^4+x"))[1]) == 6
    assert len(P.orbit_and_stabilizer(5, P.from_str("x^5+x+1"))[1]) == 3
    assert len(P.orbit_and_stabilizer(5, P.from_str("x"))[1]) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_orbit_stabilizer(n):
    for q in range(1, 1 << (n + 1)):
        orbit, stab = P.orbit_and_stabilizer(n, q)
        assert len(orbit) * len(stab) == 6


def test_classify_small():
    # n = 1: 1, x, x+1 are the three points of P^1, permuted transitively
    assert P.classify_deg_le(1) == [1]


def test_classify_deg5():
    reps = P.classify_deg_le(5)
    assert len(reps) == 15
    assert sum(len(P.orbit_and_stabilizer(5, q)[0]) for q in reps) == 63
    for q in reps:
        assert q == min(P.orbit_and_stabilizer(5, q)[0])
