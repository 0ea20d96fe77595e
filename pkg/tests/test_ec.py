import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from tracezero import INFINITY, Curve, KummerField, NotOnCurve, PrimeField, group_orders, torsion_exceptional_set
from tracezero.ec import count_points_bsgs, is_prime
from tracezero.oracles import census, count_base_points_naive
from tracezero.selftest import Survey, check_exceptional_points, check_trace_zero_n2
from tracezero.codec import TraceZeroParams

from conftest import Q79


def ext_curve(q, n, A, B, mu=None):
    return Curve(KummerField(PrimeField(q), n, mu), A, B)


C7_3 = ext_curve(7, 3, 1, 1, 3)
C31_5 = ext_curve(31, 5, 1, 2)
C_LARGE = ext_curve(Q79, 3, 1, 368, 3)


def test_group_law_examples_over_the_base_field():
    E = Curve(PrimeField(7), 1, 1)
    points = list(E.points())
    assert len(points) == 5 == E.count_points()
    for P in points:
        assert E.add(P, INFINITY) == P
        assert E.add(P, E.neg(P)) is INFINITY
        assert E.mul(5, P) is INFINITY


def test_off_curve_points_rejected():
    with pytest.raises(NotOnCurve):
        C7_3.point([1, 0, 0], [1, 0, 0])
    P = next(p for p in C7_3.points() if p is not INFINITY)
    with pytest.raises(NotOnCurve):
        C7_3.checked_add(P, ((1, 0, 0), (1, 0, 0)))


def test_frobenius_on_points():
    base_points = [P for P in C7_3.points() if P is not INFINITY and C7_3.field.is_base(P[0]) and C7_3.field.is_base(P[1])]
    assert base_points
    assert all(C7_3.frobenius(P, 1) == P for P in base_points)
    P = next(p for p in C7_3.points() if p is not INFINITY and not C7_3.field.is_base(p[0]))
    K = C7_3.field
    assert C7_3.frobenius(P, 1) == (K.frobenius(P[0], 1), K.frobenius(P[1], 1))
    assert C7_3.frobenius(P, 3 % 3) == P


def test_trace_matches_explicit_sum_everywhere():
    E = C7_3
    for P in E.points():
        explicit = INFINITY
        for Q in E.conjugates(P):
            explicit = E.add(explicit, Q)
        assert E.trace(P) == explicit
        assert E.in_trace_zero(P) == (explicit is INFINITY)
        if P is not INFINITY and E.field.is_base(P[0]) and E.field.is_base(P[1]):
            assert E.trace(P) == E.mul(3, P)
    assert E.trace(INFINITY) is INFINITY
    assert E.in_trace_zero(INFINITY)


def test_trace_zero_over_quadratic_extension():
    check = check_trace_zero_n2(7, 1, 1)
    assert check.passed, check.line()


def test_large_example_point_is_in_trace_zero(example_curves):
    c = example_curves[3]
    x = tuple(int(v) for v in c["point_x"])
    P = C_LARGE.lift_x(x)[0]
    assert C_LARGE.in_trace_zero(P)
    order_base = int(c["order_base"])
    _, _, tz = group_orders(Q79, 3, order_base)
    assert C_LARGE.mul(tz, P) is INFINITY


def test_frozen_base_orders_annihilate_random_points(example_curves):
    rng = random.Random(1)
    for n, c in example_curves.items():
        E = Curve(PrimeField(int(c["q"])), int(c["A"]), int(c["B"]))
        for _ in range(5):
            assert E.mul(int(c["order_base"]), E.random_point(rng)) is INFINITY


def test_trace_zero_order_of_large_example(example_curves):
    c = example_curves[3]
    _, _, tz = group_orders(Q79, 3, int(c["order_base"]))
    assert is_prime(tz)
    # |T_3| is barely above 2^158: log2 is 158.000..., bit_length is 159
    assert 158 <= math.log2(tz) < 158 + 1e-9
    c5 = example_curves[5]
    _, _, tz5 = group_orders(int(c5["q"]), 5, int(c5["order_base"]))
    assert is_prime(tz5) and tz5.bit_length() == 240


def test_group_orders_small():
    assert count_base_points_naive(7, 1, 1) == 5
    base, ext, tz = group_orders(7, 3, 5)
    assert ext == C7_3.count_points() == 380
    assert tz * base == ext and tz == 76


@pytest.mark.parametrize("q, n, A, B", [(7, 3, 1, 1), (13, 3, 1, 1), (31, 3, 1, 2), (11, 5, 1, 3), (19, 3, 2, 3)])
def test_exact_sequence_against_census(q, n, A, B):
    c = census(q, n, A, B)
    assert c.order_trace_zero * c.order_base == c.order_ext
    assert group_orders(q, n, c.order_base) == (c.order_base, c.order_ext, c.order_trace_zero)


def test_bsgs_matches_naive_count():
    for q, A, B in [(10007, 3, 7), (100003, 1, 1), (65537, 5, 2)]:
        assert count_points_bsgs(Curve(PrimeField(q), A, B)) == count_base_points_naive(q, A, B)


def _exceptional_by_enumeration(q, A, B):
    E = ext_curve(q, 5, A, B)
    K = E.field
    base = Curve(PrimeField(q), A, B)
    three = [P for P in base.points() if P is not INFINITY and base.mul(3, P) is INFINITY]
    c = census(q, 5, A, B)
    two = [INFINITY]
    for x, y in c.points():
        if not any(y):
            two.extend((xc, K.zero) for xc in K.conjugates(x))
    out = set()
    for Q in three:
        Qe = (K.embed(Q[0]), K.embed(Q[1]))
        for R in two:
            S = E.add(Qe, R)
            if S is not INFINITY:
                out.add(S[0])
    return sorted(out)


@pytest.mark.parametrize("A, B", [(1, 3), (1, 1), (2, 5), (3, 3), (7, 1)])
def test_exceptional_set_matches_enumeration(A, B):
    expected = _exceptional_by_enumeration(11, A, B)
    got = torsion_exceptional_set(ext_curve(11, 5, A, B))
    assert got == expected
    assert len(got) <= 16


def test_exceptional_set_empty_without_three_torsion():
    base = Curve(PrimeField(11), 1, 2)
    assert not any(P is not INFINITY and base.mul(3, P) is INFINITY for P in base.points())
    assert torsion_exceptional_set(ext_curve(11, 5, 1, 2)) == []


@pytest.mark.parametrize("q, n, A, B", [(7, 3, 1, 1), (11, 5, 1, 3), (31, 5, 1, 2)])
def test_exceptional_points_solve_the_symmetrized_equation(q, n, A, B):
    survey = Survey(TraceZeroParams(q, n, A, B), census=None)
    check = check_exceptional_points(survey)
    assert check.passed, check.line()


curves = st.sampled_from([C7_3, C31_5, C_LARGE, ext_curve(1031, 5, 2, 7)])


@settings(max_examples=60)
@given(curves, st.integers(0, 2**32))
def test_group_axioms_and_frobenius(E, seed):
    rng = random.Random(seed)
    P, Q, R = (E.random_point(rng) for _ in range(3))
    assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
    assert E.add(P, Q) == E.add(Q, P)
    assert E.frobenius(E.add(P, Q), 1) == E.add(E.frobenius(P, 1), E.frobenius(Q, 1))
    assert E.trace(E.frobenius(P, 1)) == E.trace(P)
    k = rng.randrange(1, 1000)
    assert E.mul(k, E.add(P, Q)) == E.add(E.mul(k, P), E.mul(k, Q))


@settings(max_examples=60)
@given(curves, st.integers(0, 2**32))
def test_trace_zero_is_a_frobenius_stable_subgroup(E, seed):
    rng = random.Random(seed)
    P, Q = E.random_trace_zero_point(rng), E.random_trace_zero_point(rng)
    assert E.in_trace_zero(P) and E.in_trace_zero(E.frobenius(P, 1))
    assert E.in_trace_zero(E.add(P, Q)) and E.in_trace_zero(E.neg(P))
    R = E.random_point(rng)
    assert E.in_trace_zero(R) == E.in_trace_zero(E.frobenius(R, 1))


def test_text_roundtrip():
    rng = random.Random(0)
    for E in (C7_3, C_LARGE):
        P = E.random_point(rng)
        assert E.from_text(E.to_text(P)) == P
        assert E.from_text("inf") is INFINITY
