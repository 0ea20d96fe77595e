import itertools
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tracezero import (
    InvalidCurve,
    MultiPoly,
    NotSymmetric,
    PrimeField,
    restricted_symmetric_functions,
    semaev,
    symmetrize,
    symmetrized_semaev,
    weil_restrict_f3,
)
from tracezero.multipoly import elementary_substitute, weil_restrict
from tracezero.oracles import census, polynomial_table

from conftest import Q60, Q79, reference_poly

F7 = PrimeField(7)
F101 = PrimeField(101)


def test_f3_vanishing_leading_coefficient_on_the_diagonal():
    f3 = semaev(3, 1, 1, F7)
    z1, z2, z3 = MultiPoly.variables(F7, 3)
    on_diagonal = f3.compose([z1, z1, z3])
    assert on_diagonal.degree(2) < 2


@pytest.mark.parametrize("m", [3, 4, 5])
def test_semaev_symmetry_and_degrees(m):
    f = semaev(m, 2, 6, F101)
    assert f.degrees() == (2 ** (m - 2),) * m
    assert f.total_degree() == (m - 1) * 2 ** (m - 2)
    perms = itertools.permutations(range(m)) if m < 5 else [(1, 0, 2, 3, 4), (4, 0, 1, 2, 3)]
    for perm in perms:
        assert f.permute(perm) == f


def test_singular_curve_rejected():
    # 4A^3 + 27B^2 = 0 for A = -3, B = 2
    with pytest.raises(InvalidCurve):
        semaev(3, -3, 2, F7)
    with pytest.raises(InvalidCurve):
        symmetrized_semaev(3, -3, 2, F7)


def test_symmetrize_examples(reference_equations):
    s1 = symmetrize(sum(MultiPoly.variables(F101, 3), MultiPoly.constant(F101, 3, 0)))
    assert s1 == MultiPoly.variable(F101, 3, 0)
    for p, A, B in [(101, 2, 6), (Q79, 1, 368)]:
        F = PrimeField(p)
        expected = reference_poly(reference_equations["g3"]["terms"], 3, F, A=A, B=B)
        assert symmetrize(semaev(3, A, B, F)) == expected


def test_symmetrize_rejects_non_symmetric_input():
    z1, z2, _ = MultiPoly.variables(F7, 3)
    with pytest.raises(NotSymmetric):
        symmetrize(z1 * z1 + z2)


@pytest.mark.parametrize("m", [3, 4])
def test_symmetrize_is_exact(m):
    f = semaev(m, 3, 8, F101)
    g = symmetrize(f)
    assert elementary_substitute(g) == f
    rng = random.Random(m)
    for _ in range(1000):
        z = [rng.randrange(101) for _ in range(m)]
        e = [1]
        for v in z:
            e = [e[0]] + [(e[k] + v * e[k - 1]) % 101 for k in range(1, len(e))] + [e[-1] * v % 101]
        assert g.evaluate(e[1:]) == f.evaluate(z)


def test_g3_is_linear_in_the_last_coordinate():
    assert symmetrized_semaev(3, 1, 368, PrimeField(Q79)).degree(2) == 1


def test_g5_degree_profile_and_construction_routes():
    F = PrimeField(11)
    blocks = symmetrized_semaev(5, 1, 3, F)
    assert blocks.degrees() == (6, 8, 6, 8, 6)
    assert blocks.total_degree() == 8
    assert symmetrized_semaev(5, 1, 3, F, method="direct") == blocks
    g60 = symmetrized_semaev(5, 1, 135, PrimeField(Q60))
    assert g60.degrees() == (6, 8, 6, 8, 6) and g60.total_degree() == 8


def test_restricted_f3_reference(reference_equations):
    terms = reference_equations["f3_restricted"]["terms"]
    for p, A, B, mu in [(7, 1, 1, 3), (Q79, 1, 368, 3), (13, 4, 9, 2)]:
        F = PrimeField(p)
        f = weil_restrict_f3(A, B, mu, F)
        assert f == reference_poly(terms, 3, F, mu=mu, A=A, B=B)
        assert f.coefficient((4, 0, 0)) == -3 % p
        assert f.coefficient((0, 2, 2)) == 9 * mu * mu % p
        assert f.coefficient((0, 0, 0)) == A * A % p


def test_restricted_f3_vanishes_exactly_on_trace_zero_x():
    q, A, B, mu = 7, 1, 1, 3
    f = weil_restrict_f3(A, B, mu, PrimeField(q))
    c = census(q, 3, A, B, mu)
    on_t3 = {tuple(int(v) for v in c.xs[:, j]) for j in range(c.xs.shape[1])}
    assert all(f.evaluate(x) == 0 for x in on_t3)
    # away from T_3 the polynomial is mostly nonzero; the zeros there are non-liftable x
    table = polynomial_table(f, q)
    assert 0 < np.count_nonzero(table == 0) < table.size // 2


def test_restricted_symmetric_functions_reference(reference_equations):
    for n, key in [(3, "s_in_x_n3"), (5, "s_in_x_n5")]:
        for p, mu in [(Q79 if n == 3 else Q60, 3), (31, 3)]:
            F = PrimeField(p)
            got = restricted_symmetric_functions(n, mu, F)
            expected = [reference_poly(t, n, F, mu=mu) for t in reference_equations[key]["polys"]]
            assert got == expected
            for i, e in enumerate(got, start=1):
                assert e.is_homogeneous() and e.total_degree() == i


@pytest.mark.parametrize("q, n", [(7, 3), (13, 3), (11, 5), (31, 5)])
def test_restricted_symmetric_functions_match_conjugate_products(q, n):
    from tracezero import KummerField

    K = KummerField(PrimeField(q), n)
    es = restricted_symmetric_functions(n, K.mu, K.base)
    rng = random.Random(q)
    for _ in range(50):
        x = K.random(rng)
        e = [K.one]
        for c in K.conjugates(x):
            e = [e[0]] + [K.add(e[k], K.mul(e[k - 1], c)) for k in range(1, len(e))] + [K.mul(e[-1], c)]
        assert [poly.evaluate(x) for poly in es] == [v[0] for v in e[1:]]


def test_generic_weil_restriction_of_f3():
    F = PrimeField(31)
    assert weil_restrict(semaev(3, 1, 2, F), 3, 3) == weil_restrict_f3(1, 2, 3, F)


@given(st.dictionaries(st.tuples(*[st.integers(0, 4)] * 3), st.integers(0, 4), max_size=6))
def test_polynomials_of_low_degree_vanishing_everywhere_are_zero(terms):
    F = PrimeField(5)
    f = MultiPoly(F, 3, terms)
    assert f.reduce_exponents(5) == f
    assert (not polynomial_table(f, 5).any()) == f.is_zero()


def test_reduce_exponents_kills_field_equation():
    x = MultiPoly.variables(F7, 2)
    assert (x[0] ** 7 - x[0]).reduce_exponents(7).is_zero()
    assert (x[1] ** 8).reduce_exponents(7) == x[1] ** 2


def test_text_dump_is_sorted_and_decimal():
    text = symmetrize(semaev(3, 1, 1, F7)).to_text(["s1", "s2", "s3"])
    assert text == "3*s1*s3 + 1*s2^2 + 3*s1 + 5*s2 + 1"
