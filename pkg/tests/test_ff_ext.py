import pytest
from hypothesis import given, strategies as st

from tracezero import DivisionByZero, InvalidParameters, KummerField, PrimeField
from tracezero.ff_ext import select_mu

from conftest import Q60, Q79

# (q, n, mu) with n | q - 1; mu None means the default choice
FIELDS = [(7, 3, 3), (7, 3, None), (11, 5, 2), (13, 3, None), (31, 5, None), (7, 2, None), (Q79, 3, 3), (Q60, 5, 3)]


@st.composite
def ext_elements(draw, count=2):
    q, n, mu = draw(st.sampled_from(FIELDS))
    K = KummerField(PrimeField(q), n, mu)
    elems = [tuple(draw(st.integers(0, q - 1)) for _ in range(n)) for _ in range(count)]
    return (K, *elems)


def z(K, k, c=1):
    """``c * zeta^k`` for ``k < n``."""
    out = [0] * K.n
    out[k] = c
    return tuple(out)


def test_kummer_examples():
    K = KummerField(PrimeField(7), 3, 3)
    assert K.mul(z(K, 1), z(K, 2)) == (3, 0, 0)
    assert K.inv(z(K, 1)) == (0, 0, 5)
    assert K.b == 2 and K.lam == 2
    assert K.frobenius(z(K, 1), 1) == (0, 2, 0)
    assert sorted(K.conjugates(z(K, 1))) == sorted([(0, 1, 0), (0, 2, 0), (0, 4, 0)])
    K5 = KummerField(PrimeField(11), 5, 2)
    assert K5.mul(z(K5, 3), z(K5, 4)) == (0, 0, 2, 0, 0)


def test_default_mu_is_smallest_non_power():
    assert select_mu(PrimeField(7), 3) == 2
    assert select_mu(PrimeField(11), 5) == 2
    for q, n in [(13, 3), (31, 3), (31, 5), (61, 5)]:
        powers = {pow(v, n, q) for v in range(1, q)}
        assert select_mu(PrimeField(q), n) == min(v for v in range(2, q) if v not in powers)
    assert select_mu(PrimeField(Q79), 3) == 3
    assert KummerField(PrimeField(7), 3).mu == 2


@pytest.mark.parametrize("q, n, mu", [(7, 5, None), (11, 3, None), (7, 3, 6), (7, 3, 1), (7, 3, 0), (7, 4, None)])
def test_rejects_invalid_parameters(q, n, mu):
    with pytest.raises(InvalidParameters):
        KummerField(PrimeField(q), n, mu)


def test_inverse_of_zero():
    K = KummerField(PrimeField(7), 3)
    with pytest.raises(DivisionByZero):
        K.inv(K.zero)


@given(ext_elements(count=3))
def test_ring_axioms(args):
    K, a, b, c = args
    assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    assert K.mul(a, b) == K.mul(b, a)
    assert K.add(a, K.neg(a)) == K.zero
    if a != K.zero:
        assert K.mul(a, K.inv(a)) == K.one


@given(ext_elements())
def test_frobenius_is_an_automorphism_of_order_n(args):
    K, a, b = args
    assert K.frobenius(K.mul(a, b), 1) == K.mul(K.frobenius(a, 1), K.frobenius(b, 1))
    assert K.frobenius(K.add(a, b), 1) == K.add(K.frobenius(a, 1), K.frobenius(b, 1))
    assert K.frobenius(K.frobenius(a, 1), K.n - 1) == a
    assert K.frobenius(a, 0) == a
    c = a[0]
    assert K.frobenius(K.embed(c), 1) == K.embed(c)


@pytest.mark.parametrize("q, n, mu", [f for f in FIELDS if f[0] < 100])
def test_frobenius_is_q_power(q, n, mu):
    K = KummerField(PrimeField(q), n, mu)
    import random

    rng = random.Random(q * n)
    for _ in range(50):
        a = K.random(rng)
        assert K.frobenius(a, 1) == K.pow(a, q)


@given(ext_elements(count=1))
def test_symmetric_functions_of_conjugates_are_rational(args):
    K, a = args
    e = [K.one]
    for c in K.conjugates(a):
        e = [e[0]] + [K.add(e[k], K.mul(e[k - 1], c)) for k in range(1, len(e))] + [K.mul(e[-1], c)]
    assert all(K.is_base(v) for v in e)
    assert e[-1] == K.embed(K.norm(a))
    assert e[1] == K.embed(K.trace(a))


@given(ext_elements(count=1))
def test_square_roots(args):
    K, a = args
    sq = K.mul(a, a)
    roots = K.sqrt(sq)
    assert a in roots
    assert all(K.mul(r, r) == sq for r in roots)
    assert list(roots) == sorted(roots)


@given(ext_elements(count=1))
def test_serialization_roundtrip(args):
    K, a = args
    data = K.to_bytes(a)
    assert len(data) == K.n * K.base.byte_length
    assert data[: K.base.byte_length] == K.base.to_bytes(a[0])
    assert K.from_bytes(data) == a


def test_operator_wrapper():
    K = KummerField(PrimeField(7), 3, 3)
    zeta = K.zeta
    assert (zeta * zeta * zeta).coords == (3, 0, 0)
    assert (zeta.inv() * zeta).coords == K.one
    assert zeta.frobenius().coords == (0, 2, 0)
    assert zeta.norm().value == 3
