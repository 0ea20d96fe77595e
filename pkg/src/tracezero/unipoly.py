"""Dense univariate polynomials over F_q or F_{q^n}, and root finding.

Coefficients are stored in ascending order as native field elements (ints
for :class:`PrimeField`, coordinate tuples for :class:`KummerField`), with
trailing zeros stripped so that the zero polynomial is ``[]``.
"""

from __future__ import annotations

import hashlib
import math
import random

from .errors import InternalError, InvalidInput


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        self.field = field
        coeffs = list(coeffs)
        zero = field.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.coeffs = coeffs

    @classmethod
    def x(cls, field) -> UniPoly:
        return cls(field, [field.zero, field.one])

    @classmethod
    def from_ints(cls, field, values) -> UniPoly:
        return cls(field, [field.from_int(v) for v in values])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __repr__(self):
        return f"UniPoly({self.coeffs!r})"

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __call__(self, value):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, value), c)
        return acc

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc()))

    def scale(self, c) -> UniPoly:
        F = self.field
        return UniPoly(F, [F.mul(a, c) for a in self.coeffs])

    def __neg__(self):
        F = self.field
        return UniPoly(F, [F.neg(a) for a in self.coeffs])

    def __add__(self, other: UniPoly) -> UniPoly:
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return UniPoly(F, out)

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: UniPoly) -> UniPoly:
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(F)
        if type(F.zero) is int:
            p = F.p
            acc = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        acc[i + j] += ai * bj
            return UniPoly(F, [c % p for c in acc])
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == F.zero:
                continue
            for j, bj in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return UniPoly(F, out)

    def __divmod__(self, other: UniPoly):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree()
        inv_lc = F.inv(other.lc())
        if type(F.zero) is int:
            return self._divmod_prime(other, inv_lc)
        quot = [F.zero] * max(len(rem) - db, 0)
        bcoef = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == F.zero:
                continue
            t = F.mul(c, inv_lc)
            quot[k - db] = t
            for j in range(db + 1):
                rem[k - db + j] = F.sub(rem[k - db + j], F.mul(t, bcoef[j]))
        return UniPoly(F, quot), UniPoly(F, rem[:db])

    def _divmod_prime(self, other: UniPoly, inv_lc: int):
        # integer fast path: reduce lazily, only the leading coefficient each step
        F, p = self.field, self.field.p
        rem = list(self.coeffs)
        db = other.degree()
        bcoef = other.coeffs[:db]
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] % p
            if c:
                t = c * inv_lc % p
                quot[k - db] = t
                base = k - db
                for j, bj in enumerate(bcoef):
                    rem[base + j] -= t * bj
        return UniPoly(F, quot), UniPoly(F, [c % p for c in rem[:db]])

    def __mod__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[0]

    def derivative(self) -> UniPoly:
        F = self.field
        return UniPoly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, e: int, modulus: UniPoly) -> UniPoly:
        """``self**e mod modulus`` by left-to-right square and multiply."""
        base = self % modulus
        if type(self.field.zero) is int and modulus.degree() > 0:
            p = self.field.p
            m = modulus.monic().coeffs
            return UniPoly(self.field, _powmod_prime(base.coeffs, e, m, p))
        result = UniPoly(self.field, [self.field.one]) % modulus
        for bit in bin(e)[2:]:
            result = (result * result) % modulus
            if bit == "1":
                result = (result * base) % modulus
        return result

    def compose_mod(self, inner: UniPoly, modulus: UniPoly) -> UniPoly:
        """``self(inner) mod modulus`` by Horner's rule."""
        acc = UniPoly(self.field)
        for c in reversed(self.coeffs):
            acc = (acc * inner + UniPoly(self.field, [c])) % modulus
        return acc


def _mulmod_prime(a: list, b: list, m: list, p: int) -> list:
    """``a * b`` reduced modulo the monic ``m``, on raw coefficient lists."""
    if not a or not b:
        return []
    acc = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                acc[i + j] += ai * bj
    d = len(m) - 1
    low = m[:d]
    for k in range(len(acc) - 1, d - 1, -1):
        c = acc[k] % p
        if c:
            base = k - d
            for j, mj in enumerate(low):
                acc[base + j] -= c * mj
    out = [c % p for c in acc[:d]]
    while out and not out[-1]:
        out.pop()
    return out


def _powmod_prime(base: list, e: int, m: list, p: int) -> list:
    # m has degree >= 1, so the constant 1 is already reduced
    result = [1]
    for bit in bin(e)[2:]:
        result = _mulmod_prime(result, result, m, p)
        if bit == "1":
            result = _mulmod_prime(result, base, m, p)
    return result


def _gcd_prime(a: list, b: list, p: int) -> list:
    """Monic gcd on raw coefficient lists."""
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        low = [c * inv % p for c in b[:db]]
        r = a
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k] % p
            if c:
                base = k - db
                for j, bj in enumerate(low):
                    r[base + j] -= c * bj
        r = [c % p for c in r[:db]]
        while r and not r[-1]:
            r.pop()
        a, b = b, r
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd(0, 0) is undefined")
    if type(a.field.zero) is int:
        return UniPoly(a.field, _gcd_prime(a.coeffs, b.coeffs, a.field.p))
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _resultant_std(f: UniPoly, g: UniPoly):
    F = f.field
    m, n = f.degree(), g.degree()
    if n == 0:
        return F.pow(g.lc(), m)
    r = f % g
    if r.is_zero():
        return F.zero
    out = F.mul(F.pow(g.lc(), m - r.degree()), _resultant_std(g, r))
    return F.neg(out) if (m * n) % 2 else out


def resultant(a: UniPoly, b: UniPoly):
    """Resultant with the convention ``Res(x - a, x - b) = b - a``.

    Equivalently ``lc(a)^deg(b) lc(b)^deg(a) * prod (beta_j - alpha_i)`` over
    the roots ``alpha_i`` of ``a`` and ``beta_j`` of ``b``.
    """
    if a.is_zero() or b.is_zero():
        raise InvalidInput("resultant of the zero polynomial")
    return _resultant_std(b, a)


def _rng_for(f: UniPoly) -> random.Random:
    digest = hashlib.sha256(repr((f.field.order, f.coeffs)).encode()).digest()
    return random.Random(int.from_bytes(digest[:16], "big"))


def _split_linear(h: UniPoly, rng: random.Random | None) -> list:
    """Roots of a monic squarefree ``h`` that splits into linear factors."""
    F = h.field
    d = h.degree()
    if d <= 0:
        return []
    if d == 1:
        return [F.neg(h.coeffs[0])]
    rng = rng or _rng_for(h)
    half = (F.order - 1) // 2
    one = UniPoly(F, [F.one])
    while True:
        delta = F.random(rng)
        g = gcd(h, UniPoly(F, [delta, F.one]).powmod(half, h) - one)
        if 0 < g.degree() < d:
            return _split_linear(g, rng) + _split_linear(h // g, rng)


def roots_in_field(f: UniPoly) -> list:
    """All roots of ``f`` in its coefficient field, sorted.

    ``gcd(f, x^Q - x)`` isolates the product of the distinct linear factors
    (``Q`` the field size), which is then split by equal-degree
    factorization with a PRNG seeded from the coefficients.
    """
    if f.is_zero():
        raise InvalidInput("every element is a root of the zero polynomial")
    F = f.field
    f = f.monic()
    if f.degree() <= 0:
        return []
    x = UniPoly.x(F)
    h = gcd(f, x.powmod(F.order, f) - x)
    return sorted(_split_linear(h, _rng_for(f)))


# -- roots of F_q-polynomials inside a Kummer extension -------------------------


def _coeff_vector(poly: UniPoly, n: int) -> list[int]:
    return poly.coeffs + [0] * (n - len(poly.coeffs))


def frobenius_matrix(xq: UniPoly, modulus: UniPoly) -> list[list[int]]:
    """Columns ``x^(qj) mod modulus`` for ``j < deg(modulus)``: the q-power map on F_q[x]/(modulus)."""
    d = modulus.degree()
    col = UniPoly(modulus.field, [1])
    cols = []
    for _ in range(d):
        cols.append(_coeff_vector(col, d))
        col = (col * xq) % modulus
    return cols


def _apply(cols: list[list[int]], v: list[int], p: int) -> list[int]:
    out = [0] * len(v)
    for vj, col in zip(v, cols):
        if vj:
            for i, c in enumerate(col):
                out[i] += vj * c
    return [c % p for c in out]


def _frobenius_powers(xq: UniPoly, modulus: UniPoly, count: int) -> list[UniPoly]:
    """``x^(q^i) mod modulus`` for ``i = 0..count`` (F_q coefficients only)."""
    F, d = modulus.field, modulus.degree()
    cols = frobenius_matrix(xq, modulus)
    v = _coeff_vector(UniPoly.x(F) % modulus, d)
    out = [UniPoly(F, v)]
    for _ in range(count):
        v = _apply(cols, v, F.p)
        out.append(UniPoly(F, v))
    return out


def _split_equal_degree(h: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    """Irreducible factors of ``h``, a squarefree product of degree-``d`` irreducibles over F_q."""
    F = h.field
    if h.degree() <= d:
        return [h] if h.degree() == d else []
    q = F.order
    xq = UniPoly.x(F).powmod(q, h)
    frob = _frobenius_powers(xq, h, d - 1)
    one = UniPoly(F, [F.one])
    while True:
        r = UniPoly(F, [F.random(rng) for _ in range(h.degree())])
        if r.degree() < 1:
            continue
        # r^((q^d - 1)/2) = prod_i (r^((q - 1)/2))^(q^i)
        a = r.powmod((q - 1) // 2, h)
        acc = one
        for i in range(d):
            acc = (acc * a.compose_mod(frob[i], h)) % h
        g = gcd(h, acc - one)
        if 0 < g.degree() < h.degree():
            return _split_equal_degree(g, d, rng) + _split_equal_degree(h // g, d, rng)


def _embed_irreducible(p_poly: UniPoly, ext, cols=None) -> tuple:
    """One root in ``ext`` of a monic irreducible ``p_poly`` of degree ``ext.n``.

    Let ``v_i`` be the class of ``x^(q^i)`` in ``A = F_q[x]/(p_poly)``.  Under
    any isomorphism ``A -> ext`` sending ``x`` to a root with coordinates
    ``x_k``, the resolvent ``R_k = sum_i lam^(-ik) v_i`` maps to
    ``n x_k zeta^k``.  One nonzero resolvent pins down ``zeta`` inside ``A``
    (up to the choice of an n-th root, i.e. of the conjugate), after which
    every ``x_k`` is a ratio of two elements of ``A``.  ``cols`` is the
    Frobenius matrix of ``p_poly`` if the caller already has it.
    """
    F = p_poly.field
    q, n, mu = F.p, ext.n, ext.mu
    if cols is None:
        cols = frobenius_matrix(UniPoly.x(F).powmod(q, p_poly), p_poly)
    powers = [_coeff_vector(UniPoly.x(F) % p_poly, n)]
    for _ in range(n - 1):
        powers.append(_apply(cols, powers[-1], q))
    inv_n = pow(n, -1, q)
    lam_inv = pow(ext.lam, -1, q)
    resolvents = []
    for k in range(n):
        w = [pow(lam_inv, i * k % n, q) * inv_n % q for i in range(n)]
        resolvents.append([sum(wi * v[c] for wi, v in zip(w, powers)) % q for c in range(n)])
    # resolvents[k] = x_k zeta^k in A
    k0 = next(k for k in range(1, n) if any(resolvents[k]))
    m = p_poly.monic().coeffs
    w = resolvents[k0]
    c = _powmod_prime(w, n, m, q)
    if len(c) != 1:
        raise InternalError("resolvent power is not in F_q")
    x_k0 = F.prime_root(c[0] * pow(mu, -k0, q) % q, n)
    if x_k0 is None:
        raise InternalError("resolvent power has no n-th root")
    # zeta = (zeta^k0)^e / mu^t where k0 e = 1 + n t
    e = pow(k0, -1, n)
    t = (k0 * e - 1) // n
    zk0 = [v * pow(x_k0, -1, q) % q for v in w]
    zeta = [v * pow(mu, -t, q) % q for v in _powmod_prime(zk0, e, m, q)]
    root = [resolvents[0][0]]
    zpow = [1]
    for k in range(1, n):
        zpow = _mulmod_prime(zpow, zeta, m, q)
        i = next(i for i, v in enumerate(zpow) if v)
        root.append(resolvents[k][i] * pow(zpow[i], -1, q) % q)
    root = tuple(root)
    acc = ext.zero
    for coef in reversed(p_poly.coeffs):
        acc = ext.add(ext.mul(acc, root), ext.embed(coef))
    if acc != ext.zero:
        raise InternalError("embedded root does not satisfy the polynomial")
    return root


def kummer_roots(f: UniPoly, ext) -> list:
    """All roots in the Kummer field ``ext`` of a polynomial ``f`` over F_q, sorted.

    Roots in F_q come from ``gcd(f, x^q - x)``; roots outside F_q come from
    irreducible factors of degree ``n``, which are isolated by
    ``gcd(f, x^(q^n) - x)`` and mapped into ``ext`` by
    :func:`_embed_irreducible`.
    """
    if f.is_zero():
        raise InvalidInput("every element is a root of the zero polynomial")
    F = f.field
    f = f.monic()
    if f.degree() <= 0:
        return []
    x = UniPoly.x(F)
    xq = x.powmod(F.p, f)
    linear = gcd(f, xq - x)
    roots = {ext.embed(r) for r in _split_linear(linear, None)}
    d = f.degree()
    if d >= ext.n:
        cols = frobenius_matrix(xq, f)
        v = _coeff_vector(x % f, d)
        for _ in range(ext.n):
            v = _apply(cols, v, F.p)
        h = gcd(f, UniPoly(F, v) - x) // linear
        if h.degree() == d == ext.n:
            # f itself is irreducible of degree n: reuse its Frobenius matrix
            roots.update(ext.conjugates(_embed_irreducible(f, ext, cols)))
        else:
            for factor in _split_equal_degree(h, ext.n, _rng_for(h)):
                roots.update(ext.conjugates(_embed_irreducible(factor, ext)))
    return sorted(roots)


def characteristic_root(f: UniPoly, ext):
    """A root in ``ext`` of ``f`` if ``f`` is the characteristic polynomial of one, else ``None``.

    For prime ``n = ext.n`` the characteristic polynomial over F_q of an
    element of F_{q^n} is either ``(x - a)^n`` with ``a`` in F_q or an
    irreducible polynomial of degree ``n``.  This is much cheaper than
    :func:`kummer_roots` when only one member of the Frobenius orbit is needed.
    """
    F, n = f.field, ext.n
    f = f.monic()
    if f.degree() != n:
        raise InvalidInput(f"expected a polynomial of degree {n}")
    q = F.p
    a = -f.coeffs[n - 1] * pow(n, -1, q) % q
    if f.coeffs == [math.comb(n, k) * pow(-a, n - k, q) % q for k in range(n + 1)]:
        return ext.embed(a)
    x = UniPoly.x(F)
    xq = x.powmod(q, f)
    if gcd(f, xq - x).degree() > 0:
        return None
    cols = frobenius_matrix(xq, f)
    v = _coeff_vector(xq, n)
    for _ in range(n - 1):
        v = _apply(cols, v, q)
    if v != _coeff_vector(x, n):
        return None
    return _embed_irreducible(f, ext, cols)
