"""Sparse multivariate polynomials over F_q and the symbolic constructions built on them.

Covers the summation polynomials ``f_3, f_4, f_5`` (via resultants), the
rewriting of symmetric polynomials in elementary symmetric functions, and
Weil restriction of polynomials in ``x`` to polynomials in the coordinates
``x_0, ..., x_{n-1}`` of ``x`` over the Kummer basis.

Exponent vectors are packed into one integer, ``BITS`` bits per variable,
so that multiplying monomials is a single integer addition.
"""

from __future__ import annotations

import functools
import heapq
import itertools

from .errors import InternalError, InvalidCurve, InvalidInput, InvalidParameters, NotSymmetric
from .ff_prime import PrimeField

BITS = 16
_MASK = (1 << BITS) - 1
MAX_EXPONENT = _MASK


def _pack(exps) -> int:
    key = 0
    for i, e in enumerate(exps):
        if not 0 <= e <= MAX_EXPONENT:
            raise InvalidInput(f"exponent {e} out of range")
        key |= e << (BITS * i)
    return key


def _unpack(key: int, nvars: int) -> tuple:
    return tuple((key >> (BITS * i)) & _MASK for i in range(nvars))


class MultiPoly:
    """A polynomial in ``nvars`` variables with coefficients in a prime field."""

    __slots__ = ("field", "nvars", "_t")

    def __init__(self, field: PrimeField, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        t = {}
        p = field.p
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise InvalidInput(f"exponent vector {exps} does not have {nvars} entries")
            c = int(c) % p
            if c:
                k = _pack(exps)
                t[k] = (t.get(k, 0) + c) % p
        self._t = {k: c for k, c in t.items() if c}

    @classmethod
    def _raw(cls, field, nvars, packed: dict) -> MultiPoly:
        out = cls.__new__(cls)
        out.field, out.nvars, out._t = field, nvars, packed
        return out

    @classmethod
    def constant(cls, field, nvars, c) -> MultiPoly:
        c = int(c) % field.p
        return cls._raw(field, nvars, {0: c} if c else {})

    @classmethod
    def variable(cls, field, nvars, i) -> MultiPoly:
        return cls._raw(field, nvars, {1 << (BITS * i): 1})

    @classmethod
    def variables(cls, field, nvars) -> list[MultiPoly]:
        return [cls.variable(field, nvars, i) for i in range(nvars)]

    # -- inspection -------------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Mapping from exponent tuples to nonzero integer coefficients."""
        return {_unpack(k, self.nvars): c for k, c in self._t.items()}

    def items(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def coefficient(self, exps) -> int:
        return self._t.get(_pack(exps), 0)

    def __len__(self):
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def degree(self, var: int) -> int:
        shift = BITS * var
        return max(((k >> shift) & _MASK for k in self._t), default=-1)

    def degrees(self) -> tuple:
        return tuple(self.degree(i) for i in range(self.nvars))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.field, self.nvars, other)
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.field == other.field
            and self._t == other._t
        )

    __hash__ = None

    def __repr__(self):
        return f"MultiPoly({self.to_text()})"

    def to_text(self, names=None) -> str:
        """Signed sum of monomials, highest total degree first, decimal coefficients."""
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        if not self._t:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exps) if e
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: MultiPoly):
        if self.nvars != other.nvars or self.field != other.field:
            raise InvalidInput("polynomials live in different rings")

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.field, self.nvars, int(other))

    def __add__(self, other):
        other = self._coerce(other)
        p = self.field.p
        out = dict(self._t)
        for k, c in other._t.items():
            v = (out.get(k, 0) + c) % p
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return MultiPoly._raw(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return MultiPoly._raw(self.field, self.nvars, {k: p - c for k, c in self._t.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c: int) -> MultiPoly:
        p = self.field.p
        c %= p
        if not c:
            return MultiPoly._raw(self.field, self.nvars, {})
        return MultiPoly._raw(self.field, self.nvars, {k: v * c % p for k, v in self._t.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(int(other))
        self._check(other)
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        acc: dict[int, int] = {}
        get = acc.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                acc[k] = get(k, 0) + ca * cb
        p = self.field.p
        out = {}
        for k, c in acc.items():
            c %= p
            if c:
                out[k] = c
        return MultiPoly._raw(self.field, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> MultiPoly:
        if e < 0:
            raise InvalidInput("negative power of a polynomial")
        result = MultiPoly.constant(self.field, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- variable manipulation ---------------------------------------------

    def rename(self, mapping, nvars: int) -> MultiPoly:
        """Move variable ``i`` to position ``mapping[i]`` in a ring of ``nvars`` variables."""
        out = {}
        p = self.field.p
        for exps, c in self.terms.items():
            new = [0] * nvars
            for i, e in enumerate(exps):
                if e:
                    new[mapping[i]] += e
            k = _pack(new)
            out[k] = (out.get(k, 0) + c) % p
        return MultiPoly._raw(self.field, nvars, {k: c for k, c in out.items() if c})

    def permute(self, perm) -> MultiPoly:
        return self.rename(perm, self.nvars)

    def drop(self, var: int) -> MultiPoly:
        """Remove a variable that does not occur."""
        if self.degree(var) > 0:
            raise InvalidInput(f"variable {var} still occurs")
        mapping = [i if i < var else i - 1 for i in range(self.nvars)]
        mapping[var] = 0
        return self.rename(mapping, self.nvars - 1)

    def coeffs_in(self, var: int) -> list[MultiPoly]:
        """Coefficients with respect to ``var``; entry ``d`` multiplies ``var^d``."""
        shift = BITS * var
        buckets: dict[int, dict] = {}
        for k, c in self._t.items():
            d = (k >> shift) & _MASK
            buckets.setdefault(d, {})[k - (d << shift)] = c
        top = max(buckets, default=-1)
        return [MultiPoly._raw(self.field, self.nvars, buckets.get(d, {})) for d in range(top + 1)]

    # -- evaluation -------------------------------------------------------------

    def evaluate(self, values, ring=None):
        """Evaluate at ``values`` (native elements of ``ring``; default the coefficient field).

        ``ring`` needs ``zero``, ``one``, ``add``, ``mul`` and ``from_int``.
        """
        if len(values) != self.nvars:
            raise InvalidInput(f"expected {self.nvars} values")
        degs = self.degrees()
        if ring is None or isinstance(ring, PrimeField):
            p = self.field.p
            powers = []
            for v, d in zip(values, degs):
                row = [1]
                for _ in range(max(d, 0)):
                    row.append(row[-1] * v % p)
                powers.append(row)
            total = 0
            for exps, c in self.terms.items():
                m = c
                for i, e in enumerate(exps):
                    if e:
                        m = m * powers[i][e] % p
                total += m
            return total % p
        powers = []
        for v, d in zip(values, degs):
            row = [ring.one]
            for _ in range(max(d, 0)):
                row.append(ring.mul(row[-1], v))
            powers.append(row)
        total = ring.zero
        for exps, c in self.terms.items():
            m = ring.from_int(c)
            for i, e in enumerate(exps):
                if e:
                    m = ring.mul(m, powers[i][e])
            total = ring.add(total, m)
        return total

    def compose(self, polys) -> MultiPoly:
        """Substitute the polynomial ``polys[i]`` for variable ``i``."""
        if not polys:
            raise InvalidInput("need one polynomial per variable")
        return self.evaluate(list(polys), _PolyRing(polys[0].field, polys[0].nvars))

    def reduce_exponents(self, q: int) -> MultiPoly:
        """Reduce modulo ``x_i^q - x_i`` for every variable.

        The result has degree below ``q`` in every variable and defines the
        same function on F_q^n.
        """
        out = {}
        p = self.field.p
        for exps, c in self.terms.items():
            new = tuple(e if e < q else (e - 1) % (q - 1) + 1 for e in exps)
            k = _pack(new)
            out[k] = (out.get(k, 0) + c) % p
        return MultiPoly._raw(self.field, self.nvars, {k: c for k, c in out.items() if c})


# -- resultants ------------------------------------------------------------------


class _PolyRing:
    def __init__(self, field: PrimeField, nvars: int):
        self.field, self.nvars = field, nvars
        self.zero = MultiPoly.constant(field, nvars, 0)
        self.one = MultiPoly.constant(field, nvars, 1)

    def from_int(self, c: int) -> MultiPoly:
        return MultiPoly.constant(self.field, self.nvars, c)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b


def resultant(f: MultiPoly, g: MultiPoly, var: int) -> MultiPoly:
    """Resultant of ``f`` and ``g`` with respect to ``var``.

    Uses the same sign convention as :func:`tracezero.unipoly.resultant`
    (``Res(x - a, x - b) = b - a``).  The Sylvester determinant is expanded
    along the block of rows holding the coefficients of ``f``: each choice of
    columns for that block pairs a small minor of ``f``-coefficients with the
    complementary minor of ``g``-coefficients, and sub-minors are memoized.
    The result still has ``nvars`` variables; ``var`` no longer occurs.
    """
    f._check(g)
    a, b = f.coeffs_in(var), g.coeffs_in(var)
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        raise InvalidInput("resultant of the zero polynomial")
    size = m + n
    rows = []
    for i in range(n):
        rows.append({i + k: a[m - k] for k in range(m + 1) if not a[m - k].is_zero()})
    for j in range(m):
        rows.append({j + k: b[n - k] for k in range(n + 1) if not b[n - k].is_zero()})
    field, nv = f.field, f.nvars
    one = MultiPoly.constant(field, nv, 1)
    memo: dict = {}

    def det(rs: tuple, cs: tuple) -> MultiPoly:
        if not rs:
            return one
        key = (rs, cs)
        if key in memo:
            return memo[key]
        total = MultiPoly._raw(field, nv, {})
        row = rows[rs[0]]
        for pos, c in enumerate(cs):
            entry = row.get(c)
            if entry is None:
                continue
            minor = det(rs[1:], cs[:pos] + cs[pos + 1:])
            if minor.is_zero():
                continue
            term = entry * minor
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    frows, grows = tuple(range(n)), tuple(range(n, size))
    all_cols = range(size)
    result = MultiPoly._raw(field, nv, {})
    for chosen in itertools.combinations(all_cols, n):
        top = det(frows, chosen)
        if top.is_zero():
            continue
        rest = tuple(c for c in all_cols if c not in chosen)
        bottom = det(grows, rest)
        if bottom.is_zero():
            continue
        term = top * bottom
        # sign of the Laplace expansion along rows 0..n-1
        result = result - term if (sum(chosen) + sum(frows)) % 2 else result + term
    return -result if (m * n) % 2 else result


# -- summation polynomials ---------------------------------------------------


def check_curve(field: PrimeField, A: int, B: int):
    if (4 * pow(A, 3, field.p) + 27 * B * B) % field.p == 0:
        raise InvalidCurve("4A^3 + 27B^2 = 0: the curve is singular")


def _f3(field: PrimeField, A: int, B: int) -> MultiPoly:
    z1, z2, z3 = MultiPoly.variables(field, 3)
    return (
        (z1 - z2) ** 2 * z3**2
        - 2 * ((z1 + z2) * (z1 * z2 + A) + 2 * B) * z3
        + (z1 * z2 - A) ** 2
        - 4 * B * (z1 + z2)
    )


@functools.lru_cache(maxsize=32)
def _semaev_cached(m: int, p: int, A: int, B: int) -> MultiPoly:
    field = PrimeField(p)
    f3 = _f3(field, A, B)
    if m == 3:
        return f3
    if m == 4:
        left = f3.rename([0, 1, 4], 5)
        right = f3.rename([2, 3, 4], 5)
        return resultant(left, right, 4).drop(4)
    f4 = _semaev_cached(4, p, A, B)
    left = f4.rename([0, 1, 2, 5], 6)
    right = f3.rename([3, 4, 5], 6)
    return resultant(left, right, 5).drop(5)


def semaev(m: int, A: int, B: int, field: PrimeField) -> MultiPoly:
    """The ``m``-th summation polynomial of ``y^2 = x^3 + Ax + B`` (``m`` in 3, 4, 5).

    ``f_4 = Res_w(f_3(z1, z2, w), f_3(z3, z4, w))`` and
    ``f_5 = Res_z(f_4(z1, z2, z3, z), f_3(z4, z5, z))``.
    """
    if m not in (3, 4, 5):
        raise InvalidInput("summation polynomials are provided for m = 3, 4, 5")
    A, B = int(A) % field.p, int(B) % field.p
    check_curve(field, A, B)
    return _semaev_cached(m, field.p, A, B)


# -- symmetric polynomials ---------------------------------------------------------


def is_symmetric(f: MultiPoly) -> bool:
    n = f.nvars
    if n < 2:
        return True
    swap = [1, 0] + list(range(2, n))
    cycle = [(i + 1) % n for i in range(n)]
    return f.permute(swap) == f and f.permute(cycle) == f


def _elementary_block(p: int, r: int, k: int) -> dict:
    """``s_k = sum_{i+j=k} X_i Y_j`` as a dict over exponent tuples ``(X_1..X_p, Y_1..Y_r)``."""
    out = {}
    for i in range(max(0, k - r), min(k, p) + 1):
        j = k - i
        e = [0] * (p + r)
        if i:
            e[i - 1] = 1
        if j:
            e[p + j - 1] = 1
        out[tuple(e)] = 1
    return out


def merge_blocks(poly: MultiPoly, p: int, r: int) -> MultiPoly:
    """Combine two blocks of elementary symmetric functions into one.

    Variables ``0..p-1`` hold ``X_1..X_p``, the elementary symmetric
    functions of one set of ``p`` unknowns, and ``p..p+r-1`` hold
    ``Y_1..Y_r`` for a disjoint set of ``r`` unknowns; later variables are
    carried along untouched.  If ``poly`` is symmetric in the union of the
    two sets, the result expresses it in ``s_1..s_{p+r}`` (in positions
    ``0..p+r-1``), where ``s_k = sum_{i+j=k} X_i Y_j``.

    Leading terms are peeled off in lex order with ``X_p > ... > X_1 >
    Y_r > ... > Y_1``: the leading monomial of ``s^alpha`` is
    ``X_1^a1 ... X_{p-1}^a(p-1) X_p^(a_p + a_(p+1) + ...) Y_1^a(p+1) ... Y_r^a(p+r)``,
    which can be inverted exponent by exponent.
    """
    nb = p + r
    if nb > poly.nvars:
        raise InvalidInput("blocks exceed the number of variables")
    q = poly.field.p
    groups: dict[tuple, dict] = {}
    for exps, c in poly.terms.items():
        groups.setdefault(exps[nb:], {})[exps[:nb]] = c

    s_polys = [None] + [_elementary_block(p, r, k) for k in range(1, nb + 1)]
    cache: dict[tuple, dict] = {(0,) * nb: {(0,) * nb: 1}}

    def mul(u: dict, v: dict) -> dict:
        out: dict = {}
        for eu, cu in u.items():
            for ev, cv in v.items():
                e = tuple(a + b for a, b in zip(eu, ev))
                out[e] = (out.get(e, 0) + cu * cv) % q
        return out

    def expand(alpha: tuple) -> dict:
        if alpha in cache:
            return cache[alpha]
        k = next(i for i, a in enumerate(alpha) if a)
        lower = alpha[:k] + (alpha[k] - 1,) + alpha[k + 1:]
        res = mul(expand(lower), s_polys[k + 1])
        cache[alpha] = res
        return res

    def order_key(e: tuple) -> tuple:
        # negate for the min-heap; X_p first ... X_1, then Y_r ... Y_1
        return tuple(-x for x in e[p - 1::-1] + e[:p - 1:-1])

    out: dict[tuple, int] = {}
    for other, group in groups.items():
        heap = [(order_key(e), e) for e in group]
        heapq.heapify(heap)
        while heap:
            _, lead = heapq.heappop(heap)
            c = group.get(lead)
            if not c:
                continue
            ex, ey = lead[:p], lead[p:]
            top = ex[p - 1] - sum(ey)
            if top < 0:
                raise NotSymmetric("polynomial is not symmetric in the merged variables")
            alpha = ex[:p - 1] + (top,) + ey
            for e, v in expand(alpha).items():
                if e in group:
                    nv = (group[e] - c * v) % q
                    if nv:
                        group[e] = nv
                    else:
                        del group[e]
                else:
                    group[e] = -c * v % q
                    heapq.heappush(heap, (order_key(e), e))
            key = alpha + other
            out[key] = (out.get(key, 0) + c) % q
    return MultiPoly(poly.field, poly.nvars, out)


def symmetrize(f: MultiPoly) -> MultiPoly:
    """Express a symmetric ``f(z_1..z_n)`` as ``g(e_1(z), ..., e_n(z))`` and return ``g``.

    Variables are folded in one at a time with :func:`merge_blocks`.
    """
    if not is_symmetric(f):
        raise NotSymmetric("polynomial is not invariant under permutations of its variables")
    g = f
    for k in range(1, f.nvars):
        g = merge_blocks(g, k, 1)
    return g


def elementary_substitute(g: MultiPoly) -> MultiPoly:
    """``g(e_1(z), ..., e_n(z))`` as a polynomial in ``z`` (inverse of :func:`symmetrize`)."""
    n = g.nvars
    z = MultiPoly.variables(g.field, n)
    e = [MultiPoly.constant(g.field, n, 1)]
    for zi in z:
        e = [e[0]] + [e[k] + zi * e[k - 1] for k in range(1, len(e))] + [zi * e[-1]]
    powers = [[MultiPoly.constant(g.field, n, 1)] for _ in range(n)]
    degs = g.degrees()
    for i in range(n):
        for _ in range(max(degs[i], 0)):
            powers[i].append(powers[i][-1] * e[i + 1])
    total = MultiPoly.constant(g.field, n, 0)
    for exps, c in g.terms.items():
        m = MultiPoly.constant(g.field, n, c)
        for i, x in enumerate(exps):
            if x:
                m = m * powers[i][x]
        total = total + m
    return total


@functools.lru_cache(maxsize=32)
def _g5_cached(p: int, A: int, B: int) -> MultiPoly:
    f4 = _semaev_cached(4, p, A, B)
    f3 = _semaev_cached(3, p, A, B)
    # f_4(z1, z2, z3, z) in (c1, c2, c3, z); f_3(z4, z5, z) in (d1, d2, z)
    h = merge_blocks(merge_blocks(f4, 1, 1), 2, 1)
    k = merge_blocks(f3, 1, 1)
    left = h.rename([0, 1, 2, 5], 6)
    right = k.rename([3, 4, 5], 6)
    r = resultant(left, right, 5).drop(5)
    return merge_blocks(r, 3, 2)


def clear_caches() -> None:
    """Forget every cached summation and symmetrized polynomial (for cold-start timing)."""
    _semaev_cached.cache_clear()
    _g5_cached.cache_clear()


def symmetrized_semaev(n: int, A: int, B: int, field: PrimeField, method: str = "blocks") -> MultiPoly:
    """``g_n`` with ``f_n(z) = g_n(e_1(z), ..., e_n(z))`` for ``n`` in 3, 4, 5.

    For ``n = 5`` the default ``method="blocks"`` never forms ``f_5``: it
    symmetrizes ``f_4`` in its first three variables and ``f_3`` in its
    first two, takes the resultant of those, and merges the two blocks.
    ``method="direct"`` symmetrizes ``f_5`` itself.
    """
    A, B = int(A) % field.p, int(B) % field.p
    check_curve(field, A, B)
    if n == 5 and method == "blocks":
        return _g5_cached(field.p, A, B)
    if method not in ("blocks", "direct"):
        raise InvalidInput(f"unknown method {method!r}")
    return symmetrize(semaev(n, A, B, field))


# -- Weil restriction -----------------------------------------------------------


class WeilRing:
    """``F_q[x_0..x_{n-1}][zeta]/(zeta^n - mu)``; elements are lists of n MultiPolys."""

    def __init__(self, field: PrimeField, n: int, mu: int):
        if (field.p - 1) % n or field.is_nth_power(mu, n):
            raise InvalidParameters(f"need n | q - 1 and mu not an n-th power (q={field.p}, n={n}, mu={mu})")
        self.field, self.n, self.mu = field, n, mu % field.p
        self.zero = [MultiPoly.constant(field, n, 0) for _ in range(n)]
        self.one = [MultiPoly.constant(field, n, 1)] + self.zero[1:]
        lam = pow(self.mu, (field.p - 1) // n, field.p)
        x = MultiPoly.variables(field, n)
        # conjugates[i] = x^(q^i) = sum_j lam^(ij) x_j zeta^j
        self.conjugates = [[x[j].scale(pow(lam, i * j, field.p)) for j in range(n)] for i in range(n)]

    def from_int(self, c: int):
        return [MultiPoly.constant(self.field, self.n, c)] + self.zero[1:]

    def add(self, a, b):
        return [u + v for u, v in zip(a, b)]

    def mul(self, a, b):
        n = self.n
        out = list(self.zero)
        for i, u in enumerate(a):
            if u.is_zero():
                continue
            for j, v in enumerate(b):
                if v.is_zero():
                    continue
                prod = u * v
                if i + j < n:
                    out[i + j] = out[i + j] + prod
                else:
                    out[i + j - n] = out[i + j - n] + prod.scale(self.mu)
        return out

    def reduce(self, a):
        return [c.reduce_exponents(self.field.p) for c in a]


def _rational_part(ring: WeilRing, element) -> MultiPoly:
    element = ring.reduce(element)
    if any(not c.is_zero() for c in element[1:]):
        raise InternalError("Weil restriction left nonzero zeta-components")
    return element[0]


def weil_restrict(f: MultiPoly, n: int, mu: int) -> MultiPoly:
    """``f(x, x^q, ..., x^(q^(n-1)))`` for symmetric ``f`` in ``n`` variables, as a polynomial in ``x_0..x_{n-1}``.

    The substitution is expanded in the Kummer basis and exponents are
    reduced modulo ``x_i^q - x_i``; symmetry makes the value lie in F_q, so
    every component except the constant one must cancel.
    """
    if f.nvars != n:
        raise InvalidInput("number of variables must equal the extension degree")
    ring = WeilRing(f.field, n, mu)
    return _rational_part(ring, f.evaluate(ring.conjugates, ring))


def weil_restrict_f3(A: int, B: int, mu: int, field: PrimeField) -> MultiPoly:
    return weil_restrict(semaev(3, A, B, field), 3, mu)


def restricted_symmetric_functions(n: int, mu: int, field: PrimeField) -> list[MultiPoly]:
    """``e_i(x, x^q, ..., x^(q^(n-1)))`` in the coordinates ``x_0..x_{n-1}``, for ``i = 1..n``."""
    ring = WeilRing(field, n, mu)
    coeffs = [ring.one]
    for c in ring.conjugates:
        shifted = [ring.mul(c, e) for e in coeffs]
        coeffs = [coeffs[0]] + [ring.add(coeffs[k], shifted[k - 1]) for k in range(1, len(coeffs))] + [shifted[-1]]
    return [_rational_part(ring, e) for e in coeffs[1:]]
