"""Brute-force reference computations for small fields.

Everything here is exhaustive and vectorized with numpy, and deliberately
avoids the compression code: trace zero membership is decided by adding up
Frobenius conjugates, symmetric functions come from expanding
``prod (T - x^(q^i))``, and polynomials are tabulated on all of ``F_q^m``.
The test suite and the ``selftest`` command compare the library against
these results.

Only odd prime ``n`` is supported by the vectorized census; ``q`` must be
small enough that the products fit comfortably in 64-bit integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalError, InvalidParameters
from .ff_ext import KummerField
from .ff_prime import PrimeField
from .multipoly import MultiPoly

MAX_ORACLE_Q = 1 << 12
CHUNK = 1 << 18


class KummerArrays:
    """Arithmetic on arrays of F_{q^n} elements stored as ``(n, N)`` coordinate arrays."""

    def __init__(self, q: int, n: int, mu: int):
        if q > MAX_ORACLE_Q:
            raise InvalidParameters(f"oracles are limited to q <= {MAX_ORACLE_Q}")
        self.q, self.n, self.mu = q, n, mu
        # 32-bit lanes are about twice as fast; use them when a product sum cannot overflow
        self.dtype = np.int32 if (1 + mu) * n * q * q < 2**31 else np.int64
        lam = pow(mu, (q - 1) // n, q)
        self.twist = np.array([[pow(lam, i * j % n, q) for j in range(n)] for i in range(n)], dtype=self.dtype)
        self.inv_table = np.array([0] + [pow(a, -1, q) for a in range(1, q)], dtype=self.dtype)
        chi = np.full(q, -1, dtype=self.dtype)
        root = np.full(q, -1, dtype=self.dtype)
        for r in range(q):
            chi[r * r % q] = 1
            root[r * r % q] = r
        chi[0] = 0
        self.chi_table, self.sqrt_table = chi, root

    def const(self, c: int, size: int) -> np.ndarray:
        out = np.zeros((self.n, size), dtype=self.dtype)
        out[0] = c % self.q
        return out

    def mul(self, a, b):
        n, q = self.n, self.q
        c = [None] * (2 * n - 1)
        for i in range(n):
            for j in range(n):
                t = a[i] * b[j]
                if c[i + j] is None:
                    c[i + j] = t
                else:
                    c[i + j] += t
        out = np.empty_like(a)
        for k in range(n - 1):
            np.remainder(c[k] + self.mu * c[k + n], q, out=out[k])
        np.remainder(c[n - 1], q, out=out[n - 1])
        return out

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def scale(self, a, k):
        return a * k % self.q

    def frob(self, a, i: int = 1):
        return a * self.twist[i % self.n][:, None] % self.q

    def _conjugate_product(self, a):
        c = self.frob(a, 1)
        for i in range(2, self.n):
            c = self.mul(c, self.frob(a, i))
        return c

    def norm(self, a):
        return self.mul(a, self._conjugate_product(a))[0]

    def inv(self, a):
        """Inverse, with 0 mapped to 0."""
        c = self._conjugate_product(a)
        nrm = self.mul(a, c)[0]
        return c * self.inv_table[nrm] % self.q

    def power(self, a, e: int):
        result = self.const(1, a.shape[1])
        for bit in bin(e)[2:]:
            result = self.mul(result, result)
            if bit == "1":
                result = self.mul(result, a)
        return result

    def sqrt(self, a):
        """One square root of each entry, which must be a square (odd ``n``)."""
        w = self.power(a, (self.q + 1) // 2)
        t = self.frob(w, 1)
        for j in range(1, (self.n - 1) // 2):
            t = self.mul(t, self.frob(w, 2 * j + 1))
        base_root = self.sqrt_table[self.norm(a)]
        r = self.mul(a, t) * self.inv_table[base_root] % self.q
        if not np.array_equal(self.mul(r, r), a):
            raise InternalError("vectorized square root failed")
        return r

    def elementary(self, x):
        """``e_1..e_n`` of the conjugates of each entry, as an ``(n, N)`` array over F_q."""
        e = [None, x]
        for i in range(1, self.n):
            c = self.frob(x, i)
            e.append(self.mul(e[-1], c))
            for k in range(len(e) - 2, 1, -1):
                e[k] = self.add(e[k], self.mul(e[k - 1], c))
            e[1] = self.add(e[1], c)
        out = np.stack([v[0] for v in e[1:]])
        if any(v[1:].any() for v in e[1:]):
            raise InternalError("symmetric functions of conjugates left F_q")
        return out

    # -- curve points as (x, y, at_infinity) ------------------------------------

    def point_add(self, P, Q, A: int):
        x1, y1, o1 = P
        x2, y2, o2 = Q
        same = (x1 == x2).all(axis=0)
        dbl = same & (y1 == y2).all(axis=0) & y1.any(axis=0)
        opposite = same & ~dbl
        num = np.where(dbl, self.add(self.scale(self.mul(x1, x1), 3), self.const(A, x1.shape[1])), self.sub(y2, y1))
        den = np.where(dbl, self.scale(y1, 2), self.sub(x2, x1))
        lam = self.mul(num, self.inv(den))
        x3 = self.sub(self.sub(self.mul(lam, lam), x1), x2)
        y3 = self.sub(self.mul(lam, self.sub(x1, x3)), y1)
        o3 = opposite.copy()
        x3 = np.where(o1, x2, np.where(o2, x1, x3))
        y3 = np.where(o1, y2, np.where(o2, y1, y3))
        o3 = np.where(o1, o2, np.where(o2, o1, o3))
        return x3, y3, o3

    def point_frob(self, P, i: int):
        x, y, o = P
        return self.frob(x, i), self.frob(y, i), o


def orbit_representatives(q: int, n: int, mu: int) -> tuple[np.ndarray, np.ndarray]:
    """One element of every Frobenius orbit of F_{q^n}, with the orbit sizes.

    Frobenius multiplies coordinate ``k`` by ``lam^k``, so an orbit is pinned
    down by normalizing its first nonzero coordinate ``x_k`` (``k >= 1``) to a
    fixed transversal of ``F_q^* / <lam>``.
    """
    lam = pow(mu, (q - 1) // n, q)
    group = {pow(lam, i, q) for i in range(n)}
    transversal, seen = [], set()
    for a in range(1, q):
        if a not in seen:
            transversal.append(a)
            seen.update(a * g % q for g in group)
    blocks = [np.vstack([np.arange(q, dtype=np.int64), np.zeros((n - 1, q), dtype=np.int64)])]
    sizes = [np.ones(q, dtype=np.int64)]
    for k in range(1, n):
        free = n - k  # x_0 and x_{k+1..n-1}
        grid = np.indices((q,) * free, dtype=np.int64).reshape(free, -1)
        for a in transversal:
            block = np.zeros((n, grid.shape[1]), dtype=np.int64)
            block[0] = grid[0]
            block[k] = a
            block[k + 1:] = grid[1:]
            blocks.append(block)
            sizes.append(np.full(grid.shape[1], n, dtype=np.int64))
    return np.hstack(blocks), np.concatenate(sizes)


@dataclass
class Census:
    """Exhaustive description of T_n over a small field.

    ``xs``, ``ys`` and ``sym`` hold, column by column, one point of every
    Frobenius orbit of T_n minus the identity, with the symmetric functions of
    its x-coordinate.  ``orbit_sizes`` counts x-coordinates per column.
    """

    q: int
    n: int
    A: int
    B: int
    mu: int
    order_base: int
    order_ext: int
    order_trace_zero: int
    xs: np.ndarray
    ys: np.ndarray
    sym: np.ndarray
    orbit_sizes: np.ndarray
    zero_liftable: np.ndarray | None = None
    zero_liftable_sizes: np.ndarray | None = None

    def points(self):
        """Native points ``(x, y)`` for each orbit representative."""
        for j in range(self.xs.shape[1]):
            yield tuple(int(v) for v in self.xs[:, j]), tuple(int(v) for v in self.ys[:, j])


def count_base_points_naive(q: int, A: int, B: int) -> int:
    """|E(F_q)| by counting square roots of ``x^3 + Ax + B``."""
    total = 1
    squares = {}
    for y in range(q):
        squares[y * y % q] = squares.get(y * y % q, 0) + 1
    for x in range(q):
        total += squares.get((x * x * x + A * x + B) % q, 0)
    return total


def census(q: int, n: int, A: int, B: int, mu: int | None = None, zero_table: np.ndarray | None = None) -> Census:
    """Enumerate T_n for odd prime ``n`` by summing conjugates of every liftable x.

    With ``zero_table`` (a boolean array over ``F_q^n`` marking the zeros of
    a polynomial in the symmetric functions) the orbit representatives of
    liftable x whose symmetric functions are zeros are also collected.
    """
    if n % 2 == 0:
        raise InvalidParameters("the vectorized census needs odd n")
    base = PrimeField(q)
    mu = KummerField(base, n, mu).mu
    K = KummerArrays(q, n, mu)
    reps, sizes = orbit_representatives(q, n, mu)
    A, B = A % q, B % q
    order_ext = 1
    tz_order = 1
    keep_x, keep_y, keep_s, keep_size, zero_x, zero_size = [], [], [], [], [], []
    for start in range(0, reps.shape[1], CHUNK):
        x = reps[:, start:start + CHUNK].astype(K.dtype)
        size = sizes[start:start + CHUNK]
        m = x.shape[1]
        rhs = K.add(K.mul(K.add(K.mul(x, x), K.const(A, m)), x), K.const(B, m))
        chi = K.chi_table[K.norm(rhs)]
        order_ext += int((size * (1 + chi)).sum())
        lift = chi >= 0
        x, rhs, size = x[:, lift], rhs[:, lift], size[lift]
        m = x.shape[1]
        y = K.sqrt(rhs)
        P = (x, y, np.zeros(m, dtype=bool))
        partial = P
        for i in range(1, n - 1):
            partial = K.point_add(partial, K.point_frob(P, i), A)
        last = K.point_frob(P, n - 1)
        in_tz = (~partial[2]) & (partial[0] == last[0]).all(axis=0) & (partial[1] == (-last[1]) % q).all(axis=0)
        two_torsion = ~y.any(axis=0)
        tz_order += int((size[in_tz] * np.where(two_torsion[in_tz], 1, 2)).sum())
        s = K.elementary(x)
        keep_x.append(x[:, in_tz])
        keep_y.append(y[:, in_tz])
        keep_s.append(s[:, in_tz])
        keep_size.append(size[in_tz])
        if zero_table is not None:
            is_zero = zero_table[tuple(s)]
            zero_x.append(x[:, is_zero])
            zero_size.append(size[is_zero])
    order_base = count_base_points_naive(q, A, B)
    out = Census(
        q, n, A, B, mu, order_base, order_ext, tz_order,
        np.hstack(keep_x), np.hstack(keep_y), np.hstack(keep_s), np.concatenate(keep_size),
    )
    if zero_table is not None:
        out.zero_liftable = np.hstack(zero_x)
        out.zero_liftable_sizes = np.concatenate(zero_size)
    return out


def polynomial_table(poly: MultiPoly, q: int) -> np.ndarray:
    """Values of ``poly`` at every point of ``F_q^m``, as an array of shape ``(q,) * m``."""
    if poly.field.p != q:
        raise InvalidParameters("polynomial and table use different fields")
    if q > MAX_ORACLE_Q:
        raise InvalidParameters(f"oracles are limited to q <= {MAX_ORACLE_Q}")
    m = poly.nvars
    degrees = poly.degrees()
    dense = np.zeros(tuple(d + 1 for d in degrees), dtype=np.int64)
    for exps, c in poly.terms.items():
        dense[exps] = c
    values = np.arange(q, dtype=np.int64)
    table = dense
    for i in range(m):
        powers = np.ones((q, degrees[i] + 1), dtype=np.int64)
        for e in range(1, degrees[i] + 1):
            powers[:, e] = powers[:, e - 1] * values % q
        # contract the axis of variable i, then move the new axis back into place
        table = np.moveaxis(np.tensordot(powers, table, axes=([1], [i])), 0, i) % q
    return table


def vanishing_by_lifts(q: int, A: int, B: int, m: int) -> np.ndarray:
    """For every ``(x_1..x_m)`` in ``F_q^m``: do some lifts to E(F_{q^2}) add up to O?

    Every x in F_q lifts over F_{q^2}.  Sign choices are explored by growing
    the set of partial sums one coordinate at a time.
    """
    from .ec import INFINITY, Curve

    ext = KummerField(PrimeField(q), 2)
    E = Curve(ext, A, B)
    lifts = {x: E.lift_x(ext.embed(x)) for x in range(q)}
    out = np.zeros((q,) * m, dtype=bool)
    sums: dict[tuple, set] = {(): {INFINITY}}
    for length in range(1, m):
        nxt = {}
        for prefix, partial in sums.items():
            for x in range(q):
                nxt[prefix + (x,)] = {E.add(S, P) for S in partial for P in lifts[x]}
        sums = nxt
    for prefix, partial in sums.items():
        for x in range(q):
            # the last point closes the sum iff it is minus a partial sum
            target = {E.neg(P) for P in lifts[x]}
            out[prefix + (x,)] = bool(partial & target)
    return out
