"""Short Weierstrass curves ``y^2 = x^3 + Ax + B`` over F_q or a Kummer extension.

Points are ``None`` (the point at infinity) or a pair ``(x, y)`` of native
field elements.  The curve is always defined over F_q; when it is built on
a :class:`KummerField` the Frobenius, the trace map and the trace zero
subgroup become available.
"""

from __future__ import annotations

import math
import random

import gmpy2

from .errors import InternalError, InvalidInput, NotOnCurve
from .ff_ext import KummerField
from .multipoly import check_curve
from .unipoly import UniPoly, kummer_roots, roots_in_field

INFINITY = None


class Curve:
    """The group ``E(K)`` for ``K`` either F_q or F_{q^n}."""

    def __init__(self, field, A: int, B: int):
        base = field.base if isinstance(field, KummerField) else field
        self.base = base
        self.A, self.B = int(A) % base.p, int(B) % base.p
        check_curve(base, self.A, self.B)
        self.field = field
        self.q = base.p
        self.n = field.n if isinstance(field, KummerField) else 1
        self._a = field.from_int(self.A)
        self._b = field.from_int(self.B)
        self._three = field.from_int(3)

    def __repr__(self):
        return f"Curve(A={self.A}, B={self.B}, field={self.field!r})"

    def __eq__(self, other):
        return isinstance(other, Curve) and (self.A, self.B, self.field) == (other.A, other.B, other.field)

    def __hash__(self):
        return hash((self.A, self.B, self.field))

    def over_base(self) -> Curve:
        return Curve(self.base, self.A, self.B)

    # -- membership -------------------------------------------------------------

    def rhs(self, x):
        F = self.field
        return F.add(F.mul(F.add(F.mul(x, x), self._a), x), self._b)

    def is_on_curve(self, P) -> bool:
        if P is INFINITY:
            return True
        x, y = P
        F = self.field
        return F.mul(y, y) == self.rhs(x)

    def check(self, P):
        if not self.is_on_curve(P):
            raise NotOnCurve(f"{self.to_text(P)} is not on {self!r}")
        return P

    def point(self, x, y):
        """Build a point from integers or coordinate sequences, checking the equation."""
        F = self.field
        conv = (lambda v: F(v).coords) if isinstance(F, KummerField) else (lambda v: int(v) % F.p)
        return self.check((conv(x), conv(y)))

    def lift_x(self, x) -> list:
        """Points with x-coordinate ``x``, sorted (empty if ``x^3 + Ax + B`` is a non-square)."""
        return sorted((x, y) for y in self.field.sqrt(self.rhs(x)))

    # -- group law --------------------------------------------------------------

    def neg(self, P):
        if P is INFINITY:
            return P
        return (P[0], self.field.neg(P[1]))

    def add(self, P, Q):
        if P is INFINITY:
            return Q
        if Q is INFINITY:
            return P
        F = self.field
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 != y2 or y1 == F.zero:
                return INFINITY
            num = F.add(F.mul(self._three, F.mul(x1, x1)), self._a)
            lam = F.div(num, F.add(y1, y1))
        else:
            lam = F.div(F.sub(y2, y1), F.sub(x2, x1))
        x3 = F.sub(F.sub(F.mul(lam, lam), x1), x2)
        y3 = F.sub(F.mul(lam, F.sub(x1, x3)), y1)
        return (x3, y3)

    def double(self, P):
        return self.add(P, P)

    def sub(self, P, Q):
        return self.add(P, self.neg(Q))

    def mul(self, k: int, P):
        """``k * P`` by double-and-add; negative ``k`` allowed."""
        if k < 0:
            k, P = -k, self.neg(P)
        result = INFINITY
        for bit in bin(k)[2:]:
            result = self.add(result, result)
            if bit == "1":
                result = self.add(result, P)
        return result

    def checked_add(self, P, Q):
        return self.add(self.check(P), self.check(Q))

    def checked_mul(self, k: int, P):
        return self.mul(k, self.check(P))

    # -- Frobenius and trace ---------------------------------------------------

    def frobenius(self, P, i: int = 1):
        if P is INFINITY or self.n == 1:
            return P
        F = self.field
        return (F.frobenius(P[0], i), F.frobenius(P[1], i))

    def conjugates(self, P) -> list:
        return [self.frobenius(P, i) for i in range(self.n)]

    def trace(self, P):
        """``P + phi(P) + ... + phi^(n-1)(P)``, a point of E(F_q)."""
        total = self._partial_trace(P)
        total = self.add(total, self.frobenius(P, self.n - 1))
        if total is not INFINITY and self.n > 1:
            if not (self.field.is_base(total[0]) and self.field.is_base(total[1])):
                raise InternalError("trace is not F_q-rational")
        return total

    def _partial_trace(self, P):
        # P + phi(P) + ... + phi^(n-2)(P); for n = 5 via S_2 = P + phi(P), S_4 = S_2 + phi^2(S_2)
        if self.n == 5:
            s2 = self.add(P, self.frobenius(P, 1))
            return self.add(s2, self.frobenius(s2, 2))
        total = INFINITY
        for i in range(self.n - 1):
            total = self.add(total, self.frobenius(P, i))
        return total

    def in_trace_zero(self, P) -> bool:
        if P is INFINITY or self.n == 1:
            return True
        return self._partial_trace(P) == self.neg(self.frobenius(P, self.n - 1))

    # -- sampling and enumeration ---------------------------------------------

    def random_point(self, rng: random.Random):
        """A uniformly chosen x with a random sign; the identity is never returned."""
        F = self.field
        while True:
            pts = self.lift_x(F.random(rng))
            if pts:
                return pts[rng.randrange(len(pts))]

    def random_trace_zero_point(self, rng: random.Random):
        """``n R - Tr(R)`` for a random point ``R``; it lies in T_n since Tr commutes with it."""
        if self.n == 1:
            raise InvalidInput("trace zero subgroup needs an extension field")
        while True:
            R = self.random_point(rng)
            P = self.sub(self.mul(self.n, R), self.trace(R))
            if P is not INFINITY:
                return P

    def points(self):
        """Every point, the identity first (exhaustive; small fields only)."""
        yield INFINITY
        F = self.field
        for x in F.elements():
            yield from self.lift_x(x)

    def count_points(self) -> int:
        """|E(K)| by summing Legendre symbols over F_q, or by enumeration over extensions."""
        if self.n == 1:
            p = self.q
            return p + 1 + sum(self.base.legendre(x * x * x + self.A * x + self.B) for x in range(p))
        return sum(1 for _ in self.points())

    # -- text form -------------------------------------------------------------

    def to_text(self, P) -> str:
        if P is INFINITY:
            return "inf"
        fmt = (lambda v: "[" + ", ".join(map(str, v)) + "]") if self.n > 1 else str
        return f"({fmt(P[0])}, {fmt(P[1])})"

    def from_text(self, text: str):
        text = text.strip()
        if text == "inf":
            return INFINITY
        body = text.strip("()").replace(" ", "")
        try:
            if self.n > 1:
                parts = body.split("],[")
                if len(parts) != 2:
                    raise InvalidInput(f"cannot parse point {text!r}")
                x, y = ([int(v) for v in s.strip("[]").split(",")] for s in parts)
            else:
                x, y = (int(v) for v in body.split(","))
        except ValueError as exc:
            raise InvalidInput(f"cannot parse point {text!r}") from exc
        return self.point(x, y)


# -- group orders ------------------------------------------------------------------


def frobenius_trace(q: int, order_base: int) -> int:
    return q + 1 - order_base


def extension_order(q: int, order_base: int, k: int) -> int:
    """|E(F_{q^k})| from |E(F_q)| by the recurrence ``a_k = t a_(k-1) - q a_(k-2)``."""
    t = frobenius_trace(q, order_base)
    a_prev, a = 2, t
    for _ in range(k - 1):
        a_prev, a = a, t * a - q * a_prev
    return q**k + 1 - a


def group_orders(q: int, n: int, order_base: int) -> tuple[int, int, int]:
    """``(|E(F_q)|, |E(F_{q^n})|, |T_n|)``."""
    whole = extension_order(q, order_base, n)
    tz, rem = divmod(whole, order_base)
    if rem:
        raise InternalError("|E(F_q)| does not divide |E(F_{q^n})|")
    return order_base, whole, tz


def _bsgs_candidates(curve: Curve, P, lo: int, hi: int) -> set[int] | None:
    """All ``N`` in ``[lo, hi]`` with ``N P = O``; ``None`` if ``P`` has tiny order."""
    m = math.isqrt((hi - lo) // 2 + 1) + 1
    baby: dict[int, int] = {}
    R = INFINITY
    for j in range(1, m + 1):
        R = curve.add(R, P)
        if R is INFINITY:
            return None
        baby.setdefault(R[0], j)
    step = curve.mul(2 * m, P)
    c = lo + m
    G = curve.mul(c, P)
    found = set()
    while c - m <= hi:
        if G is INFINITY:
            found.add(c)
        else:
            j = baby.get(G[0])
            if j is not None:
                J = curve.mul(j, P)
                found.add(c - j if J == G else c + j)
        G = curve.add(G, step)
        c += 2 * m
    return {N for N in found if lo <= N <= hi}


def count_points_bsgs(curve: Curve, rng: random.Random | None = None, max_points: int = 20) -> int:
    """|E(F_q)| by baby-step giant-step in the Hasse interval.

    Candidate orders are intersected over random points until one remains.
    """
    if curve.n != 1:
        raise InvalidInput("BSGS counting works over the prime field")
    rng = rng or random.Random(0)
    q = curve.q
    w = math.isqrt(4 * q) + 1
    lo, hi = max(1, q + 1 - w), q + 1 + w
    candidates = None
    for _ in range(max_points):
        found = _bsgs_candidates(curve, curve.random_point(rng), lo, hi)
        if found is None:
            continue
        candidates = found if candidates is None else candidates & found
        if candidates is not None and len(candidates) == 1:
            return candidates.pop()
    raise InternalError("point counting did not isolate a unique group order")


def count_base_points(curve: Curve, exhaustive_limit: int = 200_000) -> int:
    base = curve.over_base()
    if curve.q <= exhaustive_limit:
        return base.count_points()
    return count_points_bsgs(base)


# -- exceptional x-coordinates ------------------------------------------------------


def torsion_exceptional_set(curve: Curve) -> list:
    """x-coordinates of ``Q + R`` with ``O != Q`` in E[3](F_q) and ``R`` in E[2] meet T_5, sorted.

    These satisfy the n = 5 summation equation without coming from T_5.
    """
    if curve.n != 5:
        raise InvalidInput("the exceptional set is defined for n = 5")
    F, base = curve.field, curve.base
    A, B = curve.A, curve.B
    psi3 = UniPoly.from_ints(base, [-A * A, 12 * B, 6 * A, 0, 3])
    three_torsion = []
    for x in roots_in_field(psi3):
        for pt in curve.lift_x(F.embed(x)):
            three_torsion.append(pt)
    if not three_torsion:
        return []
    two_torsion = [INFINITY]
    cubic = UniPoly.from_ints(base, [B, A, 0, 1])
    for r in kummer_roots(cubic, F):
        R = (r, F.zero)
        if curve.in_trace_zero(R):
            two_torsion.append(R)
    xs = set()
    for Q in three_torsion:
        for R in two_torsion:
            S = curve.add(Q, R)
            if S is not INFINITY:
                xs.add(S[0])
    if len(xs) > 16:
        raise InternalError("more than 16 exceptional x-coordinates")
    return sorted(xs)


def is_prime(k: int) -> bool:
    return bool(gmpy2.is_prime(k))
