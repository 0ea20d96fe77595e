"""Compression of trace zero points to n - 1 elements of F_q, and decompression.

A point ``P = (x, y)`` of T_n is represented by the first ``n - 1``
elementary symmetric functions of the Frobenius conjugates of ``x``
(the *S* variant) or by the cheaper coordinates ``t_i`` related to them
by an invertible triangular change of variables (the *T* variant).  The
missing last coordinate is a root of the symmetrized summation polynomial
``g_n``; decompression returns every class ``{+-phi^i(P)}`` of points
consistent with the input.
"""

from __future__ import annotations

import functools
import operator
from dataclasses import dataclass

from .ec import Curve, INFINITY, count_base_points, group_orders, torsion_exceptional_set
from .errors import (
    CannotCompressIdentity,
    DegenerateInput,
    InternalError,
    InvalidInput,
    InvalidParameters,
    NotTraceZero,
)
from .ff_ext import KummerField
from .ff_prime import PrimeField
from .multipoly import check_curve, symmetrized_semaev
from .unipoly import UniPoly, characteristic_root, kummer_roots, roots_in_field

VARIANTS = ("S", "T")
FORMAT_VERSION = 0
MAX_CLASSES_N5 = 6


class TraceZeroParams:
    """Curve ``y^2 = x^3 + Ax + B`` over F_q, extension degree ``n`` and Kummer constant ``mu``.

    ``g_n`` and, for ``n = 5``, the exceptional x-coordinates are computed
    on first use and cached.
    """

    def __init__(self, q: int, n: int, A: int, B: int, mu: int | None = None, order_base: int | None = None):
        if n not in (3, 5):
            raise InvalidParameters("compression is implemented for n = 3 and n = 5")
        self.base = PrimeField(q)
        self.q = self.base.p
        self.A, self.B = int(A) % self.q, int(B) % self.q
        check_curve(self.base, self.A, self.B)
        self.ext = KummerField(self.base, n, mu)
        self.n = n
        self.mu = self.ext.mu
        self.curve = Curve(self.ext, self.A, self.B)
        self.order_base = order_base

    def __repr__(self):
        return f"TraceZeroParams(q={self.q}, n={self.n}, A={self.A}, B={self.B}, mu={self.mu})"

    def to_dict(self) -> dict:
        out = {"q": str(self.q), "n": self.n, "mu": str(self.mu), "A": str(self.A), "B": str(self.B)}
        if self.order_base is not None:
            out["order_base"] = str(self.order_base)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> TraceZeroParams:
        try:
            order = data.get("order_base")
            return cls(
                int(data["q"]), int(data["n"]), int(data["A"]), int(data["B"]),
                mu=int(data["mu"]) if data.get("mu") is not None else None,
                order_base=int(order) if order is not None else None,
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidParameters(f"malformed parameter record: {exc}") from exc

    @functools.cached_property
    def g(self):
        """The symmetrized summation polynomial ``g_n(s_1, ..., s_n)``."""
        return symmetrized_semaev(self.n, self.A, self.B, self.base)

    @functools.cached_property
    def last_coordinate_evaluator(self):
        """A compiled function ``(s_1, ..., s_{n-1}) -> coefficients of g_n in s_n``.

        ``g_5`` has about a thousand terms, so it is turned into straight-line
        Python once instead of being walked term by term on every call.
        """
        k = self.n - 1
        names = [f"s{i + 1}" for i in range(k)]
        degrees = self.g.degrees()
        lines = [f"def evaluate({', '.join(names)}):"]
        for i, name in enumerate(names):
            prev = name
            for e in range(2, degrees[i] + 1):
                lines.append(f"    {name}_{e} = {prev} * {name}")
                prev = f"{name}_{e}"
        by_last: dict[int, list[str]] = {}
        for exps, c in self.g.terms.items():
            factors = [str(c)]
            for i, e in enumerate(exps[:-1]):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}_{e}")
            by_last.setdefault(exps[-1], []).append(" * ".join(factors))
        top = max(by_last)
        parts = [f"({' + '.join(by_last.get(j, ['0']))}) % {self.q}" for j in range(top + 1)]
        lines.append("    return [" + ", ".join(parts) + "]")
        namespace: dict = {}
        exec("\n".join(lines), namespace)  # noqa: S102 - source is generated from g_n above
        return namespace["evaluate"]

    @functools.cached_property
    def exceptional(self) -> frozenset:
        """x-coordinates that solve the n = 5 equation without belonging to T_5."""
        if self.n != 5:
            return frozenset()
        return frozenset(torsion_exceptional_set(self.curve))

    @functools.cached_property
    def orders(self) -> tuple[int, int, int] | None:
        """``(|E(F_q)|, |E(F_{q^n})|, |T_n|)`` when |E(F_q)| is known or cheap to count."""
        order = self.order_base
        if order is None:
            if self.q.bit_length() > 64:
                return None
            order = count_base_points(self.curve)
        return group_orders(self.q, self.n, order)


class CompressedPoint(tuple):
    """``n - 1`` residues modulo q, tagged with the variant that produced them.

    A plain ``(variant, coords)`` tuple underneath, which keeps construction
    on the compression path cheap.
    """

    __slots__ = ()

    def __new__(cls, variant: str, coords) -> CompressedPoint:
        if variant not in VARIANTS:
            raise InvalidInput(f"variant must be one of {VARIANTS}")
        return tuple.__new__(cls, (variant, tuple(int(c) for c in coords)))

    variant = property(operator.itemgetter(0))
    coords = property(operator.itemgetter(1))

    def __repr__(self):
        return f"CompressedPoint(variant={self.variant!r}, coords={self.coords!r})"

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coords)

    @classmethod
    def from_text(cls, text: str, variant: str = "S") -> CompressedPoint:
        try:
            coords = tuple(int(v) for v in text.replace(" ", "").split(","))
        except ValueError as exc:
            raise InvalidInput(f"cannot parse compressed point {text!r}") from exc
        return cls(variant, coords)

    def to_bytes(self, params: TraceZeroParams) -> bytes:
        _check_shape(params, self)
        header = (FORMAT_VERSION << 5) | (VARIANTS.index(self.variant) << 4) | params.n
        return bytes([header]) + b"".join(params.base.to_bytes(c) for c in self.coords)

    @classmethod
    def from_bytes(cls, data: bytes, params: TraceZeroParams) -> CompressedPoint:
        if not data:
            raise InvalidInput("empty encoding")
        header = data[0]
        if header >> 5 != FORMAT_VERSION:
            raise InvalidInput(f"unsupported format version {header >> 5}")
        if header & 0x0F != params.n:
            raise InvalidInput(f"encoding is for n = {header & 0x0F}, parameters have n = {params.n}")
        w = params.base.byte_length
        body = data[1:]
        if len(body) != (params.n - 1) * w:
            raise InvalidInput(f"expected {(params.n - 1) * w} payload bytes, got {len(body)}")
        coords = tuple(params.base.from_bytes(body[i * w:(i + 1) * w]) for i in range(params.n - 1))
        return cls(VARIANTS[(header >> 4) & 1], coords)


@dataclass(frozen=True)
class PointClass:
    """The orbit ``{+-phi^i(P)}``; ``canonical`` is its smallest member."""

    members: tuple

    @property
    def canonical(self):
        return self.members[0]

    @property
    def x_coordinates(self) -> tuple:
        return tuple(sorted({P[0] for P in self.members}))

    def __contains__(self, P):
        return P in self.members


def _check_shape(params: TraceZeroParams, c: CompressedPoint):
    if len(c.coords) != params.n - 1:
        raise InvalidInput(f"expected {params.n - 1} coordinates, got {len(c.coords)}")
    if any(not 0 <= v < params.q for v in c.coords):
        raise InvalidInput("coordinates must be reduced modulo q")


# -- straight-line formulas ---------------------------------------------------------


def t_coordinates(params: TraceZeroParams, x) -> tuple:
    """All ``n`` coordinates ``t_1..t_n`` of an x-coordinate."""
    q, mu = params.q, params.mu
    if params.n == 3:
        x0, x1, x2 = x
        return x0, x1 * x2 % q, (x1**3 + mu * x2**3) % q
    x0, x1, x2, x3, x4 = x
    m2 = mu * mu
    t2 = (x1 * x4 + x2 * x3) % q
    t3 = (x1 * x1 * x3 + x1 * x2 * x2 + mu * (x3 * x3 * x4 + x2 * x4 * x4)) % q
    t4 = (
        mu * (x2 * x2 * x3 * x3 + x1 * x1 * x4 * x4 - x1 * x3**3 - x2**3 * x4 - x1 * x2 * x3 * x4)
        - x1**3 * x2 - m2 * x3 * x4**3
    ) % q
    t5 = (
        x1**5 + mu * x2**5 + m2 * x3**5 + m2 * mu * x4**5
        + 5 * mu * (x1 * x1 * x2 * x3 * x3 + x1 * x1 * x2 * x2 * x4 - x1**3 * x3 * x4 - x1 * x2**3 * x3)
        + 5 * m2 * (x2 * x2 * x3 * x4 * x4 + x1 * x3 * x3 * x4 * x4 - x2 * x3**3 * x4 - x1 * x2 * x4**3)
    ) % q
    return x0, t2, t3, t4, t5


def s_from_t(params: TraceZeroParams, t) -> tuple:
    """``s_1..s_k`` from ``t_1..t_k`` (``k`` may be ``n - 1`` or ``n``)."""
    q, mu = params.q, params.mu
    if params.n == 3:
        t1, t2 = t[0], t[1]
        s = [3 * t1, 3 * t1 * t1 - 3 * mu * t2]
        if len(t) > 2:
            s.append(t1**3 - 3 * mu * t1 * t2 + mu * t[2])
        return tuple(v % q for v in s)
    t1, t2, t3, t4 = t[:4]
    sq = t1 * t1
    s = [
        5 * t1,
        10 * sq - 5 * mu * t2,
        10 * sq * t1 - 15 * mu * t1 * t2 + 5 * mu * t3,
        5 * sq * sq - 15 * mu * sq * t2 + 10 * mu * t1 * t3 + 5 * mu * t4,
    ]
    if len(t) > 4:
        s.append(sq * sq * t1 - 5 * mu * sq * t1 * t2 + 5 * mu * sq * t3 + 5 * mu * t1 * t4 + mu * t[4])
    return tuple(v % q for v in s)


def symmetric_coords(params: TraceZeroParams, x) -> tuple:
    """``s_i = e_i(x, x^q, ..., x^(q^(n-1)))`` for ``i = 1..n``."""
    if params.n == 3:
        q, mu = params.q, params.mu
        x0, x1, x2 = x
        return (
            3 * x0 % q,
            (3 * x0 * x0 - 3 * mu * x1 * x2) % q,
            (x0**3 - 3 * mu * x0 * x1 * x2 + mu * x1**3 + mu * mu * x2**3) % q,
        )
    return s_from_t(params, t_coordinates(params, x))


def _compress_x(params: TraceZeroParams, x, variant: str) -> tuple:
    if params.n == 3:
        x0, x1, x2 = x
        q = params.q
        if variant == "T":
            return x0, x1 * x2 % q
        return 3 * x0 % q, 3 * (x0 * x0 - params.mu * x1 * x2) % q
    t = t_coordinates(params, x)[:4]
    return t if variant == "T" else s_from_t(params, t)


# -- public operations --------------------------------------------------------------


def compress(params: TraceZeroParams, P, variant: str = "S", check: bool = True) -> CompressedPoint:
    """Compress ``P`` in T_n to ``n - 1`` elements of F_q.

    With ``check=False`` membership in T_n is trusted (benchmarking).
    """
    if variant not in VARIANTS:
        raise InvalidInput(f"variant must be one of {VARIANTS}")
    if P is INFINITY:
        raise CannotCompressIdentity("the point at infinity has no compressed form")
    if check:
        params.curve.check(P)
        if not params.curve.in_trace_zero(P):
            raise NotTraceZero("point is not in the trace zero subgroup")
    # the formulas already return reduced ints
    return tuple.__new__(CompressedPoint, (variant, _compress_x(params, P[0], variant)))


def class_of(params: TraceZeroParams, P) -> PointClass:
    curve = params.curve
    members = set()
    for Q in curve.conjugates(P):
        members.add(Q)
        members.add(curve.neg(Q))
    return PointClass(tuple(sorted(members, key=_point_key)))


def classes_equal(params: TraceZeroParams, P, Q) -> bool:
    return class_of(params, P).canonical == class_of(params, Q).canonical


def _point_key(P):
    return (0,) if P is INFINITY else (1, P)


def decompress(params: TraceZeroParams, c: CompressedPoint) -> list[PointClass]:
    """Every point class of T_n whose compression is ``c``, sorted by canonical member."""
    _check_shape(params, c)
    if params.n == 3:
        xs = _candidates_n3(params, c)
    else:
        xs = _candidates_n5(params, c)
    return _assemble(params, xs)


def _assemble(params: TraceZeroParams, candidates) -> list[PointClass]:
    curve = params.curve
    classes: dict = {}
    covered = set(params.exceptional)
    for x in sorted(set(candidates)):
        if x in covered:
            continue
        lifted = curve.lift_x(x)
        if not lifted or not curve.in_trace_zero(lifted[0]):
            # membership in T_n is invariant under Frobenius
            covered.update(params.ext.conjugates(x))
            continue
        cls = class_of(params, lifted[0])
        classes[cls.canonical] = cls
        covered.update(cls.x_coordinates)
    out = sorted(classes.values(), key=lambda cls: cls.canonical)
    if params.n == 5 and len(out) > MAX_CLASSES_N5:
        raise InternalError("more point classes than the degree of g_5 allows")
    return out


# -- n = 3 --------------------------------------------------------------------------


def _roots_with_symmetric_functions(params: TraceZeroParams, s) -> list:
    """Roots in F_{q^n} of ``x^n - s_1 x^(n-1) + ... -+ s_n`` whose symmetric functions are ``s``."""
    q = params.q
    coeffs = [(-1) ** (params.n - i) * s[params.n - i - 1] % q for i in range(params.n)] + [1]
    poly = UniPoly(params.base, coeffs)
    return [x for x in kummer_roots(poly, params.ext) if symmetric_coords(params, x) == tuple(s)]


def _root_with_symmetric_functions(params: TraceZeroParams, s):
    """One member of the Frobenius orbit whose symmetric functions are ``s``, or ``None``."""
    q = params.q
    coeffs = [(-1) ** (params.n - i) * s[params.n - i - 1] % q for i in range(params.n)] + [1]
    x = characteristic_root(UniPoly(params.base, coeffs), params.ext)
    if x is not None and symmetric_coords(params, x) != tuple(s):
        raise InternalError("root does not reproduce its symmetric functions")
    return x


def _candidates_n3(params: TraceZeroParams, c: CompressedPoint) -> list:
    F = params.base
    q, mu, A, B = params.q, params.mu, params.A, params.B
    if c.variant == "S":
        s1, s2 = c.coords
        if s1 == 0:
            if (s2 - A) % q == 0:
                raise DegenerateInput("s_1 = 0 and (s_2 - A)^2 = 0: every s_3 solves g_3")
            return []
        s3 = (s2 * (s2 - 2 * A) - 4 * B * s1 + A * A) * F.inv(4 * s1) % q
        x0 = s1 * F.inv(3) % q
        c0 = (3 * x0 * x0 - s2) % q
        if c0 == 0:
            return _roots_with_symmetric_functions(params, (s1, s2, s3))
        # 27 mu^4 u^2 + 27 mu^3 (x0 (s2 - 2 x0^2) - s3) u + mu^2 c0^3 = 0 with u = x1^3
        a = 27 * pow(mu, 4, q) % q
        b = 27 * pow(mu, 3, q) * (x0 * (s2 - 2 * x0 * x0) - s3) % q
        cc = mu * mu * pow(c0, 3, q) % q
        x2_num, x2_den = c0, 3 * mu
    else:
        t1, t2 = c.coords
        if t1 == 0:
            if (3 * mu * t2 + A) % q == 0:
                raise DegenerateInput("t_1 = 0 and 3 mu t_2 + A = 0: every t_3 solves the equation")
            return []
        t3 = (
            -3 * pow(t1, 4, q) + (18 * mu * t1 * t1 + 9 * mu * mu * t2 + 6 * A * mu) * t2
            - 12 * B * t1 - 6 * A * t1 * t1 + A * A
        ) * F.inv(12 * mu * t1) % q
        if t2 == 0:
            return _roots_with_symmetric_functions(params, s_from_t(params, (t1, t2, t3)))
        x0 = t1
        # u^2 - t3 u + mu t2^3 = 0 with u = x1^3
        a, b, cc = 1, -t3 % q, mu * pow(t2, 3, q) % q
        x2_num, x2_den = t2, 1
    disc = (b * b - 4 * a * cc) % q
    roots = F.sqrt(disc)
    out = []
    inv_2a = F.inv(2 * a)
    for r in roots:
        u = (-b + r) * inv_2a % q
        for x1 in F.cbrt_all(u):
            if x1:
                x2 = x2_num * F.inv(x2_den * x1) % q
                out.append((x0, x1, x2))
    return out


# -- n = 5 --------------------------------------------------------------------------


def last_coordinate_poly(params: TraceZeroParams, s) -> UniPoly:
    """``g_n(s_1, ..., s_{n-1}, t)`` as a polynomial in ``t``."""
    return UniPoly(params.base, params.last_coordinate_evaluator(*s))


def _candidates_n5(params: TraceZeroParams, c: CompressedPoint) -> list:
    s = c.coords if c.variant == "S" else s_from_t(params, c.coords)
    g = last_coordinate_poly(params, s)
    if g.is_zero():
        raise DegenerateInput("g_5 vanishes identically in the last coordinate")
    out = []
    for s5 in roots_in_field(g):
        x = _root_with_symmetric_functions(params, tuple(s) + (s5,))
        if x is not None:
            out.append(x)
    return out
