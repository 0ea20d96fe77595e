"""Exhaustive checks of the library against the brute-force oracles.

Each check returns a :class:`Check` with a pass flag, a one-line summary and,
on failure, a few counterexamples.  The CLI ``selftest`` command prints
them; the test suite asserts on them.
"""

from __future__ import annotations

import collections
import itertools
from dataclasses import dataclass, field

import numpy as np

from .codec import CompressedPoint, TraceZeroParams, s_from_t, compress, decompress
from .ec import INFINITY, Curve, group_orders
from .errors import DegenerateInput
from .ff_ext import KummerField
from .ff_prime import PrimeField
from .multipoly import semaev, weil_restrict_f3
from .oracles import Census, census, polynomial_table, vanishing_by_lifts
from .unipoly import UniPoly, kummer_roots

MAX_EXAMPLES = 5


@dataclass
class Check:
    name: str
    passed: bool
    summary: str
    counterexamples: list = field(default_factory=list)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.summary}"


@dataclass
class Survey:
    """The oracle census of one parameter set, plus the zero table of ``g_n``."""

    params: TraceZeroParams
    census: Census

    @classmethod
    def build(cls, params: TraceZeroParams) -> Survey:
        table = polynomial_table(params.g, params.q) == 0
        return cls(params, census(params.q, params.n, params.A, params.B, params.mu, zero_table=table))

    def orbit_key(self, x) -> tuple:
        return min(self.params.ext.conjugates(x))

    def trace_zero_orbits(self) -> set:
        return {self.orbit_key(x) for x, _ in self.census.points()}


def check_orders(survey: Survey) -> Check:
    c = survey.census
    exact = c.order_trace_zero * c.order_base == c.order_ext
    recurrence = group_orders(c.q, c.n, c.order_base) == (c.order_base, c.order_ext, c.order_trace_zero)
    return Check(
        "group orders",
        exact and recurrence,
        f"|E(F_q)| = {c.order_base}, |E(F_q^{c.n})| = {c.order_ext}, |T_{c.n}| = {c.order_trace_zero}"
        f" (product {'matches' if exact else 'differs'}, recurrence {'agrees' if recurrence else 'disagrees'})",
    )


def check_solution_set(survey: Survey) -> Check:
    """Liftable zeros of ``g_n`` are exactly T_n plus the exceptional set."""
    c, params = survey.census, survey.params
    trace_zero = survey.trace_zero_orbits()
    zeros = {survey.orbit_key(tuple(int(v) for v in c.zero_liftable[:, j])) for j in range(c.zero_liftable.shape[1])}
    exceptional = {survey.orbit_key(x) for x in params.exceptional}
    missing = trace_zero - zeros
    extra = zeros - trace_zero
    ok = not missing and extra == exceptional
    return Check(
        "solution set of g_n",
        ok,
        f"{len(trace_zero)} trace zero orbits, {len(zeros)} liftable zero orbits, "
        f"{len(extra)} outside T_{params.n} vs {len(exceptional)} exceptional",
        sorted(missing)[:MAX_EXAMPLES] + sorted(extra ^ exceptional)[:MAX_EXAMPLES],
    )


def check_compress_formulas(survey: Survey) -> Check:
    """The straight-line compression formulas reproduce the brute-force symmetric functions."""
    params = survey.params
    bad = []
    for j, (x, y) in enumerate(survey.census.points()):
        s = tuple(int(v) for v in survey.census.sym[:, j])
        S = compress(params, (x, y), "S", check=False)
        T = compress(params, (x, y), "T", check=False)
        if S.coords != s[:-1] or s_from_t(params, T.coords) != S.coords:
            bad.append(x)
    return Check(
        "compression formulas",
        not bad,
        f"{survey.census.xs.shape[1] - len(bad)}/{survey.census.xs.shape[1]} orbit representatives agree",
        bad[:MAX_EXAMPLES],
    )


@dataclass
class RoundtripStats:
    points: int = 0
    degenerate: int = 0
    failures: list = field(default_factory=list)
    class_counts: collections.Counter = field(default_factory=collections.Counter)
    multi_class_with_s1: int = 0


def roundtrip(survey: Survey, variant: str = "S") -> RoundtripStats:
    """Decompress each distinct compressed vector once and look for every orbit that produced it.

    Compression is constant on a class, so one representative per Frobenius
    orbit covers every point of T_n.  Counts are in points.
    """
    params, c = survey.params, survey.census
    groups = collections.defaultdict(list)
    for j, (x, y) in enumerate(c.points()):
        weight = int(c.orbit_sizes[j]) * (1 if not any(y) else 2)
        groups[compress(params, (x, y), variant, check=False).coords].append((x, weight))
    stats = RoundtripStats()
    for coords, members in groups.items():
        weight = sum(w for _, w in members)
        stats.points += weight
        try:
            classes = decompress(params, CompressedPoint(variant, coords))
        except DegenerateInput:
            stats.degenerate += weight
            continue
        stats.class_counts[len(classes)] += weight
        if len(classes) > 1 and params.n == 3 and coords[0] != 0:
            stats.multi_class_with_s1 += weight
        found = set().union(*(cls.x_coordinates for cls in classes)) if classes else set()
        stats.failures.extend(x for x, _ in members if x not in found)
    return stats


def check_roundtrip(survey: Survey, variant: str = "S") -> Check:
    stats = roundtrip(survey, variant)
    ok = not stats.failures
    if survey.params.n == 3:
        ok = ok and stats.multi_class_with_s1 == 0
    hist = ", ".join(f"{k}: {v}" for k, v in sorted(stats.class_counts.items()))
    return Check(
        f"roundtrip ({variant} variant)",
        ok,
        f"{stats.points} points, {stats.degenerate} degenerate, {len(stats.failures)} failures; classes per input {{{hist}}}",
        stats.failures[:MAX_EXAMPLES],
    )


def check_weil_f3(survey: Survey) -> Check:
    params = survey.params
    f3 = weil_restrict_f3(params.A, params.B, params.mu, params.base)
    bad = [x for x, _ in survey.census.points() if f3.evaluate(x) != 0]
    return Check("restricted f_3 vanishes on T_3", not bad, f"{survey.census.xs.shape[1]} orbit representatives", bad[:MAX_EXAMPLES])


def check_exceptional_points(survey: Survey) -> Check:
    """x-coordinates of ``E[n - 2k](F_q) + (E[2] meet T_n)`` solve the symmetrized equation."""
    params = survey.params
    curve = params.curve
    two = [INFINITY] + [P for P in (pt for x in _cubic_roots(params) for pt in curve.lift_x(x)) if curve.in_trace_zero(P)]
    base_points = _base_points(params)
    g = params.g
    bad, total = [], 0
    for k in range(1, (params.n - 1) // 2 + 1):
        m = params.n - 2 * k
        torsion = [P for P in base_points if curve.mul(m, P) is INFINITY]
        for Q, R in itertools.product(torsion, two):
            S = curve.add(Q, R)
            if S is INFINITY:
                continue
            total += 1
            s = _symmetric(params, S[0])
            if g.evaluate(s) != 0:
                bad.append(S[0])
    return Check("exceptional points solve g_n", not bad, f"{total} sums checked", bad[:MAX_EXAMPLES])


def _cubic_roots(params: TraceZeroParams):
    return kummer_roots(UniPoly.from_ints(params.base, [params.B, params.A, 0, 1]), params.ext)


def _base_points(params: TraceZeroParams) -> list:
    ext, curve = params.ext, params.curve
    out = [INFINITY]
    for x in range(params.q):
        out.extend(curve.lift_x(ext.embed(x)))
    return [P for P in out if P is INFINITY or ext.is_base(P[1])]


def _symmetric(params: TraceZeroParams, x) -> tuple:
    ext = params.ext
    e = [ext.one]
    for c in ext.conjugates(x):
        e = [e[0]] + [ext.add(e[k], ext.mul(e[k - 1], c)) for k in range(1, len(e))] + [ext.mul(e[-1], c)]
    return tuple(v[0] for v in e[1:])


def check_summation_polynomials(q: int, A: int, B: int, sizes=(3, 4)) -> Check:
    """f_m vanishes exactly where some lifts over F_{q^2} add up to O."""
    F = PrimeField(q)
    bad, total = [], 0
    for m in sizes:
        zeros = polynomial_table(semaev(m, A, B, F), q) == 0
        truth = vanishing_by_lifts(q, A, B, m)
        total += truth.size
        bad.extend((m,) + tuple(int(i) for i in idx) for idx in np.argwhere(zeros != truth)[:MAX_EXAMPLES])
    return Check(
        f"summation polynomials f_{','.join(map(str, sizes))}",
        not bad,
        f"{total} tuples over F_{q}, {len(bad)} discrepancies",
        bad,
    )


def check_trace_zero_n2(q: int, A: int, B: int) -> Check:
    """T_2 consists of O, E[2](F_q) and the points with x in F_q and y outside F_q."""
    ext = KummerField(PrimeField(q), 2)
    curve = Curve(ext, A, B)
    bad, total = [], 0
    for P in curve.points():
        total += 1
        if P is INFINITY:
            continue
        x, y = P
        predicted = ext.is_base(x) and (not ext.is_base(y) or y == ext.zero)
        if predicted != (curve.trace(P) is INFINITY):
            bad.append(P)
    return Check("T_2 characterization", not bad, f"{total} points of E(F_{q}^2)", bad[:MAX_EXAMPLES])


def run(params: TraceZeroParams, variants=("S", "T")) -> list[Check]:
    """All checks for one small parameter set."""
    survey = Survey.build(params)
    checks = [check_orders(survey), check_solution_set(survey), check_compress_formulas(survey)]
    checks.extend(check_roundtrip(survey, v) for v in variants)
    if params.n == 3:
        checks.append(check_weil_f3(survey))
    checks.append(check_exceptional_points(survey))
    return checks


DEFAULT_SUITE = ((7, 3, 1, 1), (11, 5, 1, 3))


def run_default(max_q: int = 31) -> list[Check]:
    checks = []
    for q, n, A, B in DEFAULT_SUITE:
        if q <= max_q:
            checks.extend(Check(f"q={q} n={n}: {c.name}", c.passed, c.summary, c.counterexamples)
                          for c in run(TraceZeroParams(q, n, A, B)))
    checks.append(check_summation_polynomials(7, 1, 1))
    checks.append(check_trace_zero_n2(7, 1, 1))
    return checks
