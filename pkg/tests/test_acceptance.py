"""Acceptance criteria 1-8, one PASS/FAIL line each.

Every test records its line in ``conftest.ACCEPTANCE_LINES`` (printed in the
terminal summary) and prints it, so ``pytest -s tests/test_acceptance.py``
shows them inline as well.
"""

import contextlib
import random
import time
import timeit
from collections import Counter

import numpy as np
from tracezero import (
    INFINITY,
    PrimeField,
    TraceZeroParams,
    compress,
    decompress,
    restricted_symmetric_functions,
    semaev,
    symmetrize,
    symmetrized_semaev,
    weil_restrict_f3,
)
from tracezero import selftest
from tracezero.multipoly import clear_caches
from tracezero.oracles import polynomial_table, vanishing_by_lifts
from tracezero.profiling import root_extraction_share

from conftest import ACCEPTANCE_LINES, reference_poly


@contextlib.contextmanager
def criterion(number: int, title: str):
    """Collect ``ok`` and ``detail`` from the body; an exception counts as a failure."""
    result = {"ok": False, "detail": ""}
    try:
        yield result
    except Exception as exc:
        result["ok"] = False
        result["detail"] = f"{type(exc).__name__}: {exc}"
        raise
    finally:
        line = f"criterion {number}: {'PASS' if result['ok'] else 'FAIL'}  {title}"
        if result["detail"]:
            line += f" [{result['detail']}]"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert result["ok"], line


def ints(values):
    return tuple(int(v) for v in values)


def fresh_params(c):
    return TraceZeroParams(int(c["q"]), c["n"], int(c["A"]), int(c["B"]), mu=int(c["mu"]), order_base=int(c["order_base"]))


def test_criterion_1_vectors_n3(example_curves):
    c = example_curves[3]
    with criterion(1, "n=3 vectors at q = 2^79 - 67") as r:
        clear_caches()
        start = time.perf_counter()
        params = fresh_params(c)
        P = params.curve.lift_x(ints(c["point_x"]))[0]
        S = compress(params, P, "S")
        T = compress(params, P, "T")
        classes = decompress(params, S)
        classes_t = decompress(params, T)
        elapsed = time.perf_counter() - start

        printed = [ints(x) for x in c["decompressed_x"]]
        expected = list(printed)
        for index, fixed in c["decompressed_x_corrections"].items():
            expected[int(index)] = ints(fixed)
        found = classes[0].x_coordinates if len(classes) == 1 else ()
        r["ok"] = (
            S.coords == ints(c["compressed_S"])
            and T.coords == ints(c["compressed_T"])
            and len(classes) == 1
            and found == tuple(sorted(expected))
            and classes_t == classes
            and elapsed < 1.0
        )
        unmatched = [x for x in printed if x not in found]
        r["detail"] = (
            f"S and T match, 1 class, {3 - len(unmatched)}/3 printed conjugates verbatim, "
            f"{len(unmatched)} differs by a dropped leading digit, {elapsed:.2f} s"
        )


def test_criterion_2_vectors_n5(example_curves):
    c = example_curves[5]
    with criterion(2, "n=5 vectors at q = 2^60 - 695") as r:
        clear_caches()
        start = time.perf_counter()
        params = fresh_params(c)
        P = params.curve.lift_x(ints(c["point_x"]))[0]
        S = compress(params, P, "S")
        T = compress(params, P, "T")
        classes = decompress(params, T)
        Q = params.curve.lift_x(ints(c["ambiguous_point_x"]))[0]
        ambiguous = decompress(params, compress(params, Q, "S"))
        elapsed = time.perf_counter() - start
        r["ok"] = (
            S.coords == ints(c["compressed_S"])
            and T.coords == ints(c["compressed_T"])
            and len(classes) == 1
            and classes[0].x_coordinates == tuple(sorted(ints(x) for x in c["decompressed_x"]))
            and decompress(params, S) == classes
            and len(ambiguous) == c["ambiguous_classes"]
            and any(Q in cls for cls in ambiguous)
            and elapsed < 10.0
        )
        r["detail"] = f"S and T match, 1 class with 5 conjugates, second point {len(ambiguous)} classes, {elapsed:.2f} s with g_5 build"


def test_criterion_3_symbolic_goldens(example_curves, reference_equations):
    with criterion(3, "symbolic golden files") as r:
        checks = {}
        for p, A, B, mu in [(int(example_curves[3]["q"]), 1, 368, 3), (31, 2, 6, 3), (13, 4, 9, 2)]:
            F = PrimeField(p)
            g3 = reference_poly(reference_equations["g3"]["terms"], 3, F, A=A, B=B)
            checks[f"g3 q={p}"] = symmetrize(semaev(3, A, B, F)) == g3
            f3 = reference_poly(reference_equations["f3_restricted"]["terms"], 3, F, mu=mu, A=A, B=B)
            checks[f"f3~ q={p}"] = weil_restrict_f3(A, B, mu, F) == f3
        for n, key, p in [(3, "s_in_x_n3", int(example_curves[3]["q"])), (5, "s_in_x_n5", int(example_curves[5]["q"]))]:
            F = PrimeField(p)
            expected = [reference_poly(t, n, F, mu=3) for t in reference_equations[key]["polys"]]
            checks[key] = restricted_symmetric_functions(n, 3, F) == expected
        c5 = example_curves[5]
        g5 = symmetrized_semaev(5, int(c5["A"]), int(c5["B"]), PrimeField(int(c5["q"])))
        profile = reference_equations["g5_degrees"]
        checks["g5 degrees"] = g5.total_degree() == profile["total"] and list(g5.degrees()) == profile["per_variable"]
        failed = [k for k, ok in checks.items() if not ok]
        r["ok"] = not failed
        r["detail"] = f"{len(checks) - len(failed)}/{len(checks)} identities exact" + (f", failed: {failed}" if failed else "")


EXHAUSTIVE_FIELDS = [(7, 3, 1, 1), (13, 3, 1, 1), (31, 3, 1, 2), (11, 5, 1, 3), (31, 5, 1, 2)]


def test_criterion_4_exhaustive_small_fields():
    with criterion(4, "exhaustive small-field correctness") as r:
        start = time.perf_counter()
        failed, summary = [], []
        for q, n, A, B in EXHAUSTIVE_FIELDS:
            survey = selftest.Survey.build(TraceZeroParams(q, n, A, B))
            # the T variant decompresses through s_from_t, so it is covered by the
            # formula check wherever a second full roundtrip would be too slow
            variants = ("S", "T") if q ** (n - 1) < 10**5 else ("S",)
            checks = [
                selftest.check_orders(survey),
                selftest.check_solution_set(survey),
                selftest.check_compress_formulas(survey),
                *(selftest.check_roundtrip(survey, v) for v in variants),
                selftest.check_exceptional_points(survey),
            ]
            failed += [f"q={q} n={n} {c.name}" for c in checks if not c.passed]
            summary.append(f"q={q} n={n} |T_n|={survey.census.order_trace_zero} ({'+'.join(variants)})")
        elapsed = time.perf_counter() - start
        r["ok"] = not failed and elapsed < 300
        r["detail"] = "; ".join(summary) + f"; {elapsed:.0f} s" + (f"; failed: {failed}" if failed else "")


def test_criterion_5_summation_polynomial_oracle():
    with criterion(5, "summation polynomials against lifts over F_49, q = 7") as r:
        small = selftest.check_summation_polynomials(7, 1, 1, sizes=(3, 4))
        zeros = polynomial_table(semaev(5, 1, 1, PrimeField(7)), 7) == 0
        truth = vanishing_by_lifts(7, 1, 1, 5)
        discrepancies = int(np.count_nonzero(zeros != truth))
        r["ok"] = small.passed and discrepancies == 0 and truth.size >= 10**4
        r["detail"] = f"f_3, f_4: {small.summary}; f_5: all {truth.size} tuples, {discrepancies} discrepancies"


# primes of 40, 50 and 60 bits with q = 1 mod 5; the single-class rate is close
# to 90%, so the sample is twice the minimum to keep the standard error near 0.2%
AMBIGUITY_CURVES = [(1099511640131, 3, 7), (1099511640131, 1, 1), (1125899906854991, 2, 11), (1152921504606859531, 5, 1)]
AMBIGUITY_SAMPLES = 5000


def test_criterion_6_ambiguity_statistics():
    with criterion(6, "n=5 class counts on random points") as r:
        counts = Counter()
        for q, A, B in AMBIGUITY_CURVES:
            params = TraceZeroParams(q, 5, A, B)
            rng = random.Random(q)
            for _ in range(AMBIGUITY_SAMPLES):
                P = params.curve.random_trace_zero_point(rng)
                classes = decompress(params, compress(params, P))
                assert any(P in cls for cls in classes)
                counts[len(classes)] += 1
        total = sum(counts.values())
        single = counts[1] / total
        at_most_two = (counts[1] + counts[2]) / total
        r["ok"] = total >= 10**4 and single >= 0.90 and at_most_two >= 0.99 and max(counts) <= 6
        r["detail"] = f"{total} points: single {100 * single:.2f}%, at most two {100 * at_most_two:.2f}%, histogram {dict(sorted(counts.items()))}"


def test_criterion_7_scalar_multiplication():
    with criterion(7, "compression commutes with scalar multiples of conjugates") as r:
        failures, trials = 0, 0
        for params in (TraceZeroParams(1000003, 3, 2, 7), TraceZeroParams(1031, 5, 2, 7)):
            curve = params.curve
            order = params.orders[2]
            rng = random.Random(params.n)
            for _ in range(1000):
                P = curve.random_trace_zero_point(rng)
                k = rng.randrange(1, order)
                kP = curve.mul(k, P)
                expected = None if kP is INFINITY else compress(params, kP, "S")
                for sign in (P, curve.neg(P)):
                    for i in range(params.n):
                        Q = curve.mul(k, curve.frobenius(sign, i))
                        got = None if Q is INFINITY else compress(params, Q, "S")
                        failures += got != expected
                trials += 1
        r["ok"] = failures == 0
        r["detail"] = f"{trials} trials (q=1000003 n=3, q=1031 n=5), {failures} failures"


Q60_3 = 1152921504606846883  # 60-bit prime with q = 1 mod 3


def _best_time(run, number: int = 5, repeat: int = 7) -> float:
    run()
    return min(timeit.repeat(run, number=number, repeat=repeat)) / number


def test_criterion_8_directional_performance(example_curves):
    with criterion(8, "T-compression speedup and root extraction share") as r:
        params = TraceZeroParams(Q60_3, 3, 1, 3)
        rng = random.Random(8)
        points = [params.curve.random_trace_zero_point(rng) for _ in range(1000)]

        def timed(variant):
            def run():
                for P in points:
                    compress(params, P, variant, check=False)
            return _best_time(run) / len(points)

        s_time, t_time = timed("S"), timed("T")
        speedup = s_time / t_time
        share3 = root_extraction_share(params, points=200, seed=8)
        share5 = root_extraction_share(fresh_params(example_curves[5]), points=100, seed=8)
        r["ok"] = speedup >= 1.5 and share3 > 0.5 and share5 > 0.5
        r["detail"] = (
            f"compress S {1e6 * s_time:.2f} us, T {1e6 * t_time:.2f} us, ratio {speedup:.2f}; "
            f"root extraction {100 * share3:.0f}% (n=3), {100 * share5:.0f}% (n=5)"
        )
