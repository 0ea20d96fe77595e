"""Command-line interface: ``tracezero <command> ...``.

Exit status is 0 on success, 1 when input or parameters are rejected and 2
when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from .codec import CompressedPoint, TraceZeroParams, compress, decompress
from .ec import is_prime
from .errors import InternalError, InvalidInput, TraceZeroError
from .multipoly import restricted_symmetric_functions, semaev, weil_restrict_f3


class UsageError(InvalidInput):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_params(path: str) -> TraceZeroParams:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read parameter file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidInput("parameter file must hold a JSON object")
    return TraceZeroParams.from_dict(data)


def _variant(text: str) -> str:
    v = text.upper()
    if v not in ("S", "T"):
        raise argparse.ArgumentTypeError("variant must be S or T")
    return v


# -- setup -------------------------------------------------------------------------


def cmd_setup(args, out) -> int:
    rng = random.Random(args.seed)
    if args.random_curve:
        A, B = _random_curve(args.q, rng)
    else:
        if args.A is None or args.B is None:
            raise UsageError("give -A and -B, or --random-curve")
        A, B = args.A, args.B
    params = TraceZeroParams(args.q, args.n, A, B, mu=args.mu, order_base=args.order_base)
    print(f"q = {params.q} ({params.q.bit_length()} bits), n = {params.n}, mu = {params.mu}", file=out)
    print(f"curve: y^2 = x^3 + {params.A} x + {params.B}", file=out)
    started = time.perf_counter()
    g = params.g
    print(f"g_{params.n}: {len(g)} terms, degrees {g.degrees()}, built in {time.perf_counter() - started:.2f} s", file=out)
    if params.n == 5:
        print(f"exceptional x-coordinates: {len(params.exceptional)}", file=out)
    orders = params.orders
    if orders is None:
        print("group orders: unknown (supply --order-base for large q)", file=out)
    else:
        base, ext, tz = orders
        if params.order_base is None:
            params.order_base = base
        prime = "prime" if is_prime(tz) else "composite"
        print(f"|E(F_q)| = {base}", file=out)
        print(f"|E(F_q^{params.n})| = {ext}", file=out)
        print(f"|T_{params.n}| = {tz} ({prime}, {tz.bit_length()} bits)", file=out)
    if args.output:
        Path(args.output).write_text(json.dumps(params.to_dict(), indent=2) + "\n")
        print(f"wrote {args.output}", file=out)
    else:
        print(json.dumps(params.to_dict()), file=out)
    return 0


def _random_curve(q: int, rng: random.Random) -> tuple[int, int]:
    while True:
        A, B = rng.randrange(q), rng.randrange(q)
        if (4 * A**3 + 27 * B * B) % q:
            return A, B


# -- compress / decompress ---------------------------------------------------------


def cmd_compress(args, out) -> int:
    params = load_params(args.params)
    curve = params.curve
    if args.random:
        P = curve.random_trace_zero_point(random.Random(args.seed))
        print(f"point: {curve.to_text(P)}", file=out)
    elif args.x is not None:
        P = _lift(params, args.x)
    elif args.point is None:
        raise UsageError("give a point, --x or --random")
    else:
        P = curve.from_text(args.point)
    c = compress(params, P, args.variant, check=not args.no_check)
    print(c.to_bytes(params).hex() if args.binary else c.to_text(), file=out)
    return 0


def _lift(params: TraceZeroParams, text: str):
    try:
        x = [int(v) for v in text.strip("[]() ").split(",")]
    except ValueError as exc:
        raise InvalidInput(f"cannot parse x-coordinate {text!r}") from exc
    if len(x) != params.n:
        raise InvalidInput(f"expected {params.n} coordinates, got {len(x)}")
    lifts = params.curve.lift_x(params.ext(x).coords)
    if not lifts:
        raise InvalidInput("x is not the x-coordinate of a point over F_q^n")
    return lifts[0]


def cmd_decompress(args, out) -> int:
    params = load_params(args.params)
    if args.binary:
        try:
            data = bytes.fromhex(args.vector)
        except ValueError as exc:
            raise InvalidInput(f"not a hex string: {exc}") from exc
        c = CompressedPoint.from_bytes(data, params)
    else:
        c = CompressedPoint.from_text(args.vector, args.variant)
    classes = decompress(params, c)
    curve = params.curve
    print(f"{len(classes)} class{'es' if len(classes) != 1 else ''}", file=out)
    for cls in classes:
        print(f"point: {curve.to_text(cls.canonical)}", file=out)
        for x in cls.x_coordinates:
            print(f"  x: [{', '.join(map(str, x))}]", file=out)
    return 0


# -- bench -------------------------------------------------------------------------


def bench(params: TraceZeroParams, points: int, variants=("S", "T"), ops=("compress", "decompress"),
          seed: int = 0, warmup: int = 10) -> list[tuple[str, str, float]]:
    """Mean milliseconds per point for each (operation, variant)."""
    rng = random.Random(seed)
    sample = [params.curve.random_trace_zero_point(rng) for _ in range(points)]
    params.g  # build outside the timed region
    if params.n == 5:
        params.exceptional
    rows = []
    for variant in variants:
        compressed = [compress(params, P, variant, check=False) for P in sample]
        for op in ops:
            if op == "compress":
                def run(i, v=variant):
                    compress(params, sample[i], v, check=False)
            else:
                def run(i):
                    try:
                        decompress(params, compressed[i])
                    except TraceZeroError:
                        pass
            for i in range(min(warmup, points)):
                run(i)
            start = time.perf_counter()
            for i in range(points):
                run(i)
            rows.append((op, variant, 1000 * (time.perf_counter() - start) / points))
    return rows


def cmd_bench(args, out) -> int:
    params = load_params(args.params)
    variants = [args.variant] if args.variant else ["S", "T"]
    ops = [args.op] if args.op != "both" else ["compress", "decompress"]
    rows = bench(params, args.points, variants, ops, seed=args.seed)
    print(f"n = {params.n}, q = {params.q} ({params.q.bit_length()} bits), {args.points} points", file=out)
    print(f"{'operation':<12}{'variant':<9}{'ms/point':>12}", file=out)
    for op, variant, ms in rows:
        print(f"{op:<12}{variant:<9}{ms:>12.4f}", file=out)
    if args.profile:
        from .profiling import root_extraction_share

        share = root_extraction_share(params, min(args.points, 200), seed=args.seed)
        print(f"root extraction share of decompression time: {100 * share:.1f}%", file=out)
    return 0


# -- selftest and equations ---------------------------------------------------------


def cmd_selftest(args, out) -> int:
    from . import selftest

    if args.params:
        params = load_params(args.params)
        if params.q > args.max_q:
            raise InvalidInput(f"q = {params.q} exceeds the self-test bound {args.max_q} (raise --max-q)")
        checks = selftest.run(params)
    else:
        checks = selftest.run_default(args.max_q)
    failed = 0
    for check in checks:
        print(check.line(), file=out)
        if not check.passed:
            failed += 1
            for example in check.counterexamples:
                print(f"    counterexample: {example}", file=out)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=out)
    return 0 if not failed else 2


def cmd_dump_equations(args, out) -> int:
    params = load_params(args.params)
    n, F = params.n, params.base
    zs = [f"z{i + 1}" for i in range(n)]
    xs = [f"x{i}" for i in range(n)]
    ss = [f"s{i + 1}" for i in range(n)]
    if args.which == "f":
        print(f"f_{n}({', '.join(zs)}) =", semaev(n, params.A, params.B, F).to_text(zs), file=out)
    elif args.which == "g":
        print(f"g_{n}({', '.join(ss)}) =", params.g.to_text(ss), file=out)
    elif args.which == "e":
        for i, e in enumerate(restricted_symmetric_functions(n, params.mu, F)):
            print(f"s{i + 1} =", e.to_text(xs), file=out)
    else:
        if n != 3:
            raise InvalidInput("the restricted summation equation is only printed for n = 3")
        print("f3~(x0, x1, x2) =", weil_restrict_f3(params.A, params.B, params.mu, F).to_text(xs), file=out)
    return 0


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tracezero", description="Compression of trace zero points on elliptic curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("setup", help="validate parameters, build g_n and write a parameter file")
    s.add_argument("-q", type=int, required=True, help="prime field size")
    s.add_argument("-n", type=int, required=True, choices=(3, 5))
    s.add_argument("-A", type=int)
    s.add_argument("-B", type=int)
    s.add_argument("--mu", type=int, help="Kummer constant (default: smallest non n-th power)")
    s.add_argument("--order-base", type=int, help="known |E(F_q)|, needed for large q")
    s.add_argument("--random-curve", action="store_true", help="draw A and B at random")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output", help="parameter file to write")
    s.set_defaults(func=cmd_setup)

    c = sub.add_parser("compress", help="compress a point of T_n")
    c.add_argument("params")
    c.add_argument("point", nargs="?", help='"([x0, ..], [y0, ..])"')
    c.add_argument("--x", help="x-coordinate only; either lift gives the same output")
    c.add_argument("--random", action="store_true", help="compress a random point of T_n")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--variant", type=_variant, default="S")
    c.add_argument("--binary", action="store_true", help="print the binary encoding as hex")
    c.add_argument("--no-check", action="store_true", help="skip the trace zero membership test")
    c.set_defaults(func=cmd_compress)

    d = sub.add_parser("decompress", help="recover the point classes of a compressed vector")
    d.add_argument("params")
    d.add_argument("vector", help='"c1,c2,..." or, with --binary, hex bytes')
    d.add_argument("--variant", type=_variant, default="S")
    d.add_argument("--binary", action="store_true")
    d.set_defaults(func=cmd_decompress)

    b = sub.add_parser("bench", help="mean time per point for compression and decompression")
    b.add_argument("params")
    b.add_argument("--points", type=int, default=1000)
    b.add_argument("--variant", type=_variant)
    b.add_argument("--op", choices=("compress", "decompress", "both"), default="both")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--profile", action="store_true", help="also report the root extraction share of decompression")
    b.set_defaults(func=cmd_bench)

    t = sub.add_parser("selftest", help="compare against brute-force oracles on small fields")
    t.add_argument("params", nargs="?", help="parameter file (default: built-in small suite)")
    t.add_argument("--max-q", type=int, default=31)
    t.set_defaults(func=cmd_selftest)

    e = sub.add_parser("dump-equations", help="print f_n, g_n, the restricted s_i or the restricted f_3")
    e.add_argument("params")
    e.add_argument("--which", choices=("f", "g", "e", "f3"), default="g")
    e.set_defaults(func=cmd_dump_equations)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except TraceZeroError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
