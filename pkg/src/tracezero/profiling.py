"""Where decompression spends its time.

Root extraction means every square root, cube root and polynomial root
search reached from :func:`decompress`.  Time is read from ``cProfile``:
for each entry point the cumulative time is counted only for calls coming
from outside the set, so nested root finding is not counted twice.
"""

from __future__ import annotations

import cProfile
import pstats
import random

from .codec import TraceZeroParams, compress, decompress
from .errors import DegenerateInput

ROOT_EXTRACTION = {
    ("ff_prime.py", "sqrt"),
    ("ff_prime.py", "cbrt_all"),
    ("ff_prime.py", "nth_roots"),
    ("ff_prime.py", "prime_root"),
    ("ff_ext.py", "sqrt"),
    ("unipoly.py", "roots_in_field"),
    ("unipoly.py", "kummer_roots"),
    ("unipoly.py", "characteristic_root"),
}


def _is_root_function(func) -> bool:
    filename, _, name = func
    return any(filename.endswith("/" + f) and name == n for f, n in ROOT_EXTRACTION)


def root_extraction_share(params: TraceZeroParams, points: int = 200, seed: int = 0, variant: str = "S") -> float:
    """Fraction of profiled decompression time spent extracting roots."""
    rng = random.Random(seed)
    compressed = [compress(params, params.curve.random_trace_zero_point(rng), variant) for _ in range(points)]
    decompress(params, compressed[0])  # builds g_n and its evaluator outside the profile

    def run():
        for c in compressed:
            try:
                decompress(params, c)
            except DegenerateInput:
                pass

    profiler = cProfile.Profile()
    profiler.runcall(run)
    stats = pstats.Stats(profiler).stats
    total = next(ct for func, (_, _, _, ct, _) in stats.items() if func[2] == "run")
    inside = 0.0
    for func, (_, _, _, _, callers) in stats.items():
        if not _is_root_function(func):
            continue
        inside += sum(c[3] for caller, c in callers.items() if not _is_root_function(caller))
    return inside / total
