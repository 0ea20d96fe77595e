"""How often does an n = 5 compressed vector stand for more than one class?

Draws random points of T_5 on a 40-bit curve, compresses and decompresses
each, and tallies the number of classes returned.

Run: python demos/ambiguity_n5.py [points]
"""

import random
import sys
import time
from collections import Counter

from tracezero import TraceZeroParams, compress, decompress

points = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
params = TraceZeroParams(1099511640131, 5, A=3, B=7)

start = time.perf_counter()
g = params.g
print(f"g_5 over a 40-bit field: {len(g)} terms, degrees {g.degrees()} ({time.perf_counter() - start:.2f} s)")
print(f"exceptional x-coordinates on this curve: {len(params.exceptional)}")

rng = random.Random(5)
counts = Counter()
start = time.perf_counter()
for _ in range(points):
    P = params.curve.random_trace_zero_point(rng)
    classes = decompress(params, compress(params, P))
    assert any(P in cls for cls in classes)
    counts[len(classes)] += 1
elapsed = time.perf_counter() - start

print(f"\n{points} points, {1000 * elapsed / points:.2f} ms per decompression")
for k in sorted(counts):
    print(f"  {k} class{'es' if k > 1 else '  '}: {counts[k]:6d}  ({100 * counts[k] / points:.1f}%)")
