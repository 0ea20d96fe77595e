"""Compress a point of T_3 over a 79-bit field and recover its class.

Run: python demos/roundtrip_n3.py
"""

import random

from tracezero import INFINITY, TraceZeroParams, compress, decompress

q = 2**79 - 67
params = TraceZeroParams(q, 3, A=1, B=368, mu=3, order_base=604462909807248002793550)
base, ext, tz = params.orders
print("E: y^2 = x^3 + x + 368 over F_q, q = 2^79 - 67")
print(f"|T_3| = {tz}, {tz.bit_length()} bits")

P = params.curve.random_trace_zero_point(random.Random(2024))
print("\nA random point of T_3, x-coordinate in the basis 1, zeta, zeta^2:")
print("  x =", list(P[0]))
print("  |T_3| * P is the identity:", params.curve.mul(tz, P) is INFINITY)

for variant in "ST":
    c = compress(params, P, variant)
    print(f"\n{variant}-variant: two field elements, {len(c.to_bytes(params))} bytes")
    print("  ", c.to_text())
    classes = decompress(params, c)
    print(f"   decompresses to {len(classes)} class of {len(classes[0].members)} points")
    print("   the original point is in it:", P in classes[0])
