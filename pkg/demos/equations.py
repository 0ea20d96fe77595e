"""The polynomial machinery behind decompression, on a small field.

Builds the third summation polynomial, rewrites it in elementary symmetric
functions, restricts it to F_q coordinates, and checks the result against
the points of T_3.

Run: python demos/equations.py
"""

from tracezero import (
    INFINITY,
    PrimeField,
    TraceZeroParams,
    restricted_symmetric_functions,
    semaev,
    symmetrize,
    weil_restrict_f3,
)

q, A, B, mu = 13, 1, 1, 2
F = PrimeField(q)

f3 = semaev(3, A, B, F)
print(f"f_3 over F_{q} has {len(f3)} terms")
print("g_3(s1, s2, s3) =", symmetrize(f3).to_text(["s1", "s2", "s3"]))

print(f"\nWith F_{q}^3 = F_{q}[zeta]/(zeta^3 - {mu}) and x = x0 + x1 zeta + x2 zeta^2:")
for i, s in enumerate(restricted_symmetric_functions(3, mu, F)):
    print(f"  s{i + 1} =", s.to_text(["x0", "x1", "x2"]))

restricted = weil_restrict_f3(A, B, mu, F)
print(f"\nrestricted f_3 has {len(restricted)} terms")

params = TraceZeroParams(q, 3, A, B, mu=mu)
xs = {P[0] for P in params.curve.points() if P is not INFINITY and params.curve.in_trace_zero(P)}
print(f"it vanishes on all {len(xs)} x-coordinates of T_3:", all(restricted.evaluate(x) == 0 for x in xs))
