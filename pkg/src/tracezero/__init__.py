"""Compression of points in the trace zero subgroup of an elliptic curve.

A point of the trace zero subgroup T_n of E(F_{q^n}) (n = 3 or 5, over a
Kummer extension) is stored as n - 1 elements of F_q; decompression
recovers its class {+-phi^i(P)} from the symmetrized summation polynomial.

    >>> from tracezero import TraceZeroParams, compress, decompress
    >>> params = TraceZeroParams(q=7, n=3, A=1, B=1)
    >>> P = params.curve.random_trace_zero_point(__import__("random").Random(1))
    >>> c = compress(params, P)
    >>> any(P in cls for cls in decompress(params, c))
    True
"""

from .codec import (
    CompressedPoint,
    PointClass,
    TraceZeroParams,
    class_of,
    classes_equal,
    compress,
    decompress,
    symmetric_coords,
)
from .ec import INFINITY, Curve, group_orders, torsion_exceptional_set
from .errors import (
    CannotCompressIdentity,
    DegenerateInput,
    DivisionByZero,
    InternalError,
    InvalidCurve,
    InvalidInput,
    InvalidParameters,
    NotOnCurve,
    NotSymmetric,
    NotTraceZero,
    TraceZeroError,
)
from .ff_ext import ExtElement, KummerField
from .ff_prime import FieldElement, PrimeField
from .multipoly import (
    MultiPoly,
    restricted_symmetric_functions,
    semaev,
    symmetrize,
    symmetrized_semaev,
    weil_restrict_f3,
)
from .unipoly import UniPoly, gcd, kummer_roots, resultant, roots_in_field

__all__ = [
    "CannotCompressIdentity", "CompressedPoint", "Curve", "DegenerateInput", "DivisionByZero",
    "ExtElement", "FieldElement", "INFINITY", "InternalError", "InvalidCurve", "InvalidInput",
    "InvalidParameters", "KummerField", "MultiPoly", "NotOnCurve", "NotSymmetric", "NotTraceZero",
    "PointClass", "PrimeField", "TraceZeroError", "TraceZeroParams", "UniPoly", "class_of",
    "classes_equal", "compress", "decompress", "gcd", "group_orders", "kummer_roots",
    "restricted_symmetric_functions", "resultant", "roots_in_field", "semaev", "symmetric_coords",
    "symmetrize", "symmetrized_semaev", "torsion_exceptional_set", "weil_restrict_f3",
]
