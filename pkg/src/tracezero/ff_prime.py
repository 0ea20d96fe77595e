"""Arithmetic in a prime field F_q.

Elements are handled in two ways.  The hot paths of the package work on
plain Python integers in ``[0, q)`` through the methods of
:class:`PrimeField`; the :class:`FieldElement` wrapper adds operator
overloading for interactive use and for the public API.

    >>> F = PrimeField(7)
    >>> F(3).inv()
    FieldElement(5, q=7)
    >>> F.sqrt(2)
    (3, 4)
"""

from __future__ import annotations

from random import Random

import gmpy2

from .errors import DivisionByZero, InvalidInput, InvalidParameters


def _valuation(m: int, r: int) -> tuple[int, int]:
    """Return ``(e, u)`` with ``m = r**e * u`` and ``r`` not dividing ``u``."""
    e = 0
    while m % r == 0:
        m //= r
        e += 1
    return e, m


class PrimeField:
    """The field of integers modulo an odd prime ``q > 3``."""

    def __init__(self, q: int):
        q = int(q)
        if q <= 3 or not gmpy2.is_prime(q):
            raise InvalidParameters(f"q = {q} is not a prime larger than 3")
        self.p = q
        self.order = q
        self.characteristic = q
        self.zero = 0
        self.one = 1
        self.byte_length = (q.bit_length() + 7) // 8
        self._nonresidues: dict[int, int] = {}

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            self._check(value)
            return value
        return FieldElement(int(value) % self.p, self)

    def _check(self, element: FieldElement):
        if element.field.p != self.p:
            raise InvalidInput("field elements have different moduli")

    # -- integer-level arithmetic ------------------------------------------

    def from_int(self, k: int) -> int:
        return k % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def sqr(self, a: int) -> int:
        return a * a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero in F_q")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def pow(self, a: int, e: int) -> int:
        return pow(a, e, self.p)

    def random(self, rng: Random) -> int:
        return rng.randrange(self.p)

    def elements(self):
        return range(self.p)

    # -- residuosity and roots ----------------------------------------------

    def legendre(self, a: int) -> int:
        a %= self.p
        if a == 0:
            return 0
        return 1 if pow(a, (self.p - 1) // 2, self.p) == 1 else -1

    def is_square(self, a: int) -> bool:
        return self.legendre(a) >= 0

    def is_nth_power(self, a: int, n: int) -> bool:
        a %= self.p
        if a == 0:
            raise InvalidInput("is_nth_power is undefined for 0")
        if (self.p - 1) % n:
            raise InvalidInput(f"{n} does not divide q - 1")
        return pow(a, (self.p - 1) // n, self.p) == 1

    def nonresidue(self, r: int) -> int:
        """Smallest ``z >= 2`` that is not an ``r``-th power (``r | q - 1``)."""
        if r not in self._nonresidues:
            z = 2
            while pow(z, (self.p - 1) // r, self.p) == 1:
                z += 1
            self._nonresidues[r] = z
        return self._nonresidues[r]

    def _sylow(self, r: int) -> tuple[int, int, int]:
        """Exponent ``e``, cofactor ``u`` and a generator of the ``r``-Sylow subgroup."""
        e, u = _valuation(self.p - 1, r)
        return e, u, pow(self.nonresidue(r), u, self.p)

    def _sylow_log(self, h: int, g: int, r: int, e: int) -> int:
        # digit-by-digit discrete log in the cyclic group of order r**e
        q = self.p
        gamma = pow(g, r ** (e - 1), q)
        table = {pow(gamma, d, q): d for d in range(r)}
        g_inv = pow(g, -1, q)
        log = 0
        for i in range(e):
            t = pow(h * pow(g_inv, log, q) % q, r ** (e - 1 - i), q)
            log += table[t] * r**i
        return log

    def prime_root(self, a: int, r: int) -> int | None:
        """One ``r``-th root of ``a`` for a prime ``r``, or ``None``.

        Uses exponentiation when ``gcd(r, q - 1) = 1`` and an
        Adleman-Manders-Miller style correction in the ``r``-Sylow subgroup
        otherwise (``r = 2`` is Tonelli-Shanks).
        """
        q = self.p
        a %= q
        if a == 0:
            return 0
        if (q - 1) % r:
            return pow(a, pow(r, -1, q - 1), q)
        if pow(a, (q - 1) // r, q) != 1:
            return None
        e, u, g = self._sylow(r)
        k = pow(r, -1, u) if u > 1 else 0
        x = pow(a, k, q)
        eps = pow(x, r, q) * pow(a, -1, q) % q
        log = self._sylow_log(eps, g, r, e)
        y = pow(g, (-(log // r)) % r**e, q)
        return x * y % q

    def roots_of_unity(self, r: int) -> list[int]:
        if (self.p - 1) % r:
            return [1]
        e, _, g = self._sylow(r)
        w = pow(g, r ** (e - 1), self.p)
        return sorted(pow(w, i, self.p) for i in range(r))

    def nth_roots(self, a: int, r: int) -> tuple[int, ...]:
        """All ``r``-th roots of ``a`` in F_q, sorted (``r`` prime)."""
        root = self.prime_root(a, r)
        if root is None:
            return ()
        return tuple(sorted({root * w % self.p for w in self.roots_of_unity(r)}))

    def sqrt(self, a: int) -> tuple[int, ...]:
        """Square roots of ``a`` as a sorted tuple: ``()``, ``(0,)`` or ``(r, q - r)``."""
        return self.nth_roots(a, 2)

    def cbrt_all(self, a: int) -> tuple[int, ...]:
        return self.nth_roots(a, 3)

    # -- serialization --------------------------------------------------------

    def to_bytes(self, a: int) -> bytes:
        return int(a).to_bytes(self.byte_length, "big")

    def from_bytes(self, data: bytes) -> int:
        if len(data) != self.byte_length:
            raise InvalidInput(f"expected {self.byte_length} bytes, got {len(data)}")
        value = int.from_bytes(data, "big")
        if value >= self.p:
            raise InvalidInput("encoded value is not reduced modulo q")
        return value


class FieldElement:
    """An element of F_q with operator overloading."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            self.field._check(other)
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def _wrap(self, value: int) -> FieldElement:
        return FieldElement(value, self.field)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.value + b)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.value - b)

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(b - self.value)

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.value * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.div(b, self.value))

    def __neg__(self):
        return self._wrap(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return self._wrap(pow(self.value, e, self.field.p))

    def inv(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def sqrt(self) -> tuple[FieldElement, ...]:
        return tuple(self._wrap(r) for r in self.field.sqrt(self.value))

    def cbrt_all(self) -> tuple[FieldElement, ...]:
        return tuple(self._wrap(r) for r in self.field.cbrt_all(self.value))

    def is_nth_power(self, n: int) -> bool:
        return self.field.is_nth_power(self.value, n)

    def to_bytes(self) -> bytes:
        return self.field.to_bytes(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"FieldElement({self.value}, q={self.field.p})"
