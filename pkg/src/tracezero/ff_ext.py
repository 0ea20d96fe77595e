"""The Kummer extension F_{q^n} = F_q[zeta]/(zeta^n - mu) for n | q - 1.

Native elements are tuples ``(x_0, ..., x_{n-1})`` of integers, the
coordinates with respect to the power basis ``1, zeta, ..., zeta^{n-1}``.
Since ``zeta^q = mu^b zeta`` with ``b = (q - 1)/n``, the Frobenius acts
diagonally on that basis: coordinate ``j`` of ``x^{q^i}`` is
``lam^{ij} x_j`` where ``lam = mu^b`` is a primitive n-th root of unity.
"""

from __future__ import annotations

import itertools
from random import Random

from .errors import DivisionByZero, InvalidInput, InvalidParameters
from .ff_prime import FieldElement, PrimeField

SUPPORTED_DEGREES = (2, 3, 5)


def select_mu(field: PrimeField, n: int) -> int:
    """Smallest integer ``>= 2`` that is not an n-th power in F_q."""
    if (field.p - 1) % n:
        raise InvalidParameters(f"n = {n} does not divide q - 1 = {field.p - 1}")
    return field.nonresidue(n)


class KummerField:
    """Arithmetic in F_q[zeta]/(zeta^n - mu)."""

    def __init__(self, base: PrimeField, n: int, mu: int | None = None):
        if n not in SUPPORTED_DEGREES:
            raise InvalidParameters(f"extension degree must be one of {SUPPORTED_DEGREES}")
        q = base.p
        if (q - 1) % n:
            raise InvalidParameters(f"n = {n} does not divide q - 1; only the Kummer case is supported")
        if mu is None:
            mu = select_mu(base, n)
        mu %= q
        if mu == 0 or base.is_nth_power(mu, n):
            raise InvalidParameters(f"mu = {mu} is an {n}-th power in F_{q}; zeta^{n} - mu is reducible")
        self.base = base
        self.p = q
        self.n = n
        self.mu = mu
        self.b = (q - 1) // n
        self.order = q**n
        self.characteristic = q
        self.zero = (0,) * n
        self.one = (1,) + (0,) * (n - 1)
        self.byte_length = n * base.byte_length
        self.lam = pow(mu, self.b, q)
        # twists[i][j] = mu^(j*b*i) = lam^(i*j mod n)
        self.twists = tuple(
            tuple(pow(self.lam, (i * j) % n, q) for j in range(n)) for i in range(n)
        )
        if pow(self.lam, n, q) != 1 or self.lam == 1:
            raise InvalidParameters("mu^b must be a primitive n-th root of unity")

    def __repr__(self):
        return f"KummerField(q={self.p}, n={self.n}, mu={self.mu})"

    def __eq__(self, other):
        return (
            isinstance(other, KummerField)
            and (other.p, other.n, other.mu) == (self.p, self.n, self.mu)
        )

    def __hash__(self):
        return hash(("KummerField", self.p, self.n, self.mu))

    def __call__(self, coords) -> ExtElement:
        if isinstance(coords, ExtElement):
            return coords
        if isinstance(coords, int):
            return ExtElement(self.embed(coords), self)
        coords = tuple(int(c) % self.p for c in coords)
        if len(coords) != self.n:
            raise InvalidInput(f"expected {self.n} coordinates, got {len(coords)}")
        return ExtElement(coords, self)

    @property
    def zeta(self) -> ExtElement:
        return ExtElement((0, 1) + (0,) * (self.n - 2), self)

    # -- native arithmetic --------------------------------------------------

    def embed(self, k: int) -> tuple:
        return (k % self.p,) + (0,) * (self.n - 1)

    from_int = embed

    def is_base(self, a: tuple) -> bool:
        return not any(a[1:])

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def scale(self, a, k: int):
        p = self.p
        return tuple(x * k % p for x in a)

    def mul(self, a, b):
        if self.n == 5:
            return self._mul5(a, b)
        if self.n == 3:
            return self._mul3(a, b)
        n, p = self.n, self.p
        c = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    c[i + j] += ai * bj
        mu = self.mu
        return tuple((c[k] + mu * c[k + n]) % p for k in range(n - 1)) + (c[n - 1] % p,)

    def _mul3(self, a, b):
        p, mu = self.p, self.mu
        a0, a1, a2 = a
        b0, b1, b2 = b
        return (
            (a0 * b0 + mu * (a1 * b2 + a2 * b1)) % p,
            (a0 * b1 + a1 * b0 + mu * a2 * b2) % p,
            (a0 * b2 + a1 * b1 + a2 * b0) % p,
        )

    def _mul5(self, a, b):
        p, mu = self.p, self.mu
        a0, a1, a2, a3, a4 = a
        b0, b1, b2, b3, b4 = b
        return (
            (a0 * b0 + mu * (a1 * b4 + a2 * b3 + a3 * b2 + a4 * b1)) % p,
            (a0 * b1 + a1 * b0 + mu * (a2 * b4 + a3 * b3 + a4 * b2)) % p,
            (a0 * b2 + a1 * b1 + a2 * b0 + mu * (a3 * b4 + a4 * b3)) % p,
            (a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0 + mu * a4 * b4) % p,
            (a0 * b4 + a1 * b3 + a2 * b2 + a3 * b1 + a4 * b0) % p,
        )

    def sqr(self, a):
        return self.mul(a, a)

    def frobenius(self, a, i: int = 1):
        p = self.p
        return tuple(x * t % p for x, t in zip(a, self.twists[i % self.n]))

    def conjugates(self, a) -> list:
        return [self.frobenius(a, i) for i in range(self.n)]

    def _conjugate_product(self, a):
        c = self.frobenius(a, 1)
        for i in range(2, self.n):
            c = self.mul(c, self.frobenius(a, i))
        return c

    def norm(self, a) -> int:
        c = self._conjugate_product(a)
        return self.mul(a, c)[0]

    def trace(self, a) -> int:
        return self.n * a[0] % self.p

    def inv(self, a):
        c = self._conjugate_product(a)
        nrm = self.mul(a, c)[0]
        if nrm == 0:
            raise DivisionByZero("inverse of zero in F_{q^n}")
        return self.scale(c, pow(nrm, -1, self.p))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        for bit in bin(e)[2:]:
            result = self.mul(result, result)
            if bit == "1":
                result = self.mul(result, a)
        return result

    def random(self, rng: Random):
        return tuple(rng.randrange(self.p) for _ in range(self.n))

    def elements(self):
        return itertools.product(range(self.p), repeat=self.n)

    # -- squares --------------------------------------------------------------

    def is_square(self, a) -> bool:
        # a^((q^n - 1)/2) = N(a)^((q - 1)/2)
        return self.base.legendre(self.norm(a)) >= 0

    def sqrt(self, a) -> tuple:
        """Square roots of ``a`` as a sorted tuple (empty for non-squares)."""
        if not any(a):
            return (self.zero,)
        nrm = self.norm(a)
        roots = self.base.sqrt(nrm)
        if not roots:
            return ()
        if self.n % 2 == 1:
            # a^((u-1)/2) for u = 1 + q + ... + q^(n-1), built from Frobenius
            # images of a^((q+1)/2); then (a * a^((u-1)/2))^2 = N(a) * a.
            w = self.pow(a, (self.p + 1) // 2)
            t = self.frobenius(w, 1)
            for j in range(1, (self.n - 1) // 2):
                t = self.mul(t, self.frobenius(w, 2 * j + 1))
            r = self.scale(self.mul(a, t), pow(roots[0], -1, self.p))
        else:
            r = self._tonelli_shanks(a)
        if self.mul(r, r) != tuple(a):
            raise InvalidInput("square root computation failed")
        return tuple(sorted({r, self.neg(r)}))

    def _tonelli_shanks(self, a):
        order = self.order
        s, t = 0, order - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = None
        for cand in itertools.product(range(self.p), repeat=self.n):
            if any(cand) and not self.is_square(cand):
                z = cand
                break
        m, c = s, self.pow(z, t)
        x, b = self.pow(a, (t + 1) // 2), self.pow(a, t)
        while b != self.one:
            i, b2 = 0, b
            while b2 != self.one:
                b2, i = self.mul(b2, b2), i + 1
            d = self.pow(c, 1 << (m - i - 1))
            x, c = self.mul(x, d), self.mul(d, d)
            b, m = self.mul(b, c), i
        return x

    # -- serialization --------------------------------------------------------

    def to_bytes(self, a) -> bytes:
        return b"".join(self.base.to_bytes(x) for x in a)

    def from_bytes(self, data: bytes) -> tuple:
        w = self.base.byte_length
        if len(data) != self.byte_length:
            raise InvalidInput(f"expected {self.byte_length} bytes, got {len(data)}")
        return tuple(self.base.from_bytes(data[i * w:(i + 1) * w]) for i in range(self.n))


class ExtElement:
    """An element of F_{q^n} with operator overloading."""

    __slots__ = ("coords", "field")

    def __init__(self, coords: tuple, field: KummerField):
        self.coords = tuple(coords)
        self.field = field

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            if other.field != self.field:
                raise InvalidInput("elements belong to different extension fields")
            return other.coords
        if isinstance(other, FieldElement):
            return self.field.embed(other.value)
        if isinstance(other, int):
            return self.field.embed(other)
        return NotImplemented

    def _wrap(self, coords) -> ExtElement:
        return ExtElement(coords, self.field)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.coords, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.coords, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.coords))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.coords, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.coords, b))

    def __neg__(self):
        return self._wrap(self.field.neg(self.coords))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.coords, e))

    def inv(self) -> ExtElement:
        return self._wrap(self.field.inv(self.coords))

    def frobenius(self, i: int = 1) -> ExtElement:
        return self._wrap(self.field.frobenius(self.coords, i))

    def conjugates(self) -> list[ExtElement]:
        return [self._wrap(c) for c in self.field.conjugates(self.coords)]

    def norm(self) -> FieldElement:
        return self.field.base(self.field.norm(self.coords))

    def sqrt(self) -> tuple[ExtElement, ...]:
        return tuple(self._wrap(r) for r in self.field.sqrt(self.coords))

    def to_bytes(self) -> bytes:
        return self.field.to_bytes(self.coords)

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, FieldElement)):
            return self.coords == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __getitem__(self, j):
        return self.coords[j]

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"ExtElement({list(self.coords)}, q={self.field.p}, n={self.field.n}, mu={self.field.mu})"
