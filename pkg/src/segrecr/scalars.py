"""Exact scalars: arbitrary-precision rationals and prime-field residues.

Rationals are plain ``fractions.Fraction`` (always reduced, positive
denominator). Prime fields are wrapped in :class:`Fp` elements; the modulus
must be a prime >= 7 because characteristics 2, 3 and 5 interact badly with
the degree-3 and degree-4 forms and the +-1 node coordinates handled here.
"""

from __future__ import annotations

import math
from fractions import Fraction


class ScalarDomainError(ValueError):
    """Raised when scalars from incompatible domains are combined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin, valid far beyond any modulus used here
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_VALIDATED_MODULI: set[int] = set()


def check_modulus(p: int) -> int:
    if p not in _VALIDATED_MODULI:
        if p < 7 or not is_prime(p):
            raise ScalarDomainError(f"modulus must be a prime >= 7, got {p}")
        _VALIDATED_MODULI.add(p)
    return p


class Fp:
    """Residue in the prime field F_p, p a validated prime >= 7."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        check_modulus(p)
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ScalarDomainError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        if isinstance(other, Fraction):
            return Fp(other.numerator, self.p) / Fp(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return Fp(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, Fraction):
            return other.denominator % self.p != 0 and self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def is_square(self) -> bool:
        if self.value == 0:
            return True
        return pow(self.value, (self.p - 1) // 2, self.p) == 1

    def sqrt(self) -> "Fp | None":
        """A square root in F_p, or None. Moduli here are small; scan suffices."""
        if self.value == 0:
            return Fp(0, self.p)
        if not self.is_square():
            return None
        for t in range(1, self.p):
            if t * t % self.p == self.value:
                return Fp(t, self.p)
        return None

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def scalar_inverse(c):
    """Multiplicative inverse for either coefficient domain."""
    if isinstance(c, Fp):
        return c.inverse()
    return Fraction(1) / Fraction(c)


def scalar_is_zero(c) -> bool:
    if isinstance(c, Fp):
        return c.value == 0
    return c == 0


def rational_is_square(c: Fraction) -> bool:
    c = Fraction(c)
    if c < 0:
        return False
    return _is_perfect_square(c.numerator) and _is_perfect_square(c.denominator)


def rational_sqrt(c: Fraction) -> Fraction | None:
    c = Fraction(c)
    if c < 0:
        return None
    n, d = _isqrt_exact(c.numerator), _isqrt_exact(c.denominator)
    if n is None or d is None:
        return None
    return Fraction(n, d)


def _is_perfect_square(n: int) -> bool:
    return _isqrt_exact(n) is not None


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None
