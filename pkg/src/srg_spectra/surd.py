"""Exact real numbers of the form ``a + b*sqrt(d)`` with rational ``a``, ``b``.

Non-principal eigenvalues of a strongly regular graph are roots of
``x^2 - (lambda - mu) x - (k - mu)``, so they always live in one such
quadratic field.  Floats cannot tell an integral eigenvalue from a
conference-graph surd, hence this small class.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

import mpmath

__all__ = ["Surd", "is_square", "squarefree_part"]


def squarefree_part(n: int) -> tuple[int, int]:
    """Split ``n >= 0`` as ``c*c*d`` with ``d`` squarefree; return ``(c, d)``."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 1
    c, d = 1, n
    p = 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            c *= p
        p += 1
    return c, d


class Surd:
    """``a + b*sqrt(d)``; ``d`` is 1 whenever the value is rational."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 1):
        a, b = Fraction(a), Fraction(b)
        c, d = squarefree_part(int(d))
        b *= c
        if d == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            d = 1
        self.a, self.b, self.d = a, b, d

    @classmethod
    def _make(cls, a: Fraction, b: Fraction, d: int) -> "Surd":
        # d is already squarefree (or 1)
        obj = cls.__new__(cls)
        if b == 0:
            d = 1
        obj.a, obj.b, obj.d = a, b, d
        return obj

    @classmethod
    def sqrt(cls, n) -> "Surd":
        """Exact square root of a non-negative rational."""
        n = Fraction(n)
        if n < 0:
            raise ValueError("square root of a negative number")
        # sqrt(p/q) = sqrt(p*q)/q
        return cls(0, Fraction(1, n.denominator), n.numerator * n.denominator)

    # -- coercion -------------------------------------------------------
    def _coerce(self, other) -> "Surd":
        if isinstance(other, Surd):
            if other.d != self.d and self.d != 1 and other.d != 1:
                raise ValueError(f"mixed radicands sqrt({self.d}) and sqrt({other.d})")
            return other
        if isinstance(other, (int, Rational)):
            return Surd._make(Fraction(other), Fraction(0), 1)
        return NotImplemented

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def conjugate(self) -> "Surd":
        return Surd._make(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """``self * conjugate`` (a rational)."""
        return self.a * self.a - self.b * self.b * self.d

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.d if self.d != 1 else o.d
        return Surd._make(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Surd._make(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.d if self.d != 1 else o.d
        return Surd._make(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero surd")
        return self * Surd._make(o.a / n, -o.b / n, o.d)

    def __rtruediv__(self, other):
        return Surd(other) / self

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        result, base = Surd._make(Fraction(1), Fraction(0), 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- ordering -------------------------------------------------------
    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with b^2 d
        lhs, rhs = self.a * self.a, self.b * self.b * self.d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def _cmp(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign()

    def __eq__(self, other):
        c = self._cmp(other) if isinstance(other, (Surd, int, Rational)) else NotImplemented
        if c is NotImplemented:
            return c
        return c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    # -- conversion -----------------------------------------------------
    def __float__(self):
        if self.b == 0:
            return float(self.a)
        return float(self.mpf(30))

    def __int__(self):
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return int(self.a)

    def mpf(self, dps: int = 50):
        """High-precision value as an ``mpmath.mpf``."""
        with mpmath.workdps(dps):
            a = mpmath.mpf(self.a.numerator) / self.a.denominator
            if self.b == 0:
                return +a
            b = mpmath.mpf(self.b.numerator) / self.b.denominator
            return a + b * mpmath.sqrt(self.d)

    def __repr__(self):
        return f"Surd({self.a!s}, {self.b!s}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        q = self.a.denominator * self.b.denominator // gcd(self.a.denominator, self.b.denominator)
        p1, p2 = self.a * q, self.b * q
        rad = f"sqrt({self.d})" if abs(p2) == 1 else f"{abs(p2)}*sqrt({self.d})"
        body = f"{p1}{'+' if p2 > 0 else '-'}{rad}" if p1 else (rad if p2 > 0 else f"-{rad}")
        return body if q == 1 else f"({body})/{q}"


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
