"""Exact elements of Q and of quadratic fields Q(sqrt d).

A :class:`QuadNumber` is ``a + b*sqrt(d)`` with rational ``a, b`` and a
squarefree integer ``d``.  Rationals carry ``d = 0``.  Negative radicands
give imaginary quadratic fields, so ``QuadNumber(0, 1, -1)`` is ``i``.

Arithmetic between two irrational numbers with different radicands raises
:class:`~birfol.errors.FieldTowerMismatch`: a computation is allowed to use
at most one quadratic extension of Q.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

import sympy

from ..errors import FieldTowerExceeded, FieldTowerMismatch

Number = Union[int, Fraction, "QuadNumber"]


@lru_cache(maxsize=4096)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``n == s*s*r``, ``s > 0`` and ``r`` squarefree (sign kept in ``r``)."""
    if n == 0:
        return 0, 0
    s, r = 1, (1 if n > 0 else -1)
    for p, e in sympy.factorint(abs(n)).items():
        s *= p ** (e // 2)
        if e % 2:
            r *= p
    return s, r


def is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    num, den = q.numerator, q.denominator
    return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den


def rational_sqrt(q: Fraction) -> Fraction:
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


def _common_radicand(d1: int, d2: int) -> int:
    if d1 == 0:
        return d2
    if d2 == 0 or d1 == d2:
        return d1
    raise FieldTowerMismatch(f"cannot combine Q(sqrt({d1})) with Q(sqrt({d2}))")


class QuadNumber:
    """Immutable ``a + b*sqrt(d)``."""

    __slots__ = ("a", "b", "d")

    a: Fraction
    b: Fraction
    d: int

    def __init__(self, a: int | Fraction | str = 0, b: int | Fraction | str = 0, d: int = 0) -> None:
        a, b, d = Fraction(a), Fraction(b), int(d)
        if b != 0 and d not in (0, 1):
            s, r = squarefree_split(d)
            b, d = b * s, r
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if b == 0 or d == 0:
            b, d = Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadNumber is immutable")

    def __reduce__(self):
        return (QuadNumber, (self.a, self.b, self.d))

    # -- construction -------------------------------------------------
    @classmethod
    def coerce(cls, x: Number) -> QuadNumber:
        if isinstance(x, QuadNumber):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return cls(Fraction(x))
        if isinstance(x, str):
            from ..parse import parse_number

            return parse_number(x)
        raise TypeError(f"cannot interpret {x!r} as an exact number")

    @classmethod
    def sqrt_of(cls, q: int | Fraction) -> QuadNumber:
        """Exact square root of a rational number (imaginary for negative input)."""
        q = Fraction(q)
        if q == 0:
            return cls(0)
        # sqrt(n/m) = sqrt(n*m)/m
        s, r = squarefree_split(q.numerator * q.denominator)
        coeff = Fraction(s, q.denominator)
        if r == 1:
            return cls(coeff)
        return cls(0, coeff, r)

    @classmethod
    def from_triple(cls, triple) -> QuadNumber:
        a, b, d = triple
        return cls(Fraction(a), Fraction(b), int(d))

    def to_triple(self) -> tuple[Fraction, Fraction, int]:
        return (self.a, self.b, self.d)

    # -- predicates ---------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.d == 0

    @property
    def is_real(self) -> bool:
        return self.d >= 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_positive_rational(self) -> bool:
        return self.d == 0 and self.a > 0

    def as_fraction(self) -> Fraction:
        if self.d != 0:
            raise ValueError(f"{self} is not rational")
        return self.a

    # -- field operations ---------------------------------------------
    def conj(self) -> QuadNumber:
        """Galois conjugate ``a - b*sqrt(d)``."""
        return QuadNumber(self.a, -self.b, self.d)

    def cconj(self) -> QuadNumber:
        """Complex conjugate; the identity on real numbers."""
        return self.conj() if self.d < 0 else self

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def abs_sq(self) -> QuadNumber:
        """Exact squared modulus ``|z|^2``."""
        if self.d < 0:
            return QuadNumber(self.norm())
        return self * self

    def __add__(self, other: Number) -> QuadNumber:
        if not isinstance(other, QuadNumber):
            if isinstance(other, (int, Fraction)):
                return QuadNumber(self.a + other, self.b, self.d)
            return NotImplemented
        d = _common_radicand(self.d, other.d)
        return QuadNumber(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self) -> QuadNumber:
        return QuadNumber(-self.a, -self.b, self.d)

    def __pos__(self) -> QuadNumber:
        return self

    def __sub__(self, other: Number) -> QuadNumber:
        if not isinstance(other, (QuadNumber, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> QuadNumber:
        return (-self) + other

    def __mul__(self, other: Number) -> QuadNumber:
        if not isinstance(other, QuadNumber):
            if isinstance(other, (int, Fraction)):
                return QuadNumber(self.a * other, self.b * other, self.d)
            return NotImplemented
        d = _common_radicand(self.d, other.d)
        return QuadNumber(
            self.a * other.a + d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in a quadratic field")
        return QuadNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other: Number) -> QuadNumber:
        if not isinstance(other, (QuadNumber, int, Fraction)):
            return NotImplemented
        return self * QuadNumber.coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> QuadNumber:
        return QuadNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> QuadNumber:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QuadNumber(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sqrt(self) -> QuadNumber:
        """Square root inside the tower.

        Rationals may open a new quadratic field; an irrational element has a
        square root only if it is a square in its own field.
        """
        if self.d == 0:
            return QuadNumber.sqrt_of(self.a)
        # (x + y sqrt d)^2 = a + b sqrt d  <=>  x^2 + d y^2 = a, 2xy = b
        n = self.norm()
        if is_rational_square(n):
            c = rational_sqrt(n)
            for x2 in ((self.a + c) / 2, (self.a - c) / 2):
                if x2 != 0 and is_rational_square(x2):
                    x = rational_sqrt(x2)
                    return QuadNumber(x, self.b / (2 * x), self.d)
        raise FieldTowerExceeded(f"sqrt({self}) is not in Q(sqrt({self.d}))")

    # -- comparison ---------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadNumber):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.d == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.d == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        """Sign of a real number, decided exactly."""
        if self.d < 0:
            raise TypeError(f"{self} is not real")
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def __lt__(self, other: Number) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Number) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Number) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Number) -> bool:
        return (self - other).sign() >= 0

    def __abs__(self) -> QuadNumber:
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        if self.d < 0:
            raise TypeError(f"{self} is not real")
        n = math.floor(float(self))
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def modulus_cmp_one(self) -> int:
        """Compare ``|self|`` with 1 exactly; returns -1, 0 or 1."""
        return (self.abs_sq() - 1).sign()

    # -- display ------------------------------------------------------
    def __float__(self) -> float:
        if self.d < 0:
            raise TypeError(f"{self} is not real")
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __complex__(self) -> complex:
        if self.d < 0:
            return complex(float(self.a), float(self.b) * math.sqrt(-self.d))
        return complex(float(self))

    def decimal(self, digits: int = 6) -> str:
        if self.d < 0:
            z = complex(self)
            return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"
        return f"{float(self):.{digits}g}"

    def __str__(self) -> str:
        if self.d == 0:
            return str(self.a)
        head = "" if self.a == 0 else f"{self.a}"
        if self.b == 1:
            tail = f"sqrt({self.d})"
        elif self.b == -1:
            tail = f"-sqrt({self.d})"
        else:
            tail = f"{self.b}*sqrt({self.d})"
        if head and not tail.startswith("-"):
            tail = "+" + tail
        return head + tail

    def __repr__(self) -> str:
        return f"QuadNumber({str(self.a)!r}, {str(self.b)!r}, {self.d})"

    def needs_parens(self) -> bool:
        return (self.d != 0 and self.a != 0) or (self.d == 0 and self.a.denominator != 1)


def Q(x: Number) -> QuadNumber:
    """Shorthand coercion used throughout the package."""
    return QuadNumber.coerce(x)


def radicand_of(values) -> int:
    """Common radicand of an iterable of numbers (0 when all are rational)."""
    d = 0
    for v in values:
        if isinstance(v, QuadNumber):
            d = _common_radicand(d, v.d)
    return d


ZERO = QuadNumber(0)
ONE = QuadNumber(1)
I = QuadNumber(0, 1, -1)
SQRT2 = QuadNumber(0, 1, 2)
# primitive cube root of unity (-1 + sqrt(-3))/2
J = QuadNumber(Fraction(-1, 2), Fraction(1, 2), -3)
