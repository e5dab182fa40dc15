"""Bivariate rational functions as reduced fractions of :class:`BiPoly`."""

from __future__ import annotations

import re

from fractions import Fraction

from .poly import BiPoly, bi_gcd
from .quad import Number, Q, QuadNumber


class RatFunc:
    """``num / den`` in lowest terms, with ``den`` monic (see :meth:`BiPoly.monic`)."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly | Number, den: BiPoly | Number = 1) -> None:
        num = num if isinstance(num, BiPoly) else BiPoly.const(num)
        den = den if isinstance(den, BiPoly) else BiPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not (num.is_polynomial() and den.is_polynomial()):
            num, den = _clear_monomials(num, den)
        if num.is_zero():
            den = BiPoly.const(1)
        else:
            g = _gcd(num, den)
            if not g.is_constant():
                num, den = num.exact_div(g), den.exact_div(g)
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _reduced(cls, num: BiPoly, den: BiPoly) -> RatFunc:
        """Build from a pair already known to be coprime."""
        r = object.__new__(cls)
        r.num, r.den = _normalize(num, den) if not num.is_zero() else (num, BiPoly.const(1))
        return r

    @classmethod
    def var(cls, index: int) -> RatFunc:
        return cls(BiPoly.var(index))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> QuadNumber:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_term() / self.den.constant_term()

    def __add__(self, other: RatFunc | Number) -> RatFunc:
        o = _as_rat(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        r = object.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other: RatFunc | Number) -> RatFunc:
        return self + (-_as_rat(other))

    def __rsub__(self, other: RatFunc | Number) -> RatFunc:
        return _as_rat(other) - self

    def __mul__(self, other: RatFunc | Number) -> RatFunc:
        o = _as_rat(other)
        if self.is_zero() or o.is_zero():
            return RatFunc(0)
        # cross-cancel so that only small gcds are computed
        g1, g2 = _gcd(self.num, o.den), _gcd(o.num, self.den)
        n1, d2 = (self.num, o.den) if g1.is_constant() else (self.num.exact_div(g1), o.den.exact_div(g1))
        n2, d1 = (o.num, self.den) if g2.is_constant() else (o.num.exact_div(g2), self.den.exact_div(g2))
        return RatFunc._reduced(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: RatFunc | Number) -> RatFunc:
        return self * _as_rat(other).inverse()

    def __rtruediv__(self, other: RatFunc | Number) -> RatFunc:
        return _as_rat(other) * self.inverse()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def diff(self, index: int) -> RatFunc:
        n, d = self.num, self.den
        return RatFunc(n.diff(index) * d - n * d.diff(index), d * d)

    def substitute(self, x: RatFunc, y: RatFunc) -> RatFunc:
        """Compose with ``(x, y)``; both arguments are rational functions."""
        return _eval_poly(self.num, x, y) / _eval_poly(self.den, x, y)

    def __call__(self, x: Number, y: Number) -> QuadNumber:
        return self.num(x, y) / self.den(x, y)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, QuadNumber, BiPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def to_string(self, names=("x", "y")) -> str:
        n = self.num.to_string(names)
        if self.den == 1:
            return n
        d = self.den.to_string(names)
        if " " in n:
            n = f"({n})"
        if not _ATOM.match(d):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self) -> str:
        return f"RatFunc({self.to_string()})"


def _normalize(num: BiPoly, den: BiPoly) -> tuple[BiPoly, BiPoly]:
    lc = den.leading()[1]
    if lc != 1:
        inv = lc.inverse()
        num, den = num * inv, den * inv
    return num, den


def _gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """``bi_gcd`` with shortcuts for constant and monomial arguments."""
    if a.is_zero() or b.is_zero():
        return bi_gcd(a, b)
    if a.is_constant() or b.is_constant():
        return BiPoly.const(1)
    for m, other in ((a, b), (b, a)):
        if len(m.terms) == 1:
            (i, j), _ = next(m.items())
            return BiPoly.monomial(min(i, other.low_in(0)), min(j, other.low_in(1)))
    return bi_gcd(a, b)


_ATOM = re.compile(r"^(\d+|[A-Za-z](\^\d+)?)$")


def _as_rat(x: RatFunc | BiPoly | Number) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    return RatFunc(x if isinstance(x, BiPoly) else Q(x))


def _clear_monomials(num: BiPoly, den: BiPoly) -> tuple[BiPoly, BiPoly]:
    di = -min(num.low_in(0), den.low_in(0), 0)
    dj = -min(num.low_in(1), den.low_in(1), 0)
    return num.shift_exponents(di, dj), den.shift_exponents(di, dj)


def _eval_poly(p: BiPoly, x: RatFunc, y: RatFunc) -> RatFunc:
    out = RatFunc(0)
    xs: dict[int, RatFunc] = {}
    ys: dict[int, RatFunc] = {}
    for (i, j), c in p.terms.items():
        if i not in xs:
            xs[i] = x ** i
        if j not in ys:
            ys[j] = y ** j
        out = out + xs[i] * ys[j] * c
    return out
