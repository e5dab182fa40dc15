"""Sparse univariate and bivariate polynomials over Q or Q(sqrt d).

``BiPoly`` also tolerates negative exponents (Laurent polynomials); that is
what monomial substitutions such as ``z -> 1/s`` produce before the
denominators are cleared.  GCDs, resultants and exact division require
genuine polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .quad import ONE, ZERO, Number, Q, QuadNumber, radicand_of

Exp = tuple[int, int]


class UniPoly:
    """Dense univariate polynomial, coefficients from low to high degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()) -> None:
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[QuadNumber, ...] = tuple(cs)
        radicand_of(self.coeffs)

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def const(cls, c: Number) -> UniPoly:
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> UniPoly:
        p = cls([1])
        for r in roots:
            p = p * cls([-Q(r), 1])
        return p

    # -- basic shape --------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> QuadNumber:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> QuadNumber:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def order(self) -> int:
        """Vanishing order at 0 (-1 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return -1

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        inv = self.lead().inverse()
        return UniPoly(c * inv for c in self.coeffs)

    @property
    def radicand(self) -> int:
        return radicand_of(self.coeffs)

    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: UniPoly | Number) -> UniPoly:
        other = _as_uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: UniPoly | Number) -> UniPoly:
        return self + (-_as_uni(other))

    def __rsub__(self, other: UniPoly | Number) -> UniPoly:
        return _as_uni(other) - self

    def __mul__(self, other: UniPoly | Number) -> UniPoly:
        other = _as_uni(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        result = UniPoly([1])
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv = other.lead().inverse()
        dn = other.degree
        for k in range(len(rem) - 1, dn - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            f = c * inv
            quot[k - dn] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dn + j] = rem[k - dn + j] - f * b
        return UniPoly(quot), UniPoly(rem[:dn] if dn > 0 else [])

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, QuadNumber)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- evaluation and calculus --------------------------------------
    def __call__(self, x: Number) -> QuadNumber:
        x = Q(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def deriv(self) -> UniPoly:
        return UniPoly(c * k for k, c in enumerate(self.coeffs) if k > 0)

    def shift(self, p: Number) -> UniPoly:
        """Return ``f(u + p)``."""
        p = Q(p)
        out = UniPoly()
        lin = UniPoly([p, 1])
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def reverse(self, degree: int | None = None) -> UniPoly:
        """``u^n f(1/u)`` with ``n = degree`` (defaults to deg f)."""
        n = self.degree if degree is None else degree
        padded = list(self.coeffs) + [ZERO] * (n + 1 - len(self.coeffs))
        return UniPoly(reversed(padded))

    def conj(self) -> UniPoly:
        return UniPoly(c.conj() for c in self.coeffs)

    def to_string(self, var: str = "u") -> str:
        return BiPoly({(k, 0): c for k, c in enumerate(self.coeffs)}).to_string((var, "_"))

    def __repr__(self) -> str:
        return f"UniPoly({self.to_string()})"


def _as_uni(x: UniPoly | Number) -> UniPoly:
    return x if isinstance(x, UniPoly) else UniPoly([x])


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the coefficient field."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class BiPoly:
    """Sparse bivariate (Laurent) polynomial; maps exponent pairs to coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, Number] | None = None) -> None:
        clean: dict[Exp, QuadNumber] = {}
        for e, c in (terms or {}).items():
            c = Q(c)
            if not c.is_zero():
                clean[(int(e[0]), int(e[1]))] = c
        radicand_of(clean.values())
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def const(cls, c: Number) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def var(cls, index: int) -> BiPoly:
        return cls({(1, 0) if index == 0 else (0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c: Number = 1) -> BiPoly:
        return cls({(i, j): c})

    @classmethod
    def from_uni(cls, f: UniPoly, index: int = 0) -> BiPoly:
        return cls({((k, 0) if index == 0 else (0, k)): c for k, c in enumerate(f.coeffs)})

    # -- shape ---------------------------------------------------------
    @property
    def terms(self) -> Mapping[Exp, QuadNumber]:
        return self._terms

    def items(self) -> Iterator[tuple[Exp, QuadNumber]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_polynomial(self) -> bool:
        return all(i >= 0 and j >= 0 for i, j in self._terms)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def constant_term(self) -> QuadNumber:
        return self._terms.get((0, 0), ZERO)

    def coeff(self, i: int, j: int) -> QuadNumber:
        return self._terms.get((i, j), ZERO)

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def deg_in(self, index: int) -> int:
        return max((e[index] for e in self._terms), default=-1)

    def low_in(self, index: int) -> int:
        """Smallest exponent of the given variable (0 for the zero polynomial)."""
        return min((e[index] for e in self._terms), default=0)

    @property
    def radicand(self) -> int:
        return radicand_of(self._terms.values())

    def leading(self) -> tuple[Exp, QuadNumber]:
        """Leading term for the lex order with the second variable first."""
        e = max(self._terms, key=lambda e: (e[1], e[0]))
        return e, self._terms[e]

    def monic(self) -> BiPoly:
        if self.is_zero():
            return self
        return self * self.leading()[1].inverse()

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: BiPoly | Number) -> BiPoly:
        other = _as_bi(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: BiPoly | Number) -> BiPoly:
        return self + (-_as_bi(other))

    def __rsub__(self, other: BiPoly | Number) -> BiPoly:
        return _as_bi(other) - self

    def __mul__(self, other: BiPoly | Number) -> BiPoly:
        if not isinstance(other, BiPoly):
            c = Q(other)
            return BiPoly({e: v * c for e, v in self._terms.items()})
        out: dict[Exp, QuadNumber] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers")
            (i, j), c = next(iter(self._terms.items()))
            return BiPoly({(i * n, j * n): c ** n})
        result, base = BiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_exponents(self, di: int, dj: int) -> BiPoly:
        """Multiply by the monomial ``x^di y^dj``."""
        return BiPoly({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, QuadNumber)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def exact_div(self, other: BiPoly) -> BiPoly:
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide ``self``."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        (bi, bj), bc = other.leading()
        inv = bc.inverse()
        rem, quot = self, {}
        while not rem.is_zero():
            (ri, rj), rc = rem.leading()
            qi, qj = ri - bi, rj - bj
            if qi < 0 or qj < 0:
                raise ArithmeticError("inexact polynomial division")
            c = rc * inv
            quot[(qi, qj)] = c
            rem = rem - other.shift_exponents(qi, qj) * c
        return BiPoly(quot)

    # -- evaluation, substitution, calculus -----------------------------
    def __call__(self, x: Number, y: Number) -> QuadNumber:
        x, y = Q(x), Q(y)
        acc = ZERO
        for (i, j), c in self._terms.items():
            acc = acc + c * x ** i * y ** j
        return acc

    def substitute(self, x: BiPoly, y: BiPoly) -> BiPoly:
        """Compose: replace the first variable by ``x`` and the second by ``y``."""
        cache_x: dict[int, BiPoly] = {}
        cache_y: dict[int, BiPoly] = {}
        out = BiPoly()
        for (i, j), c in self._terms.items():
            if i not in cache_x:
                cache_x[i] = x ** i
            if j not in cache_y:
                cache_y[j] = y ** j
            out = out + cache_x[i] * cache_y[j] * c
        return out

    def translate(self, p0: Number, p1: Number) -> BiPoly:
        """Return ``f(x + p0, y + p1)``."""
        x = BiPoly.var(0) + Q(p0)
        y = BiPoly.var(1) + Q(p1)
        return self.substitute(x, y)

    def swap(self) -> BiPoly:
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    def diff(self, index: int) -> BiPoly:
        out = {}
        for (i, j), c in self._terms.items():
            k = i if index == 0 else j
            if k:
                out[(i - 1, j) if index == 0 else (i, j - 1)] = c * k
        return BiPoly(out)

    def restrict(self, index: int, value: Number) -> UniPoly:
        """Set variable ``index`` to ``value``; result is univariate in the other one."""
        value = Q(value)
        other = 1 - index
        coeffs: dict[int, QuadNumber] = {}
        for e, c in self._terms.items():
            k = e[other]
            if k < 0:
                raise ValueError("restriction of a Laurent polynomial")
            v = c * value ** e[index] if e[index] else c
            coeffs[k] = coeffs.get(k, ZERO) + v
        n = max(coeffs, default=-1)
        return UniPoly(coeffs.get(k, ZERO) for k in range(n + 1))

    def order_in(self, index: int) -> int:
        """Largest power of variable ``index`` dividing the polynomial."""
        return self.low_in(index)

    def conj(self) -> BiPoly:
        return BiPoly({e: c.conj() for e, c in self._terms.items()})

    # -- views used by gcd/resultant ------------------------------------
    def coeffs_in(self, index: int) -> dict[int, UniPoly]:
        """View as a polynomial in variable ``index`` with univariate coefficients."""
        other = 1 - index
        buckets: dict[int, dict[int, QuadNumber]] = {}
        for e, c in self._terms.items():
            buckets.setdefault(e[index], {})[e[other]] = c
        return {k: UniPoly(v.get(m, ZERO) for m in range(max(v) + 1)) for k, v in buckets.items()}

    @classmethod
    def from_coeffs_in(cls, parts: Mapping[int, UniPoly], index: int) -> BiPoly:
        out = {}
        for k, f in parts.items():
            for m, c in enumerate(f.coeffs):
                out[(k, m) if index == 0 else (m, k)] = c
        return cls(out)

    # -- display -------------------------------------------------------
    def to_string(self, names: Sequence[str] = ("x", "y")) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), c in sorted(self._terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = []
            for name, k in ((names[0], i), (names[1], j)):
                if k == 1:
                    mono.append(name)
                elif k != 0:
                    mono.append(f"{name}^{k}" if k > 0 else f"{name}^({k})")
            mono_s = "*".join(mono)
            neg = c.d == 0 and c.a < 0
            mag = -c if neg else c
            if not mono_s:
                body = f"({mag})" if mag.d != 0 and mag.a != 0 else str(mag)
            elif mag == 1:
                body = mono_s
            else:
                cs = f"({mag})" if (mag.d != 0 and mag.a != 0) or mag.b < 0 else str(mag)
                body = f"{cs}*{mono_s}"
            pieces.append(("-" if neg else "+", body))
        sign0, body0 = pieces[0]
        out = ("-" if sign0 == "-" else "") + body0
        for s, b in pieces[1:]:
            out += f" {s} {b}"
        return out

    def __repr__(self) -> str:
        return f"BiPoly({self.to_string()})"


def _as_bi(x: BiPoly | Number) -> BiPoly:
    return x if isinstance(x, BiPoly) else BiPoly.const(x)


X = BiPoly.var(0)
Y = BiPoly.var(1)


# ---------------------------------------------------------------------------
# gcd in K[x][y] by primitive pseudo-remainder sequences


def _content(parts: Mapping[int, UniPoly]) -> UniPoly:
    g = UniPoly()
    for f in parts.values():
        g = uni_gcd(g, f)
        if g.degree == 0:
            break
    return g


def _primitive(parts: dict[int, UniPoly]) -> dict[int, UniPoly]:
    c = _content(parts)
    if c.degree <= 0:
        return parts
    return {k: f.exact_div(c) for k, f in parts.items()}


def _prem(a: dict[int, UniPoly], b: dict[int, UniPoly]) -> dict[int, UniPoly]:
    n = max(b)
    lb = b[n]
    r = dict(a)
    while r and max(r) >= n:
        m = max(r)
        lr = r[m]
        out: dict[int, UniPoly] = {}
        for k, f in r.items():
            out[k] = f * lb
        for k, f in b.items():
            kk = k + m - n
            out[kk] = out.get(kk, UniPoly()) - f * lr
        r = {k: f for k, f in out.items() if not f.is_zero()}
    return r


def bi_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Greatest common divisor in K[x, y], normalized by :meth:`BiPoly.monic`."""
    if not (a.is_polynomial() and b.is_polynomial()):
        raise ValueError("gcd of Laurent polynomials")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    pa, pb = a.coeffs_in(1), b.coeffs_in(1)
    c = uni_gcd(_content(pa), _content(pb))
    pa, pb = _primitive(pa), _primitive(pb)
    if max(pa) < max(pb):
        pa, pb = pb, pa
    while pb:
        r = _prem(pa, pb)
        pa, pb = pb, (_primitive(r) if r else {})
    g = BiPoly.from_coeffs_in(_primitive(pa), 1) * BiPoly.from_uni(c, 0)
    return g.monic()


# ---------------------------------------------------------------------------
# resultants by evaluation and interpolation


def _det(rows: list[list[QuadNumber]]) -> QuadNumber:
    n = len(rows)
    m = [list(r) for r in rows]
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            f = m[r][col]
            if f.is_zero():
                continue
            f = f * inv
            for c in range(col, n):
                m[r][c] = m[r][c] - f * m[col][c]
    return det


def _sylvester(f: Sequence[QuadNumber], g: Sequence[QuadNumber]) -> list[list[QuadNumber]]:
    """Sylvester matrix from coefficient lists given high degree first."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for k in range(n):
        rows.append([ZERO] * k + list(f) + [ZERO] * (size - k - m - 1))
    for k in range(m):
        rows.append([ZERO] * k + list(g) + [ZERO] * (size - k - n - 1))
    return rows


def interpolate(xs: Sequence[QuadNumber], ys: Sequence[QuadNumber]) -> UniPoly:
    """Newton interpolation through the given nodes."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UniPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * UniPoly([-xs[i], 1]) + coef[i]
    return p


def resultant(a: BiPoly, b: BiPoly, index: int = 1) -> UniPoly:
    """Resultant of ``a`` and ``b`` with respect to variable ``index``.

    The Sylvester matrix is taken with the formal degrees in that variable,
    so evaluating its entries commutes with taking the determinant.
    """
    pa, pb = a.coeffs_in(index), b.coeffs_in(index)
    m, n = max(pa, default=0), max(pb, default=0)
    if a.is_zero() or b.is_zero():
        return UniPoly()
    if m == 0 and n == 0:
        return UniPoly([1])
    other = 1 - index
    bound = n * max(a.deg_in(other), 0) + m * max(b.deg_in(other), 0)
    xs, ys = [], []
    for t in range(bound + 1):
        x0 = Q(t)
        fa = [pa[k](x0) if k in pa else ZERO for k in range(m, -1, -1)]
        fb = [pb[k](x0) if k in pb else ZERO for k in range(n, -1, -1)]
        xs.append(x0)
        ys.append(_det(_sylvester(fa, fb)))
    return interpolate(xs, ys)


# ---------------------------------------------------------------------------
# univariate rational functions and residues


class UniRat:
    """Reduced quotient of univariate polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly | Number, den: UniPoly | Number = 1) -> None:
        num, den = _as_uni(num), _as_uni(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = uni_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lead()
        self.num = UniPoly(c / lc for c in num.coeffs)
        self.den = den.monic()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __add__(self, other: UniRat) -> UniRat:
        return UniRat(self.num * other.den + other.num * self.den, self.den * other.den)

    def __repr__(self) -> str:
        return f"UniRat(({self.num.to_string()}) / ({self.den.to_string()}))"


def laurent_coefficients(f: UniRat, p: Number, upto: int) -> tuple[int, list[QuadNumber]]:
    """Expansion of ``f`` at ``p``: returns ``(m, c)`` with ``f = sum c[k] (u-p)^(k-m)``, ``k <= upto``."""
    num, den = f.num.shift(p), f.den.shift(p)
    m = den.order()
    dt = UniPoly(den.coeffs[m:])
    d0inv = dt[0].inverse()
    series: list[QuadNumber] = []
    for k in range(upto + 1):
        acc = num[k]
        for i in range(1, k + 1):
            acc = acc - dt[i] * series[k - i]
        series.append(acc * d0inv)
    return m, series


def residue_at(f: UniRat, p: Number) -> QuadNumber:
    """Coefficient of ``(u - p)^-1`` in the Laurent expansion of ``f`` at ``p``."""
    p = Q(p)
    radicand_of([p, *f.num.coeffs, *f.den.coeffs])
    m = f.den.shift(p).order()
    if m <= 0:
        return ZERO
    _, series = laurent_coefficients(f, p, m - 1)
    return series[m - 1]


def residue_at_infinity(f: UniRat) -> QuadNumber:
    """Residue of ``f(u) du`` at infinity, via ``u = 1/t``."""
    dn, dd = f.num.degree, f.den.degree
    if f.num.is_zero():
        return ZERO
    num, den = f.num.reverse(), f.den.reverse()
    e = dd - dn - 2
    t = UniPoly([0, 1])
    g = UniRat(num * t ** e, den) if e >= 0 else UniRat(num, den * t ** (-e))
    return -residue_at(g, 0)
