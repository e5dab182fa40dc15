"""Roots of univariate polynomials inside Q or a single quadratic extension.

Rational factorization is delegated to sympy; only linear and quadratic
factors are solved.  Whatever is left is returned as an unsolved factor so
callers can report it.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .poly import UniPoly
from .quad import QuadNumber

_T = sympy.Symbol("t")


def rational_factors(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Irreducible factors over Q of a polynomial with rational coefficients."""
    coeffs = [sympy.Rational(c.a.numerator, c.a.denominator) for c in reversed(f.coeffs)]
    poly = sympy.Poly(coeffs, _T, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for g, mult in factors:
        cs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in reversed(g.all_coeffs())]
        out.append((UniPoly(cs).monic(), mult))
    out.sort(key=lambda t: (t[0].degree, [c.a for c in t[0].coeffs]))
    return out


def _quadratic_roots(g: UniPoly) -> list[QuadNumber]:
    c, b, a = g.coeffs
    root = QuadNumber.sqrt_of((b * b - a * c * 4).as_fraction())
    return [(-b + root) / (a * 2), (-b - root) / (a * 2)]


def roots_in_tower(f: UniPoly) -> tuple[list[QuadNumber], list[UniPoly]]:
    """Distinct roots of ``f`` in Q or Q(sqrt d), plus unsolved factors.

    For rational ``f`` each irreducible factor of degree <= 2 is solved (the
    roots may then come from different quadratic fields).  For ``f`` over
    Q(sqrt d) the norm ``f * conj(f)`` is factored over Q and candidate roots
    are tested against ``f``.
    """
    if f.degree <= 0:
        return [], []
    roots: list[QuadNumber] = []
    unsolved: list[UniPoly] = []
    if f.is_rational():
        for g, _ in rational_factors(f):
            if g.degree == 1:
                roots.append(-g[0] / g[1])
            elif g.degree == 2:
                roots.extend(_quadratic_roots(g))
            else:
                unsolved.append(g)
        return _dedupe(roots), unsolved
    d = f.radicand
    rest = f.monic()
    for g, _ in rational_factors(f * f.conj()):
        if g.degree == 1:
            cands = [-g[0] / g[1]]
        elif g.degree == 2:
            cands = _quadratic_roots(g)
        else:
            continue
        for r in cands:
            if r.d not in (0, d) or r in roots:
                continue
            if f(r).is_zero():
                roots.append(r)
                lin = UniPoly([-r, 1])
                while True:
                    q, rem = divmod(rest, lin)
                    if not rem.is_zero():
                        break
                    rest = q
    if rest.degree > 0:
        unsolved.append(rest)
    return _dedupe(roots), unsolved


def _dedupe(values: list[QuadNumber]) -> list[QuadNumber]:
    out: list[QuadNumber] = []
    for v in values:
        if v not in out:
            out.append(v)
    return out
