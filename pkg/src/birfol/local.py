"""Local theory of a foliation given by a polynomial 1-form ``a dx + b dy``.

Conventions
-----------
* The dual vector field is ``v = (b, -a)``.
* The eigenvalue ratio of a non-degenerate point is ``l_y / l_x``, so
  ``x dy + l y dx`` has ratio ``-l``.
* ``axis`` arguments name a coordinate axis of the chart: ``0`` is the curve
  ``{x = 0}`` and ``1`` is ``{y = 0}`` (strings such as ``"y=0"`` work too).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .algebra.poly import BiPoly, UniPoly, UniRat, bi_gcd, residue_at, resultant, uni_gcd
from .algebra.quad import ZERO, Number, Q, QuadNumber
from .algebra.ratfunc import RatFunc
from .algebra.roots import roots_in_tower
from .errors import (
    IsInvariant,
    NotInvariant,
    UnsolvableSingularLocus,
    WeakSeparatrixNotPolynomial,
)
from .parse import parse_form_coefficients

Point = tuple[QuadNumber, QuadNumber]
AxisLike = Union[int, str]

REGULAR = "Regular"
NON_DEGENERATE = "NonDegenerate"
SADDLE_NODE = "SaddleNode"
NON_REDUCED = "NonReduced"


class SaturationWarning(UserWarning):
    pass


@dataclass(frozen=True)
class OneForm:
    """Saturated polynomial 1-form ``a d(names[0]) + b d(names[1])``.

    A common factor of ``a`` and ``b`` is divided out on construction and
    kept in ``divided``.
    """

    a: BiPoly
    b: BiPoly
    names: tuple[str, str] = ("x", "y")
    divided: BiPoly = field(default_factory=lambda: BiPoly.const(1), compare=False)

    def __post_init__(self) -> None:
        a, b = self.a, self.b
        if not isinstance(a, BiPoly):
            a = BiPoly.const(a)
        if not isinstance(b, BiPoly):
            b = BiPoly.const(b)
        if a.is_zero() and b.is_zero():
            raise ValueError("the zero form does not define a foliation")
        if not (a.is_polynomial() and b.is_polynomial()):
            raise ValueError("coefficients must be polynomials")
        g = bi_gcd(a, b)
        if not g.is_constant():
            a, b = a.exact_div(g), b.exact_div(g)
            object.__setattr__(self, "divided", self.divided * g)
            warnings.warn(
                f"divided out common factor {g.to_string(self.names)}",
                SaturationWarning,
                stacklevel=3,
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "names", tuple(self.names))

    @classmethod
    def from_rational(cls, p: RatFunc, q: RatFunc, names: Sequence[str] = ("x", "y")) -> OneForm:
        """Clear denominators of ``p d0 + q d1`` (a foliation is defined up to a factor)."""
        den = p.den * q.den
        g = bi_gcd(p.den, q.den)
        if not g.is_constant():
            den = den.exact_div(g)
        a = p.num * den.exact_div(p.den)
        b = q.num * den.exact_div(q.den)
        return cls(a, b, tuple(names))

    def translate(self, p: Sequence[Number]) -> OneForm:
        return OneForm(self.a.translate(p[0], p[1]), self.b.translate(p[0], p[1]), self.names)

    def swap(self) -> OneForm:
        """The same form written in the coordinates ``(y, x)``."""
        return OneForm(self.b.swap(), self.a.swap(), (self.names[1], self.names[0]))

    def scaled(self, c: Number) -> OneForm:
        return OneForm(self.a * c, self.b * c, self.names)

    def proportional_to(self, other: OneForm) -> bool:
        """Equal up to a nonzero constant factor."""
        return (self.a * other.b - self.b * other.a).is_zero() and self.names == other.names

    def equal_up_to_unit(self, other: OneForm) -> bool:
        return (self.a * other.b - self.b * other.a).is_zero()

    def to_text(self) -> str:
        parts = []
        for coeff, name in ((self.a, self.names[0]), (self.b, self.names[1])):
            if coeff.is_zero():
                continue
            s = coeff.to_string(self.names)
            if s == "1":
                parts.append(f"d{name}")
            else:
                parts.append(f"({s})*d{name}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


def parse_one_form(text: str, names: Optional[Sequence[str]] = None) -> OneForm:
    p, q, pair = parse_form_coefficients(text, names)
    if p.is_zero() and q.is_zero():
        raise ValueError("the zero form does not define a foliation")
    return OneForm.from_rational(p, q, pair)


def dual_vector_field(form: OneForm) -> tuple[BiPoly, BiPoly]:
    return form.b, -form.a


def _axis(axis: AxisLike, names: Sequence[str] = ("x", "y")) -> int:
    if isinstance(axis, int):
        if axis not in (0, 1):
            raise ValueError(f"axis index must be 0 or 1, got {axis}")
        return axis
    s = axis.strip().strip("{}").replace(" ", "")
    for i, n in enumerate(names):
        if s in (f"{n}=0", n):
            return i
    raise ValueError(f"unknown axis {axis!r} for variables {tuple(names)}")


def axis_label(axis: int, names: Sequence[str] = ("x", "y")) -> str:
    return f"{{{names[axis]}=0}}"


def _point(p: Sequence[Number]) -> Point:
    return (Q(p[0]), Q(p[1]))


def is_axis_invariant(form: OneForm, axis: AxisLike) -> bool:
    """``{x=0}`` is invariant iff ``b(0, y) = 0``; ``{y=0}`` iff ``a(x, 0) = 0``."""
    i = _axis(axis, form.names)
    coeff = form.b if i == 0 else form.a
    return coeff.restrict(i, 0).is_zero()


def _on_axis(p: Point, i: int) -> None:
    if not p[i].is_zero():
        raise ValueError(f"point ({p[0]}, {p[1]}) is not on the axis")


def _residue_data(form: OneForm, i: int) -> tuple[UniPoly, UniPoly]:
    """Return ``(-tilde, transverse)`` restricted to axis ``i``.

    For ``{y=0}``: ``a = y * tilde`` and ``transverse = b(x, 0)``.
    """
    tangent = form.b if i == 0 else form.a
    transverse = form.a if i == 0 else form.b
    if not tangent.restrict(i, 0).is_zero():
        raise NotInvariant(f"axis {axis_label(i, form.names)} is not invariant")
    shift = (-1, 0) if i == 0 else (0, -1)
    tilde = tangent.shift_exponents(*shift)
    return -tilde.restrict(i, 0), transverse.restrict(i, 0)


def camacho_sad_index(form: OneForm, axis: AxisLike, p: Sequence[Number]) -> QuadNumber:
    """Camacho-Sad index of an invariant coordinate axis at a point on it."""
    i = _axis(axis, form.names)
    pt = _point(p)
    _on_axis(pt, i)
    num, den = _residue_data(form, i)
    return residue_at(UniRat(num, den), pt[1 - i])


def z_index(form: OneForm, axis: AxisLike, p: Sequence[Number]) -> int:
    """Vanishing order at ``p`` of the transverse coefficient on an invariant axis.

    On the weak separatrix of a saddle-node with Milnor number ``k + 1``
    this is ``k + 1``; a convention counting ``k`` there differs by one.
    """
    i = _axis(axis, form.names)
    pt = _point(p)
    _on_axis(pt, i)
    _, den = _residue_data(form, i)
    return den.shift(pt[1 - i]).order()


def tangency_order(form: OneForm, axis: AxisLike, p: Sequence[Number]) -> int:
    """Order of tangency of a non-invariant axis with the foliation at ``p``."""
    i = _axis(axis, form.names)
    pt = _point(p)
    _on_axis(pt, i)
    tangent = form.b if i == 0 else form.a
    r = tangent.restrict(i, 0)
    if r.is_zero():
        raise IsInvariant(f"axis {axis_label(i, form.names)} is invariant")
    return r.shift(pt[1 - i]).order()


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class SeparatrixData:
    axis: str
    cs: QuadNumber
    z: int


@dataclass(frozen=True)
class SingularityReport:
    point: Point
    kind: str
    ratio: Optional[QuadNumber] = None
    milnor_order: Optional[int] = None
    strong_direction: Optional[object] = None
    dulac: Optional[QuadNumber] = None
    reason: Optional[str] = None
    separatrices: tuple[SeparatrixData, ...] = ()

    @property
    def is_reduced(self) -> bool:
        return self.kind in (NON_DEGENERATE, SADDLE_NODE)

    @property
    def is_singular(self) -> bool:
        return self.kind != REGULAR

    def cs(self, axis: str) -> Optional[QuadNumber]:
        for s in self.separatrices:
            if s.axis == axis:
                return s.cs
        return None


def _linear_part(a: BiPoly, b: BiPoly) -> list[list[QuadNumber]]:
    # Jacobian at 0 of v = (b, -a)
    return [
        [b.coeff(1, 0), b.coeff(0, 1)],
        [-a.coeff(1, 0), -a.coeff(0, 1)],
    ]


def positive_rational_ratio(tr: QuadNumber, det: QuadNumber) -> bool:
    """Whether the eigenvalue ratio of a matrix with this trace and determinant lies in Q+.

    With ``s = tr^2/det`` the ratio ``r`` satisfies ``r + 1/r + 2 = s``.
    """
    s = tr * tr / det
    if not s.is_rational:
        return False
    s = s.as_fraction()
    if s < 4:
        return False
    from .algebra.quad import is_rational_square

    return is_rational_square(s * (s - 4))


def _ratio(jac: list[list[QuadNumber]], tr: QuadNumber, det: QuadNumber) -> QuadNumber:
    (p, q), (r, s) = jac
    if q.is_zero() or r.is_zero():
        return s / p
    root = (tr * tr - det * 4).sqrt()
    l1, l2 = (tr + root) / 2, (tr - root) / 2
    # eigenvector (1, m) with m = (l - p)/q; the one closer to the x-axis is l_x
    m1, m2 = (l1 - p) / q, (l2 - p) / q
    c = (m1.abs_sq() - m2.abs_sq())
    if c.is_real and c.sign() > 0:
        l1, l2 = l2, l1
    return l2 / l1


def _direction(vec: tuple[QuadNumber, QuadNumber]) -> object:
    x, y = vec
    if y.is_zero():
        return 1  # the axis {y=0}
    if x.is_zero():
        return 0  # the axis {x=0}
    return (ONE_Q, y / x)


ONE_Q = Q(1)


def _center_manifold_order(a: BiPoly, b: BiPoly, jac, tr: QuadNumber) -> tuple[int, tuple, tuple]:
    """Order of the field restricted to a formal center manifold, plus eigen-directions.

    Returns ``(order, strong_vec, weak_vec)``.
    """
    (p, q), (r, s) = jac
    # weak direction = kernel of J, strong = eigenvector for tr
    if not q.is_zero() or not p.is_zero():
        weak = (-q, p) if not (p.is_zero() and q.is_zero()) else (ONE_Q, ZERO)
    else:
        weak = (-s, r)
    if not q.is_zero():
        strong = (q, tr - p)
    elif not r.is_zero():
        strong = (tr - s, r)
    else:
        strong = (ONE_Q, ZERO) if not p.is_zero() else (ZERO, ONE_Q)
    weak = _normalize(weak)
    strong = _normalize(strong)
    # new coordinates (X, Y): (x, y) = X*strong + Y*weak
    X, Y = BiPoly.var(0), BiPoly.var(1)
    xs = X * strong[0] + Y * weak[0]
    ys = X * strong[1] + Y * weak[1]
    v1 = b.substitute(xs, ys)
    v2 = -a.substitute(xs, ys)
    det_t = strong[0] * weak[1] - strong[1] * weak[0]
    # T^{-1} = [[w1, -w0], [-s1, s0]] / det
    vx = (v1 * weak[1] - v2 * weak[0]) * det_t.inverse()
    vy = (v2 * strong[0] - v1 * strong[1]) * det_t.inverse()
    mu = tr
    bound = max(a.degree, 1) * max(b.degree, 1) + 2
    h = UniPoly()
    for n in range(2, bound + 1):
        hb = BiPoly.from_uni(h, 1)
        f = vx.substitute(hb, Y).restrict(0, 0) - h.deriv() * vy.substitute(hb, Y).restrict(0, 0)
        h = h + UniPoly([0] * n + [-f[n] / mu])
    hb = BiPoly.from_uni(h, 1)
    g = vy.substitute(hb, Y).restrict(0, 0)
    g = UniPoly(g.coeffs[: bound + 1])
    order = g.order()
    if order < 2:
        raise ArithmeticError("saddle-node order not detected within the Milnor bound")
    return order, strong, weak


def _normalize(v):
    x, y = Q(v[0]), Q(v[1])
    if not x.is_zero():
        return (ONE_Q, y / x)
    return (ZERO, ONE_Q)


def classify_singularity(form: OneForm, p: Sequence[Number]) -> SingularityReport:
    pt = _point(p)
    local = form.translate(pt)
    a, b = local.a, local.b
    if not a.constant_term().is_zero() or not b.constant_term().is_zero():
        return SingularityReport(pt, REGULAR)
    jac = _linear_part(a, b)
    tr = jac[0][0] + jac[1][1]
    det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0]
    seps = _separatrices(form, pt)
    if not det.is_zero():
        if positive_rational_ratio(tr, det):
            ratio = _ratio(jac, tr, det) if (jac[0][1].is_zero() or jac[1][0].is_zero()) else None
            return SingularityReport(pt, NON_REDUCED, ratio=ratio, reason="eigenvalue ratio is a positive rational",
                                     separatrices=seps)
        return SingularityReport(pt, NON_DEGENERATE, ratio=_ratio(jac, tr, det), separatrices=seps)
    if tr.is_zero():
        return SingularityReport(pt, NON_REDUCED, reason="nilpotent or zero linear part", separatrices=seps)
    order, strong, weak = _center_manifold_order(a, b, jac, tr)
    k = order - 1
    weak_dir = _direction(weak)
    nu = None
    if isinstance(weak_dir, int) and is_axis_invariant(local, weak_dir):
        nu = camacho_sad_index(local, weak_dir, (0, 0))
    strong_dir = _direction(strong)
    if isinstance(strong_dir, int):
        strong_dir = axis_label(strong_dir, form.names)
    return SingularityReport(
        pt,
        SADDLE_NODE,
        milnor_order=k,
        strong_direction=strong_dir,
        dulac=nu,
        separatrices=seps,
    )


def _separatrices(form: OneForm, pt: Point) -> tuple[SeparatrixData, ...]:
    out = []
    for i in (0, 1):
        if pt[i].is_zero() and is_axis_invariant(form, i):
            out.append(SeparatrixData(axis_label(i, form.names), camacho_sad_index(form, i, pt), z_index(form, i, pt)))
    return tuple(out)


def dulac_invariant(form: OneForm, p: Sequence[Number] = (0, 0)) -> QuadNumber:
    """Dulac invariant of a saddle-node whose weak separatrix is an invariant coordinate axis."""
    rep = classify_singularity(form, p)
    if rep.kind != SADDLE_NODE:
        raise ValueError(f"point is {rep.kind}, not a saddle-node")
    if rep.dulac is None:
        raise WeakSeparatrixNotPolynomial("the weak separatrix is not an invariant coordinate axis")
    return rep.dulac


# ---------------------------------------------------------------------------
# singular locus


def _sort_key(p: Point):
    z0, z1 = complex(p[0]), complex(p[1])
    return (z0.real, z0.imag, z1.real, z1.imag, str(p[0]), str(p[1]))


def singular_points(form: OneForm) -> list[Point]:
    """All common zeros of ``a`` and ``b`` in the quadratic tower, sorted."""
    a, b = form.a, form.b
    if a.is_zero() or b.is_zero():
        # saturation leaves a nonzero constant in the other slot
        return []
    res = resultant(a, b, index=1)
    if res.is_zero():
        raise UnsolvableSingularLocus("coefficients share a component")
    xs, unsolved = roots_in_tower(res)
    if unsolved:
        raise UnsolvableSingularLocus(
            "singular abscissae outside the field tower: "
            + ", ".join(f.to_string(form.names[0]) for f in unsolved)
        )
    points: list[Point] = []
    for x0 in xs:
        g = uni_gcd(a.restrict(0, x0), b.restrict(0, x0))
        if g.is_zero():
            raise UnsolvableSingularLocus(f"a line of singular points at {form.names[0]}={x0}")
        ys, left = roots_in_tower(g)
        if left:
            raise UnsolvableSingularLocus(
                f"singular ordinates over {form.names[0]}={x0} outside the field tower: "
                + ", ".join(f.to_string(form.names[1]) for f in left)
            )
        points.extend((x0, y0) for y0 in ys)
    points.sort(key=_sort_key)
    return points
