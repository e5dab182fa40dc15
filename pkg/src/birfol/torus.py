"""Linear automorphisms of complex 2-tori and their finite symmetry groups.

Lattice models:

* ``ZiSquare`` -- ``(C/Z[i])^2``; entries are Gaussian integers.
* ``ZjSquare`` -- ``(C/Z[j])^2`` with ``j = (-1 + sqrt(-3))/2``; entries in Z[j].
* ``ESquare``  -- ``E x E`` for an elliptic curve without complex multiplication;
  entries are integers.
* ``GeneralZ4`` -- a 4x4 integer matrix acting on ``H_1(T, Z)``.

The action on ``H^{1,1}`` of a torus with linear part ``L`` is modelled by
``L (x) conj(L)`` in the frame ``dz_i ^ d(conj z_j)``.  Translation parts of
affine maps are ignored throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import sympy

from .algebra.matrix import (
    Matrix,
    charpoly,
    identity,
    is_zero_matrix,
    kron,
    mat_sub,
    matmul,
    matpow,
    matrix_order,
)
from .algebra.quad import ONE, ZERO, Number, Q, QuadNumber
from .errors import FieldTowerExceeded, InconsistentLattice, InfiniteOrder, LatticeMismatch
from .monomial import BOUNDED, EXPONENTIAL, LINEAR, QUADRATIC, GrowthClass

ZI = "ZiSquare"
ZJ = "ZjSquare"
E2 = "ESquare"
Z4 = "GeneralZ4"
LATTICES = (ZI, ZJ, E2, Z4)
LATTICE_ALIASES = {
    "zi": ZI, "zisquare": ZI, "z[i]": ZI,
    "zj": ZJ, "zjsquare": ZJ, "z[j]": ZJ,
    "e": E2, "e2": E2, "esquare": E2, "exe": E2,
    "z4": Z4, "generalz4": Z4,
}


def lattice_kind(name: str) -> str:
    key = name.strip().lower().replace("²", "2").replace(" ", "")
    if name in LATTICES:
        return name
    if key in LATTICE_ALIASES:
        return LATTICE_ALIASES[key]
    raise ValueError(f"unknown lattice {name!r}")


def in_ring(x: QuadNumber, lattice: str) -> bool:
    if lattice in (E2, Z4):
        return x.is_rational and x.a.denominator == 1
    if lattice == ZI:
        return x.d in (0, -1) and x.a.denominator == 1 and x.b.denominator == 1
    if lattice == ZJ:
        if x.d not in (0, -3):
            return False
        a2, b2 = 2 * x.a, 2 * x.b
        return a2.denominator == 1 and b2.denominator == 1 and (a2 - b2) % 2 == 0
    raise ValueError(lattice)


def _to_ring_pair(x: QuadNumber, lattice: str) -> tuple[int, int]:
    """Integer coordinates of ``x`` on the basis ``(1, i)`` or ``(1, j)``."""
    if lattice == ZI:
        return int(x.a), int(x.b)
    if lattice == ZJ:
        q = 2 * x.b
        return int(x.a + x.b), int(q)
    return int(x.a), 0


def _real_block(x: QuadNumber, lattice: str) -> list[list[int]]:
    p, q = _to_ring_pair(x, lattice)
    if lattice == ZI:
        return [[p, -q], [q, p]]
    if lattice == ZJ:
        return [[p, -q], [q, p - q]]
    return [[p, 0], [0, p]]


@dataclass(frozen=True)
class TorusAut:
    lattice: str
    matrix: tuple  # 2x2 of QuadNumber, or 4x4 of int for GeneralZ4

    def __post_init__(self) -> None:
        lat = lattice_kind(self.lattice)
        object.__setattr__(self, "lattice", lat)
        if lat == Z4:
            m = tuple(tuple(int(v) for v in row) for row in self.matrix)
            if len(m) != 4 or any(len(r) != 4 for r in m):
                raise ValueError("GeneralZ4 needs a 4x4 integer matrix")
            if abs(sympy.Matrix(m).det()) != 1:
                raise ValueError("matrix is not invertible over Z")
        else:
            m = tuple(tuple(Q(v) for v in row) for row in self.matrix)
            if len(m) != 2 or any(len(r) != 2 for r in m):
                raise ValueError("linear part must be 2x2")
            for row in m:
                for v in row:
                    if not in_ring(v, lat):
                        raise LatticeMismatch(f"entry {v} does not preserve the {lat} lattice")
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
            if det.abs_sq() != 1:
                raise LatticeMismatch(f"det {det} is not a unit of the coefficient ring")
        object.__setattr__(self, "matrix", m)

    @property
    def rows(self) -> list[list]:
        return [list(r) for r in self.matrix]

    @property
    def is_2x2(self) -> bool:
        return self.lattice != Z4

    def realification(self) -> list[list[int]]:
        """Integer 4x4 matrix of the action on ``H_1(T, Z)``."""
        if self.lattice == Z4:
            return self.rows
        out = [[0] * 4 for _ in range(4)]
        for i in range(2):
            for j in range(2):
                blk = _real_block(self.matrix[i][j], self.lattice)
                for r in range(2):
                    for c in range(2):
                        out[2 * i + r][2 * j + c] = blk[r][c]
        return out

    def compose(self, other: TorusAut) -> TorusAut:
        if self.lattice != other.lattice:
            raise LatticeMismatch(f"{self.lattice} vs {other.lattice}")
        return TorusAut(self.lattice, matmul(self.rows, other.rows))


def homothety(lattice: str, xi: Number) -> TorusAut:
    xi = Q(xi)
    lat = lattice_kind(lattice)
    if lat == Z4:
        blk = _real_block(xi, ZI) if xi.d == -1 else _real_block(xi, ZJ) if xi.d == -3 else [[int(xi.a), 0], [0, int(xi.a)]]
        m = [[0] * 4 for _ in range(4)]
        for k in range(2):
            for r in range(2):
                for c in range(2):
                    m[2 * k + r][2 * k + c] = blk[r][c]
        return TorusAut(lat, m)
    return TorusAut(lat, [[xi, 0], [0, xi]])


# ---------------------------------------------------------------------------
# unit-circle roots of integer polynomials

_t = sympy.Symbol("t")
_u = sympy.Symbol("u")


def _integer_poly(a: TorusAut) -> sympy.Poly:
    """Integer polynomial whose roots are the eigenvalues of ``L`` and of its conjugate."""
    if a.lattice == Z4:
        cs = charpoly(a.rows)
        return sympy.Poly(list(reversed(cs)), _t)
    m = a.matrix
    tr = m[0][0] + m[1][1]
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if tr.is_rational and det.is_rational:
        coeffs = [1, -tr.a, det.a]
        return sympy.Poly([sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
                           for c in coeffs], _t)
    # (t^2 - tr t + det)(t^2 - conj(tr) t + conj(det)) has rational coefficients
    c1 = [det, -tr, ONE]
    c2 = [det.conj(), -tr.conj(), ONE]
    prod = [ZERO] * 5
    for i, x in enumerate(c1):
        for j, y in enumerate(c2):
            prod[i + j] = prod[i + j] + x * y
    return sympy.Poly([sympy.Rational(c.as_fraction().numerator, c.as_fraction().denominator)
                       for c in reversed(prod)], _t)


def has_unit_circle_root(p: sympy.Poly) -> bool:
    """Exact test for a root of modulus one, via self-reciprocal factors."""
    for h, _ in p.factor_list()[1]:
        if h.eval(1) == 0 or h.eval(-1) == 0:
            return True
        coeffs = h.all_coeffs()
        if coeffs != coeffs[::-1] and coeffs != [-c for c in coeffs[::-1]]:
            continue
        # roots on the circle map to real u = t + 1/t in [-2, 2]
        r = sympy.Poly(sympy.resultant(h.as_expr(), _t ** 2 - _u * _t + 1, _t), _u)
        if r.count_roots(-2, 2) > 0:
            return True
    return False


def anosov_check(a: TorusAut) -> bool:
    """True iff no eigenvalue of the linear part has modulus 1."""
    return not has_unit_circle_root(_integer_poly(a))


# ---------------------------------------------------------------------------
# eigen data for 2x2 linear parts


def _eigenvalues(m) -> tuple[QuadNumber, QuadNumber]:
    tr = m[0][0] + m[1][1]
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    root = (tr * tr - det * 4).sqrt()
    return (tr + root) / 2, (tr - root) / 2


def _eigvec(m, lam: QuadNumber) -> tuple[QuadNumber, QuadNumber]:
    a, b = m[0]
    c, d = m[1]
    if not b.is_zero():
        return (ONE, (lam - a) / b)
    if lam != a:
        return (ZERO, ONE)
    if d != a:
        return (ONE, c / (a - d))
    return (ONE, ZERO) if c.is_zero() else (ZERO, ONE)


def _to_sympy(x: QuadNumber):
    r = lambda f: sympy.Rational(f.numerator, f.denominator)
    return r(x.a) + r(x.b) * sympy.sqrt(x.d)


def _real_algebraic_to_quad(expr) -> QuadNumber:
    """Exact conversion of a real algebraic number of degree <= 2."""
    mp = sympy.Poly(sympy.minimal_polynomial(expr, _t), _t)
    if mp.degree() > 2:
        raise FieldTowerExceeded(f"{expr} has degree {mp.degree()}")
    cs = [Fraction(int(c.p), int(c.q)) for c in mp.all_coeffs()]
    if mp.degree() == 1:
        return Q(-cs[1] / cs[0])
    a, b, c = cs
    root = QuadNumber.sqrt_of(b * b - 4 * a * c)
    target = float(sympy.re(sympy.N(expr, 30)))
    cands = [(-b + root) / (2 * a), (-b - root) / (2 * a)]
    return min(cands, key=lambda z: abs(float(z) - target))


def spectral_radius_sq(a: TorusAut) -> QuadNumber:
    """``rho(L)^2`` computed exactly."""
    try:
        l1, l2 = _eigenvalues(a.matrix)
        return max(l1.abs_sq(), l2.abs_sq())
    except FieldTowerExceeded:
        pass
    # rho^2 is the largest real root of the rational polynomial whose roots
    # are the eigenvalues of L (x) conj(L) and of its Galois conjugate
    k = h11_matrix(a)
    d = next((v.d for row in k for v in row if v.d != 0), 0)
    cp = sympy.Matrix([[_to_sympy(v) for v in row] for row in k]).charpoly(_t).as_expr()
    if d:
        cp = sympy.expand(cp * cp.subs(sympy.sqrt(d), -sympy.sqrt(d)))
    best = max(sympy.Poly(cp, _t).real_roots())
    return _real_algebraic_to_quad(best)


@dataclass(frozen=True)
class Direction:
    eigenvalue: QuadNumber
    vector: tuple[QuadNumber, QuadNumber]
    role: str  # "unstable" or "stable"


def stable_unstable_slopes(a: TorusAut) -> tuple[Direction, Direction]:
    if not a.is_2x2:
        raise ValueError("slopes are defined for 2x2 linear parts")
    if not anosov_check(a):
        raise ValueError("the automorphism is not Anosov")
    m = a.matrix
    out = []
    for lam in _eigenvalues(m):
        v = _eigvec(m, lam)
        img = (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])
        if img != (lam * v[0], lam * v[1]):
            raise ArithmeticError("eigenvector certification failed")
        out.append(Direction(lam, v, "unstable" if lam.modulus_cmp_one() > 0 else "stable"))
    out.sort(key=lambda d: d.role != "unstable")
    return out[0], out[1]


def inverse_aut(a: TorusAut) -> TorusAut:
    if not a.is_2x2:
        m = sympy.Matrix(a.rows).inv()
        return TorusAut(a.lattice, [[int(v) for v in m.row(i)] for i in range(4)])
    (p, q), (r, s) = a.matrix
    det = p * s - q * r
    inv = det.inverse()
    return TorusAut(a.lattice, [[s * inv, -q * inv], [-r * inv, p * inv]])


# ---------------------------------------------------------------------------
# growth on H^{1,1}


def h11_matrix(a: TorusAut) -> list[list[QuadNumber]]:
    if not a.is_2x2:
        raise ValueError("the H^{1,1} model needs a 2x2 complex-linear part")
    m = a.rows
    return kron(m, [[v.cconj() for v in row] for row in m])


def _nilpotency_index(n: Matrix) -> int:
    power, k = n, 1
    while not is_zero_matrix(power):
        power = matmul(power, n)
        k += 1
        if k > len(n) + 1:
            return -1
    return k


def h11_growth(a: TorusAut) -> GrowthClass:
    k = h11_matrix(a)
    if matrix_order(k, 12).finite:
        return GrowthClass(BOUNDED)
    # |det L| = 1, so rho(L) > 1 exactly when no eigenvalue lies on the circle
    if anosov_check(a):
        try:
            return GrowthClass(EXPONENTIAL, spectral_radius_sq(a))
        except FieldTowerExceeded:
            return GrowthClass(EXPONENTIAL)
    # quasi-unipotent: eigenvalues are roots of unity of order dividing 120
    n = mat_sub(matpow(k, 120), identity(4, ONE, ZERO))
    j = _nilpotency_index(n)
    if j == 3:
        return GrowthClass(QUADRATIC)
    if j == 2:
        return GrowthClass(LINEAR)
    raise ArithmeticError(f"unexpected Jordan structure (nilpotency index {j})")


# ---------------------------------------------------------------------------
# finite symmetries


@dataclass(frozen=True)
class CrystallographicReport:
    order: int
    euler_phi: int
    passes: bool
    diagnostic: str


def crystallographic_constraint(n: TorusAut | Sequence[Sequence[Number]], bound: int = 64) -> CrystallographicReport:
    rows = n.rows if isinstance(n, TorusAut) else [list(r) for r in n]
    mo = matrix_order(rows, bound)
    if not mo.finite:
        raise InfiniteOrder(f"no power up to {bound} is the identity")
    ok = mo.order in (1, 2, 3, 4, 6)
    if ok:
        diag = f"order {mo.order} satisfies phi(m) in {{1, 2}}"
    else:
        diag = (
            f"order {mo.order} has phi = {mo.euler_phi}; such a symmetry cannot commute "
            "with an Anosov automorphism as a complex-linear map of a 2-torus"
        )
    return CrystallographicReport(mo.order, mo.euler_phi, ok, diag)


@dataclass(frozen=True)
class HomothetyReport:
    commutes: bool
    is_homothety: Optional[bool]
    ratio: Optional[QuadNumber]
    order: int
    implication_holds: bool
    note: str = "translation parts are ignored"


def _scalar(m) -> Optional[QuadNumber]:
    if m[0][1] == 0 and m[1][0] == 0 and m[0][0] == m[1][1]:
        return Q(m[0][0])
    return None


def homothety_and_commutation(m: TorusAut, phi: TorusAut) -> HomothetyReport:
    if m.lattice != phi.lattice:
        raise LatticeMismatch(f"{m.lattice} vs {phi.lattice}")
    mo = matrix_order(m.rows, 64)
    if not mo.finite:
        raise InfiniteOrder("the symmetry must have finite order")
    if not anosov_check(phi):
        raise ValueError("phi is not Anosov")
    commutes = matmul(m.rows, phi.rows) == matmul(phi.rows, m.rows)
    ratio = _scalar(m.matrix) if m.is_2x2 else None
    is_h = (ratio is not None) if m.is_2x2 else None
    implication = (not commutes) or bool(is_h) or is_h is None
    return HomothetyReport(commutes, is_h, ratio, mo.order, implication)


TORUS = "Torus"
KUMMER = "Kummer"
RATIONAL_ZI4 = "RationalZi4"
RATIONAL_ZJ3 = "RationalZj3"
RATIONAL_ZJ6 = "RationalZj6"


def root_of_unity_order(xi: QuadNumber, bound: int = 12) -> Optional[int]:
    p = ONE
    for k in range(1, bound + 1):
        p = p * xi
        if p == 1:
            return k
    return None


def classify_quotient(lattice: str, generator: Number | TorusAut) -> str:
    lat = lattice_kind(lattice)
    if isinstance(generator, TorusAut):
        if generator.lattice != lat:
            raise LatticeMismatch(f"{generator.lattice} vs {lat}")
        xi = _scalar(generator.matrix) if generator.is_2x2 else _z4_scalar(generator)
        if xi is None:
            raise InconsistentLattice("the generator is not a homothety")
    else:
        xi = Q(generator)
    order = root_of_unity_order(xi)
    if order is None:
        raise InfiniteOrder(f"{xi} is not a root of unity")
    if order == 1:
        return TORUS
    if order == 2:
        return KUMMER
    if order == 4 and lat == ZI:
        return RATIONAL_ZI4
    if order == 3 and lat == ZJ:
        return RATIONAL_ZJ3
    if order == 6 and lat == ZJ:
        return RATIONAL_ZJ6
    raise InconsistentLattice(f"a homothety of order {order} does not preserve a {lat} lattice")


def _z4_scalar(a: TorusAut) -> Optional[QuadNumber]:
    m = a.rows
    if m == identity(4):
        return ONE
    if m == [[-v for v in row] for row in identity(4)]:
        return Q(-1)
    return None
