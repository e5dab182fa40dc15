"""Monomial birational maps ``(z, w) -> (z^a w^b, z^c w^d)`` of P1 x P1."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra.matrix import IntMatrix2, eigen2, matrix_order
from .algebra.quad import ONE, Number, Q, QuadNumber
from .errors import ComplexEigenvalues, NotStabilizable, NotUnimodular

BOUNDED = "Bounded"
LINEAR = "Linear"
QUADRATIC = "Quadratic"
EXPONENTIAL = "Exponential"


@dataclass(frozen=True)
class MonomialMap:
    matrix: IntMatrix2

    def __post_init__(self) -> None:
        m = self.matrix
        if not isinstance(m, IntMatrix2):
            m = IntMatrix2.from_rows(m)
            object.__setattr__(self, "matrix", m)
        if not m.is_unimodular():
            raise NotUnimodular(f"|det {m}| = {abs(m.det)} != 1")

    @classmethod
    def of(cls, a: int, b: int, c: int, d: int) -> MonomialMap:
        return cls(IntMatrix2(a, b, c, d))

    def __matmul__(self, other: MonomialMap) -> MonomialMap:
        """Composition ``self o other``."""
        return MonomialMap(self.matrix @ other.matrix)

    def __pow__(self, n: int) -> MonomialMap:
        return MonomialMap(self.matrix ** n)

    def __call__(self, z: Number, w: Number) -> tuple[QuadNumber, QuadNumber]:
        m = self.matrix
        z, w = Q(z), Q(w)
        return (z ** m.a * w ** m.b, z ** m.c * w ** m.d)

    def __str__(self) -> str:
        return f"monomial {self.matrix}"


KUMMER = MonomialMap(IntMatrix2(-1, 0, 0, -1))


def pullback_action(f: MonomialMap) -> IntMatrix2:
    """Action on H^{1,1}(P1 x P1) in the basis of the two ruling classes.

    Columns are ``(|a|, |b|)`` and ``(|c|, |d|)``: the preimage of a fiber
    ``{z = const}`` has bidegree ``(|a|, |b|)``.
    """
    m = f.matrix
    return IntMatrix2(abs(m.a), abs(m.c), abs(m.b), abs(m.d))


def degree_sequence(f: MonomialMap, n: int) -> list[IntMatrix2]:
    """``[(f^k)^* for k = 1..n]``, iterating the exponent matrix first."""
    if n > 64:
        raise ValueError("n must be at most 64")
    out, power = [], f.matrix
    for _ in range(n):
        out.append(pullback_action(MonomialMap(power)))
        power = power @ f.matrix
    return out


def as_identity_holds(f: MonomialMap, n: int = 8) -> tuple[bool, Optional[int]]:
    """Check ``(f^k)^* = (f^*)^k`` for ``k <= n``; returns the first failing ``k``."""
    p = pullback_action(f)
    for k, dk in enumerate(degree_sequence(f, n), start=1):
        if dk != p ** k:
            return False, k
    return True, None


SIGNED_PERMUTATIONS = tuple(
    IntMatrix2(a, b, c, d)
    for a, b, c, d in itertools.product((-1, 0, 1), repeat=4)
    if abs(a * d - b * c) == 1 and (a == 0) == (d == 0) and (b == 0) == (c == 0) and (a == 0) != (b == 0)
)


def is_algebraically_stable(f: MonomialMap) -> bool:
    """Same-sign exponent matrix, possibly after conjugating by an automorphism of P1 x P1.

    Signed permutation matrices are themselves automorphisms.
    The automorphisms ``z -> 1/z``, ``w -> 1/w`` and the swap act on
    exponent matrices as signed permutations, and conjugation by an
    automorphism preserves algebraic stability.
    """
    m = f.matrix
    if m in SIGNED_PERMUTATIONS:
        return True  # an automorphism of P1 x P1
    for s in SIGNED_PERMUTATIONS:
        c = s @ m @ s.inverse()
        if c.is_nonnegative() or c.is_nonpositive():
            return True
    return False


def _spectral_cmp_one(m: IntMatrix2) -> int:
    return eigen2(m).spectral_radius_cmp_one()


def is_hyperbolic(m: IntMatrix2) -> bool:
    return _spectral_cmp_one(m) > 0


def _is_reduced(xi: QuadNumber) -> bool:
    c = xi.conj()
    return xi > 1 and c < 0 and c > -1


def reduce_to_periodic(xi: QuadNumber, limit: int = 10_000) -> tuple[IntMatrix2, QuadNumber]:
    """Continued-fraction steps ``x -> 1/(x - floor x)`` until ``xi`` is reduced.

    Returns ``(P, xi_k)`` with ``P`` acting by Moebius transformation on
    slopes ``x = v1/v2`` and ``P(xi) = xi_k``.
    """
    p = IntMatrix2.identity()
    for _ in range(limit):
        if _is_reduced(xi):
            return p, xi
        a = xi.floor()
        step = IntMatrix2(0, 1, 1, -a)
        p = step @ p
        xi = (xi - a).inverse()
    raise NotStabilizable("continued fraction did not become periodic")


def _expanding_slope(m: IntMatrix2) -> QuadNumber:
    e = eigen2(m)
    l1, l2 = e.values
    v = e.vectors[0] if abs(l1) > abs(l2) else e.vectors[1]
    if v[1].is_zero():
        raise NotStabilizable("rational eigen-direction")
    return v[0] / v[1]


def _conj(p: IntMatrix2, m: IntMatrix2) -> IntMatrix2:
    return p @ m @ p.inverse()


def stabilize_conjugate(f: MonomialMap, bound: int = 50) -> tuple[IntMatrix2, MonomialMap]:
    """``P`` in GL(2, Z) with ``P M P^-1`` same-sign (nonnegative when ``tr M >= 0``).

    A hyperbolic matrix with negative trace is only conjugate to a
    nonpositive matrix, which is algebraically stable as well.
    """
    m = f.matrix
    if not is_hyperbolic(m):
        raise NotStabilizable(f"{m} is not hyperbolic")
    want = IntMatrix2.is_nonnegative if m.trace >= 0 else IntMatrix2.is_nonpositive
    if want(m):
        return IntMatrix2.identity(), f
    p, _ = reduce_to_periodic(_expanding_slope(m))
    c = _conj(p, m)
    if want(c):
        return p, MonomialMap(c)
    for q in _bounded_candidates(bound):
        c = _conj(q, m)
        if want(c):
            return q, MonomialMap(c)
    raise NotStabilizable(f"no conjugator with entries up to {bound}")


def _bounded_candidates(bound: int):
    # small norms first
    for n in range(1, bound + 1):
        for a, b, c, d in itertools.product(range(-n, n + 1), repeat=4):
            if max(abs(a), abs(b), abs(c), abs(d)) != n:
                continue
            if abs(a * d - b * c) == 1:
                yield IntMatrix2(a, b, c, d)


@dataclass(frozen=True)
class GrowthClass:
    tag: str
    rate: Optional[QuadNumber] = None

    def __str__(self) -> str:
        return self.tag if self.rate is None else f"{self.tag}({self.rate})"


def growth_class(f: MonomialMap) -> GrowthClass:
    m = f.matrix
    if matrix_order(m, 12).finite:
        return GrowthClass(BOUNDED)
    e = eigen2(m)
    if e.spectral_radius_cmp_one() > 0:
        return GrowthClass(EXPONENTIAL, e.spectral_radius)
    return GrowthClass(LINEAR)


# ---------------------------------------------------------------------------
# invariant linear foliations


@dataclass(frozen=True)
class LinearFoliation:
    """The logarithmic form ``c0 dz/z + c1 dw/w`` (equivalently ``c0 w dz + c1 z dw``)."""

    c0: QuadNumber
    c1: QuadNumber
    eigenvalue: Optional[QuadNumber] = None

    @property
    def alpha(self) -> Optional[QuadNumber]:
        """``alpha`` in ``w dz + alpha z dw``; ``None`` for the degenerate form ``dw/w``."""
        if self.c0.is_zero():
            return None
        return self.c1 / self.c0

    def is_rational(self) -> bool:
        return self.alpha is None or self.alpha.is_rational


def pullback_log_form(f: MonomialMap, coeffs: Sequence[Number]) -> tuple[QuadNumber, QuadNumber]:
    """Coefficients of ``f^*(c0 dz/z + c1 dw/w)``, namely ``tM (c0, c1)``."""
    c0, c1 = Q(coeffs[0]), Q(coeffs[1])
    return f.matrix.transpose().apply((c0, c1))


def invariant_foliations(f: MonomialMap) -> tuple[LinearFoliation, ...]:
    mt = f.matrix.transpose()
    if mt.trace ** 2 - 4 * mt.det < 0:
        raise ComplexEigenvalues(f"{f.matrix} has non-real eigenvalues")
    e = eigen2(mt)
    out = []
    for lam, v in zip(e.values, e.vectors):
        if v is None:
            continue
        lf = LinearFoliation(v[0], v[1], lam)
        image = pullback_log_form(f, (lf.c0, lf.c1))
        if image != (lam * lf.c0, lam * lf.c1):
            raise ArithmeticError("eigenvector check failed")
        out.append(lf)
    return tuple(out)


def commutes_with_kummer_involution(f: MonomialMap) -> bool:
    return (f @ KUMMER).matrix == (KUMMER @ f).matrix


# ---------------------------------------------------------------------------
# Bir-group trichotomy for linear foliations w dz + alpha z dw

FIBRATION = "Fibration"
INFINITE_MONOMIAL = "InfiniteMonomial"
FINITE = "Finite"


@dataclass(frozen=True)
class BirClassification:
    tag: str
    witness: Optional[IntMatrix2] = None
    eigenvalue: Optional[QuadNumber] = None
    relation: Optional[tuple[int, int, int]] = None
    bounds: tuple[int, int] = (10, 50)
    method: str = ""
    certificate: tuple = ()
    caveat: Optional[str] = None


def minimal_relation(alpha: QuadNumber) -> tuple[int, int, int]:
    """Primitive integers ``(A, B, C)`` with ``A alpha^2 + B alpha + C = 0``, ``A > 0``."""
    s = alpha.trace()
    n = alpha.norm()
    den = math.lcm(s.denominator, n.denominator)
    A, B, C = den, int(-s * den), int(n * den)
    g = math.gcd(math.gcd(A, B), C)
    return A // g, B // g, C // g


def _eigen_matrix(a: int, t: int, rel: tuple[int, int, int]) -> IntMatrix2:
    A, B, C = rel
    return IntMatrix2(a, t * A, -t * C, a - t * B)


def _alternating(n: int, start: int):
    yield from ([0] if start == 0 else [])
    for k in range(1, n + 1):
        yield k
        yield -k


def witness_from_continued_fraction(alpha: QuadNumber) -> IntMatrix2:
    """Integer matrix with eigenvector ``(1, alpha)`` and spectral radius > 1 (real quadratic ``alpha``)."""
    xi = alpha.inverse()  # slope v1/v2 of (1, alpha)
    p, xk = reduce_to_periodic(xi)
    # walk one period of the purely periodic expansion
    f = IntMatrix2.identity()
    x = xk
    for _ in range(10_000):
        a = x.floor()
        f = f @ IntMatrix2(a, 1, 1, 0)
        x = (x - a).inverse()
        if x == xk:
            break
    else:
        raise ArithmeticError("period not found")
    return p.inverse() @ f @ p


def bir_group_classify(alpha: Number, t_bound: int = 10, a_bound: int = 50) -> BirClassification:
    alpha = Q(alpha)
    if alpha.is_zero():
        raise ValueError("alpha must be nonzero")
    bounds = (t_bound, a_bound)
    if alpha.is_rational:
        return BirClassification(FIBRATION, bounds=bounds, method="rational")
    rel = minimal_relation(alpha)
    if alpha.d < 0:
        return _imaginary_finite(alpha, rel, bounds)
    vec = (ONE, alpha)
    for t in _alternating(t_bound, 1):
        for a in _alternating(a_bound, 0):
            m = _eigen_matrix(a, t, rel)
            if not m.is_unimodular() or not is_hyperbolic(m):
                continue
            lam = vec[0] * m.a + vec[1] * m.b
            assert m.apply(vec) == (lam * vec[0], lam * vec[1])
            return BirClassification(INFINITE_MONOMIAL, m, lam, rel, bounds, "bounded search")
    m = witness_from_continued_fraction(alpha)
    lam = m.a + alpha * m.b
    return BirClassification(INFINITE_MONOMIAL, m, lam, rel, bounds, "continued fraction")


def _imaginary_finite(alpha: QuadNumber, rel, bounds) -> BirClassification:
    # det M = a^2 - a t B + t^2 A C is positive definite, so det = 1 has
    # finitely many solutions: 4 det = (2a - tB)^2 + t^2 (4AC - B^2).
    A, B, C = rel
    disc = 4 * A * C - B * B
    tmax = math.isqrt(4 // disc) if disc <= 4 else 0
    sols = []
    for t in range(-tmax, tmax + 1):
        for a in range(-3 - abs(t * B), 4 + abs(t * B)):
            m = _eigen_matrix(a, t, rel)
            if m.det == 1:
                order = matrix_order(m, 12).order
                if order is None:
                    raise ArithmeticError(f"{m} should have finite order")
                sols.append((str(m), order))
    return BirClassification(FINITE, relation=rel, bounds=bounds, method="norm equation",
                             certificate=tuple(sols))
