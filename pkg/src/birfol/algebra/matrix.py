"""Small exact matrices: 2x2 integer matrices, eigen data, orders, Kronecker products."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

import sympy

from ..errors import NotUnimodular
from .quad import ONE, ZERO, QuadNumber, Q

Matrix = list[list[Any]]


@dataclass(frozen=True)
class IntMatrix2:
    """The integer matrix ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for name in "abcd":
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise TypeError(f"entry {name}={v!r} is not an integer")
            object.__setattr__(self, name, int(v))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix2:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> IntMatrix2:
        return cls(1, 0, 0, 1)

    @property
    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def is_unimodular(self) -> bool:
        return abs(self.det) == 1

    def transpose(self) -> IntMatrix2:
        return IntMatrix2(self.a, self.c, self.b, self.d)

    def abs(self) -> IntMatrix2:
        return IntMatrix2(abs(self.a), abs(self.b), abs(self.c), abs(self.d))

    def is_nonnegative(self) -> bool:
        return min(self.entries()) >= 0

    def is_nonpositive(self) -> bool:
        return max(self.entries()) <= 0

    def __matmul__(self, o: IntMatrix2) -> IntMatrix2:
        return IntMatrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __neg__(self) -> IntMatrix2:
        return IntMatrix2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> IntMatrix2:
        det = self.det
        if abs(det) != 1:
            raise NotUnimodular(f"det = {det}, matrix is not invertible over Z")
        return IntMatrix2(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def __pow__(self, n: int) -> IntMatrix2:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = IntMatrix2.identity(), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, v: Sequence[Any]) -> tuple[Any, Any]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


@dataclass(frozen=True)
class Eigen2:
    values: tuple[QuadNumber, QuadNumber]
    vectors: tuple[Optional[tuple[QuadNumber, QuadNumber]], Optional[tuple[QuadNumber, QuadNumber]]]
    repeated: bool

    @property
    def spectral_radius(self) -> QuadNumber:
        """Largest modulus.  For a complex pair this is ``sqrt(|l|^2)`` (own radicand)."""
        l1, l2 = self.values
        if l1.d < 0:
            return QuadNumber.sqrt_of(l1.abs_sq().as_fraction())
        return max(abs(l1), abs(l2))

    def spectral_radius_cmp_one(self) -> int:
        return max(v.modulus_cmp_one() for v in self.values)


def _eigvec(m: IntMatrix2, lam: QuadNumber) -> Optional[tuple[QuadNumber, QuadNumber]]:
    # first nonzero coordinate normalized to 1
    if m.b != 0:
        return (ONE, (lam - m.a) / m.b)
    # lower triangular: eigenvalues a, d
    if lam != m.a:
        return (ZERO, ONE)
    if m.d != m.a:
        return (ONE, Q(Fraction(m.c, m.a - m.d)))
    return (ZERO, ONE) if m.c != 0 else (ONE, ZERO)


def eigen2(m: IntMatrix2) -> Eigen2:
    """Exact eigenvalues (larger real root first) and normalized eigenvectors."""
    disc = m.trace * m.trace - 4 * m.det
    root = QuadNumber.sqrt_of(disc)
    l1 = (root + m.trace) / 2
    l2 = (-root + m.trace) / 2
    if disc != 0:
        return Eigen2((l1, l2), (_eigvec(m, l1), _eigvec(m, l2)), False)
    if m.b == 0 and m.c == 0:
        return Eigen2((l1, l2), ((ONE, ZERO), (ZERO, ONE)), True)
    return Eigen2((l1, l2), (_eigvec(m, l1), None), True)


# ---------------------------------------------------------------------------
# general square matrices given as lists of rows


def identity(n: int, one: Any = 1, zero: Any = 0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for t in range(1, k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def matpow(a: Matrix, n: int) -> Matrix:
    size = len(a)
    one = a[0][0] * 0 + 1
    result = identity(size, one, one * 0)
    base = a
    while n:
        if n & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        n >>= 1
    return result


def kron(a: Matrix, b: Matrix) -> Matrix:
    return [
        [a[i][j] * b[k][l] for j in range(len(a[0])) for l in range(len(b[0]))]
        for i in range(len(a))
        for k in range(len(b))
    ]


def is_identity(a: Matrix) -> bool:
    return all(a[i][j] == (1 if i == j else 0) for i in range(len(a)) for j in range(len(a)))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def charpoly(a: Matrix) -> list[int]:
    """Characteristic polynomial ``det(t I - A)`` of an integer matrix, low degree first."""
    n = len(a)
    # Faddeev-LeVerrier over Q
    m = [[Fraction(0)] * n for _ in range(n)]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    A = [[Fraction(x) for x in row] for row in a]
    for k in range(1, n + 1):
        am = matmul(A, m) if k > 1 else [[Fraction(0)] * n for _ in range(n)]
        m = [[am[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)] for i in range(n)]
        am = matmul(A, m)
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return [int(c) for c in coeffs]


@dataclass(frozen=True)
class MatrixOrder:
    order: Optional[int]
    euler_phi: Optional[int]

    @property
    def finite(self) -> bool:
        return self.order is not None


def euler_phi(n: int) -> int:
    return int(sympy.totient(n))


def matrix_order(n: Matrix | IntMatrix2, bound: int = 64) -> MatrixOrder:
    """Smallest ``k <= bound`` with ``N^k = Id``; ``MatrixOrder(None, None)`` otherwise."""
    rows = n.rows if isinstance(n, IntMatrix2) else [list(r) for r in n]
    power = rows
    for k in range(1, bound + 1):
        if is_identity(power):
            return MatrixOrder(k, euler_phi(k))
        power = matmul(power, rows)
    return MatrixOrder(None, None)


def rank(a: Matrix) -> int:
    """Rank over the field of the entries (Fractions or QuadNumbers)."""
    m = [list(r) for r in a]
    rows, cols = len(m), len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / Q(m[r][c])
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = Q(m[i][c]) * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r
