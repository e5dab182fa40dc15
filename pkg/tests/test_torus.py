from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from birfol.algebra.matrix import IntMatrix2, eigen2, kron, matpow, matrix_order
from birfol.algebra.quad import I, J, ONE, SQRT2, Q
from birfol.errors import InconsistentLattice, InfiniteOrder, LatticeMismatch
from birfol.monomial import BOUNDED, EXPONENTIAL, LINEAR, QUADRATIC, MonomialMap, growth_class
from birfol.torus import (
    E2,
    KUMMER,
    RATIONAL_ZI4,
    RATIONAL_ZJ3,
    RATIONAL_ZJ6,
    TORUS,
    Z4,
    ZI,
    ZJ,
    TorusAut,
    anosov_check,
    classify_quotient,
    crystallographic_constraint,
    h11_growth,
    h11_matrix,
    homothety,
    homothety_and_commutation,
    inverse_aut,
    lattice_kind,
    spectral_radius_sq,
    stable_unstable_slopes,
)

COMPANION_5 = [[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]


def unimodular(bound: int):
    for a, b, c, d in itertools.product(range(-bound, bound + 1), repeat=4):
        if abs(a * d - b * c) == 1:
            yield [[a, b], [c, d]]


def test_lattice_aliases():
    assert lattice_kind("zi") == ZI and lattice_kind("ZjSquare") == ZJ
    assert lattice_kind("e") == E2 and lattice_kind("z4") == Z4
    with pytest.raises(ValueError):
        lattice_kind("hexagonal")


def test_membership_is_enforced():
    with pytest.raises(LatticeMismatch):
        TorusAut(ZI, [[J, 0], [0, 1]])
    with pytest.raises(LatticeMismatch):
        TorusAut(ZI, [[2, 0], [0, 1]])
    TorusAut(ZJ, [[2 * J, J], [J, J]])


def test_growth_examples():
    assert h11_growth(TorusAut(ZI, [[1, 0], [1, 1]])).tag == QUADRATIC
    g = h11_growth(TorusAut(ZI, [[1, 2], [1, 1]]))
    assert g.tag == EXPONENTIAL and g.rate == (1 + SQRT2) ** 2
    assert h11_growth(TorusAut(ZI, [[0, -1], [1, 0]])).tag == BOUNDED
    assert h11_growth(homothety(ZI, I)).tag == BOUNDED
    assert h11_growth(TorusAut(ZI, [[2, 1], [1, 1]])).rate == Q("7/2") + Q("3/2") * Q(5).sqrt()


def test_monomial_and_torus_side_by_side():
    m = [[1, 0], [1, 1]]
    assert growth_class(MonomialMap(IntMatrix2.from_rows(m))).tag == LINEAR
    assert h11_growth(TorusAut(ZI, m)).tag == QUADRATIC
    m = [[1, 2], [1, 1]]
    rate = growth_class(MonomialMap(IntMatrix2.from_rows(m))).rate
    assert h11_growth(TorusAut(ZI, m)).rate == rate * rate


@pytest.mark.parametrize("n", [1, 2, 3, 10, 37, 100])
def test_unipotent_entry_law(n, oracle):
    k = h11_matrix(TorusAut(ZI, [[1, 0], [1, 1]]))
    top = max(abs(v) for row in matpow(k, n) for v in row)
    assert top == n * n == oracle["kron_unipotent_max"][str(n)]


def test_unipotent_entry_law_every_n():
    k = h11_matrix(TorusAut(ZI, [[1, 0], [1, 1]]))
    power = k
    for n in range(1, 101):
        assert max(abs(v) for row in power for v in row) == n * n
        power = [[sum(power[i][t] * k[t][j] for t in range(4)) for j in range(4)] for i in range(4)]


def test_spectral_radius_square_exhaustive():
    for m in unimodular(3):
        a = TorusAut(ZI, m)
        e = eigen2(IntMatrix2.from_rows(m))
        if anosov_check(a):
            assert e.spectral_radius_cmp_one() > 0
            rho = e.spectral_radius
            assert spectral_radius_sq(a) == rho * rho
        else:
            assert e.spectral_radius_cmp_one() <= 0


def test_anosov_with_gaussian_entries():
    # trace 3, det 1: eigenvalues (3 +- sqrt 5)/2
    g = h11_growth(TorusAut(ZI, [[2, I], [-I, 1]]))
    assert g.tag == EXPONENTIAL and g.rate == Q("7/2") + Q("3/2") * Q(5).sqrt()
    # trace 2, det 1, not the identity: a unipotent block
    a = TorusAut(ZI, [[1 + I, 1], [1, 1 - I]])
    assert not anosov_check(a) and h11_growth(a).tag == QUADRATIC
    assert not anosov_check(homothety(ZI, I))


@given(st.sampled_from(list(unimodular(2))))
def test_linear_vs_quadratic_cross_module(m):
    mono = growth_class(MonomialMap(IntMatrix2.from_rows(m))).tag
    tor = h11_growth(TorusAut(ZI, m)).tag
    expected = {BOUNDED: BOUNDED, LINEAR: QUADRATIC, EXPONENTIAL: EXPONENTIAL}
    assert tor == expected[mono]


def test_slopes_examples():
    u, s = stable_unstable_slopes(TorusAut(ZI, [[1, 2], [1, 1]]))
    assert u.role == "unstable" and s.role == "stable"
    assert u.vector[1] / u.vector[0] == SQRT2 / 2
    assert s.vector[1] / s.vector[0] == -SQRT2 / 2
    u, s = stable_unstable_slopes(TorusAut(ZI, [[3, 2], [4, 3]]))
    assert {u.vector[1] / u.vector[0], s.vector[1] / s.vector[0]} == {SQRT2, -SQRT2}
    with pytest.raises(ValueError):
        stable_unstable_slopes(TorusAut(ZI, [[1, 0], [1, 1]]))


@pytest.mark.parametrize("m", [[[2, 1], [1, 1]], [[1, 2], [1, 1]], [[3, 2], [4, 3]], [[5, 2], [2, 1]]])
def test_slopes_swap_under_inverse(m):
    a = TorusAut(ZI, m)
    u, s = stable_unstable_slopes(a)
    ui, si = stable_unstable_slopes(inverse_aut(a))
    slope = lambda d: d.vector[1] / d.vector[0]  # noqa: E731
    assert slope(ui) == slope(s) and slope(si) == slope(u)
    assert ui.eigenvalue * s.eigenvalue == 1


@pytest.mark.parametrize("lat,m", [
    (ZI, [[1 + I, 1], [1, 1 - I]]), (ZI, [[2, I], [-I, 1]]), (ZJ, [[2 * J, J], [J, J]]), (E2, [[2, 1], [1, 1]]),
])
def test_realification_is_a_homomorphism(lat, m):
    a = TorusAut(lat, m)
    r = a.realification()
    assert [list(map(int, row)) for row in r] == r
    assert abs(__import__("sympy").Matrix(r).det()) == 1
    sq = a.compose(a).realification()
    assert sq == [[sum(r[i][t] * r[t][j] for t in range(4)) for j in range(4)] for i in range(4)]


def test_matrix_order_exhaustive():
    orders = set()
    for m in unimodular(3):
        mo = matrix_order(m, 64)
        if mo.finite:
            orders.add(mo.order)
    assert orders == {1, 2, 3, 4, 6}


def test_crystallographic_constraint():
    rep = crystallographic_constraint(COMPANION_5)
    assert not rep.passes and rep.order == 5 and rep.euler_phi == 4
    assert crystallographic_constraint(homothety(ZJ, -J)).order == 6
    with pytest.raises(InfiniteOrder):
        crystallographic_constraint([[1, 1], [0, 1]])


def test_homothety_step():
    phi = TorusAut(ZI, [[2, 1], [1, 1]])
    rep = homothety_and_commutation(homothety(ZI, I), phi)
    assert rep.commutes and rep.is_homothety and rep.ratio == I and rep.order == 4
    swap = TorusAut(ZI, [[0, 1], [1, 0]])
    rep = homothety_and_commutation(swap, phi)
    assert not rep.commutes and rep.implication_holds


def test_quotient_labels():
    assert classify_quotient(ZI, ONE) == TORUS
    assert classify_quotient(E2, -1) == KUMMER
    assert classify_quotient(ZI, I) == RATIONAL_ZI4
    assert classify_quotient(ZJ, J) == RATIONAL_ZJ3
    assert classify_quotient(ZJ, -J) == RATIONAL_ZJ6
    assert classify_quotient(Z4, homothety(Z4, -1)) == KUMMER
    with pytest.raises(InconsistentLattice):
        classify_quotient(ZJ, I)
    with pytest.raises(InconsistentLattice):
        classify_quotient(ZI, TorusAut(ZI, [[0, 1], [1, 0]]))
    with pytest.raises(InfiniteOrder):
        classify_quotient(ZI, 1 + I)


def test_h11_is_kronecker_with_conjugate():
    a = TorusAut(ZI, [[1 + I, 1], [1, 1 - I]])
    conj = [[v.cconj() for v in row] for row in a.rows]
    assert h11_matrix(a) == kron(a.rows, conj)
