from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from birfol.algebra.quad import SQRT2, Q
from birfol.blowup import (
    P2,
    affine_model,
    base_model,
    blow_up,
    check_homologous,
    check_transitions,
    curve_points,
    cs_at,
    exceptional_ids,
    export_dual_graph,
    flip,
    flip_model,
    intersection_matrix,
    is_dicritical,
    is_negative_definite,
    is_tree,
    linear_index,
    monomial_substitution,
    p1xp1_model,
    riccati_form,
    seidenberg_reduce,
    tf_dot_curve,
    verify_camacho_sad,
)
from birfol.errors import BudgetExceeded, NonReducedOnCurve, NotInvariant, WouldCreateNonReduced
from birfol.local import NON_REDUCED, SADDLE_NODE, classify_singularity, dulac_invariant, parse_one_form

from conftest import from_triple

LAMBDA_TEXT = {"2": "2", "sqrt(2)": "sqrt(2)", "1+sqrt(2)": "(1+sqrt(2))", "-1/3": "(-1/3)", "sqrt(3)": "sqrt(3)"}


def linear(lam_text: str):
    return parse_one_form(f"x*dy + {lam_text}*y*dx")


# -- Camacho-Sad on exceptional curves, against the two-chart residue oracle --------


@pytest.mark.parametrize("key", sorted(LAMBDA_TEXT))
def test_exceptional_cs_matches_oracle(key, oracle):
    want = oracle["exceptional_cs"][key]
    model = blow_up(affine_model(linear(LAMBDA_TEXT[key])), "A", (0, 0))
    check = verify_camacho_sad(model, "E1")
    assert check.ok and check.cs_sum == from_triple(want["sum"]) == -1
    by_chart = {t[0]: t[2] for t in check.terms}
    assert by_chart["E1a"] == from_triple(want["chart_a"])
    assert by_chart["E1b"] == from_triple(want["chart_b"])


@pytest.mark.parametrize("key", sorted(LAMBDA_TEXT))
def test_strict_transform_index_drops_by_one(key, oracle):
    want = oracle["exceptional_cs"][key]
    model = blow_up(base_model(linear(LAMBDA_TEXT[key]), P2), "A", (0, 0))
    before = from_triple(want["original_y0"])
    after = cs_at(model, "Ly", "E1a", (0, 0))
    assert after == from_triple(want["strict_y0"]) == before - 1
    assert model.curve("Ly").self_int == 0


def test_p2_lines_sum_after_blowup():
    model = blow_up(base_model(linear("sqrt(2)"), P2), "A", (0, 0))
    for cid in ("Lx", "Ly", "Linf", "E1"):
        check = verify_camacho_sad(model, cid)
        assert check.ok and check.reduced


@pytest.mark.parametrize("alpha", ["3", "sqrt(2)", "(-2/5)", "(1+sqrt(3))"])
def test_riccati_fiber_cs_opposite(alpha):
    model = p1xp1_model(parse_one_form(f"w*dz + {alpha}*z*dw"))
    check = verify_camacho_sad(model, "Z0")
    assert check.ok and check.cs_sum == 0 == check.self_int
    a, b = (t[2] for t in check.terms)
    assert a == -b


def test_cs_check_requires_invariance():
    model = p1xp1_model(parse_one_form("w*dz + 3*z*dw"), extra_fibers=[1])
    with pytest.raises(NotInvariant):
        verify_camacho_sad(model, "Z1")
    with pytest.raises(NonReducedOnCurve):
        verify_camacho_sad(model, "Z0", require_reduced=True)


# -- Dulac invariant and monomial substitution ------------------------------------------


@pytest.mark.parametrize("key", ["3,1", "5,2", "7,2", "2,3"])
def test_dulac_drop(key, oracle):
    lam, p = map(int, key.split(","))
    f = parse_one_form(f"x*(1+{lam}*y^{p})*dy - y^{p + 1}*dx")
    assert dulac_invariant(f) == oracle["dulac"][key]["before"]
    model = blow_up(affine_model(f), "A", (0, 0))
    g = model.chart("E1b").form
    rep = classify_singularity(g, (0, 0))
    assert rep.kind == SADDLE_NODE
    assert dulac_invariant(g) == oracle["dulac"][key]["after"] == lam - 1


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("lam", ["2", "sqrt(2)", "(-1/3)"])
def test_monomial_substitution_shifts_index(n, lam):
    f = parse_one_form(f"y*dx + {lam}*x*dy")
    g = monomial_substitution(f, [[1, n], [0, 1]])
    assert linear_index(g) == linear_index(f) + n


# -- Seidenberg ----------------------------------------------------------------------


@pytest.mark.parametrize("key", ["1/1", "2/1", "3/1", "3/2", "4/3", "5/2", "5/3", "7/5", "8/5"])
def test_seidenberg_count_matches_euclid(key, oracle):
    p, q = map(int, key.split("/"))
    trace = seidenberg_reduce(parse_one_form(f"{q}*x*dy - {p}*y*dx"))
    assert trace.is_reduced
    assert trace.count == oracle["cf_counts"][key]
    ids = exceptional_ids(trace.model)
    assert is_tree(trace.model, ids)
    assert is_negative_definite(intersection_matrix(trace.model, ids))
    assert check_transitions(trace.model)


@settings(max_examples=15)
@given(st.integers(1, 9), st.integers(1, 9))
def test_seidenberg_count_property(p, q):
    g = gcd(p, q)
    p, q = p // g, q // g
    trace = seidenberg_reduce(parse_one_form(f"{q}*x*dy - {p}*y*dx"))
    quotients, a, b = [], p, q
    while b:
        quotients.append(a // b)
        a, b = b, a % b
    assert trace.count == sum(quotients)
    assert len(trace.dicritical) == 1


def test_seidenberg_examples():
    assert seidenberg_reduce(parse_one_form("x*dy + y*dx")).count == 0
    trace = seidenberg_reduce(parse_one_form("2*y*dx - x*dy"))
    assert trace.count == 2 and trace.dicritical == ("E2",)
    radial = seidenberg_reduce(parse_one_form("x*dy - y*dx"))
    assert radial.count == 1 and radial.dicritical == ("E1",)
    with pytest.raises(BudgetExceeded):
        seidenberg_reduce(parse_one_form("8*x*dy - 5*y*dx"), max_blowups=2)


def test_reduced_points_stay_reduced():
    trace = seidenberg_reduce(parse_one_form("x*(1+3*y)*dy - y^2*dx"))
    assert trace.count == 0
    model = blow_up(affine_model(parse_one_form("x*dy + sqrt(2)*y*dx")), "A", (0, 0))
    for c in model.charts[1:]:
        assert classify_singularity(c.form, (0, 0)).kind != NON_REDUCED


def test_dicritical_flags():
    assert is_dicritical(affine_model(parse_one_form("x*dy - y*dx")), "A", (0, 0))
    assert not is_dicritical(affine_model(linear("sqrt(2)")), "A", (0, 0))
    assert not is_dicritical(affine_model(parse_one_form("2*y*dx - x*dy")), "A", (0, 0))


# -- dual graph ------------------------------------------------------------------------


def test_dual_graph_examples():
    dot = export_dual_graph(p1xp1_model(riccati_form(SQRT2)))
    assert dot.count("[label=") == 4 and dot.count(" -- ") == 4
    one = export_dual_graph(blow_up(affine_model(linear("2")), "A", (0, 0)))
    assert '"E1" [label="E1 (-1)"' in one and " -- " not in one
    chain = blow_up(affine_model(parse_one_form("2*y*dx - x*dy")), "A", (0, 0))
    chain = blow_up(chain, "E1b", (0, 0))
    assert intersection_matrix(chain) == [[-2, 1], [1, -1]]
    assert export_dual_graph(chain) == export_dual_graph(chain)


def test_p2_intersections():
    model = base_model(linear("2"), P2)
    assert intersection_matrix(model) == [[1, 1, 1], [1, 1, 1], [1, 1, 1]]
    model = blow_up(model, "A", (0, 0))
    assert intersection_matrix(model, ["Lx", "Ly", "E1"]) == [[0, 0, 1], [0, 0, 1], [1, 1, -1]]


# -- Riccati bookkeeping and flips -------------------------------------------------------


def test_tf_dot_fibers():
    model = p1xp1_model(parse_one_form("w*dz + sqrt(2)*z*dw"), extra_fibers=[1])
    assert tf_dot_curve(model, "Z0") == 0
    assert tf_dot_curve(model, "Z1") == 0
    assert check_homologous(model, "Z0", "Z1") and check_homologous(model, "Z0", "Zinf")


def test_tf_dot_non_invariant_axis():
    model = base_model(parse_one_form("dy - 2*x*dx"), P2)
    pts = curve_points(model, "Ly")
    assert [p[2] for p in pts] == [(Q(0), Q(0))]
    # degree one foliation: L^2 - Tang = 1 - 1
    assert tf_dot_curve(model, "Ly") == 0


@pytest.mark.parametrize("lam", [SQRT2, Q(-4) / 3, 1 + SQRT2, Q(-5)])
def test_flip_shifts(lam):
    assert flip(lam, "p") == lam + 1
    assert flip(lam, "q") == lam - 1
    assert flip(flip(lam, "q"), "p") == lam


def test_flip_round_trip_and_model():
    assert flip(SQRT2, "p") == SQRT2 + 1
    assert flip(flip(SQRT2, "p"), "q") == SQRT2
    res = flip_model(SQRT2, "q")
    assert res.form.equal_up_to_unit(riccati_form(SQRT2 - 1))
    assert res.blown_up.curve("Z0").self_int == -1
    assert verify_camacho_sad(res.after, "Z0").ok


def test_flip_refuses_positive_rational():
    with pytest.raises(WouldCreateNonReduced):
        flip(Q(2), "p")
    with pytest.raises(WouldCreateNonReduced):
        flip(Q(-1) / 3, "p")
    with pytest.raises(ValueError):
        flip(SQRT2, "x")
