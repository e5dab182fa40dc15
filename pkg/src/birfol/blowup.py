"""Blowups of foliated surfaces kept as explicit atlases of affine charts.

A :class:`SurfaceModel` is a list of charts, each carrying the saturated
form of the foliation in its own coordinates, plus a registry of tracked
curves.  Every tracked curve is a line ``{var_i = value}`` in each chart it
meets, so all local index computations reduce to coordinate axes.

Points are assigned to exactly one chart by an ownership rule: a chart owns
the points whose coordinates listed in ``Chart.owned`` vanish.  Blown-up
centers are removed from their owning chart.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence

from .algebra.poly import BiPoly, UniPoly
from .algebra.quad import Number, Q, QuadNumber
from .algebra.roots import roots_in_tower
from .errors import (
    BudgetExceeded,
    NonReducedOnCurve,
    NotInvariant,
    UnsolvableSingularLocus,
    WouldCreateNonReduced,
)
from .local import (
    OneForm,
    Point,
    SaturationWarning,
    SingularityReport,
    camacho_sad_index,
    classify_singularity,
    singular_points,
    tangency_order,
    z_index,
)

AFFINE = "affine"
P2 = "p2"
P1XP1 = "p1xp1"


# ---------------------------------------------------------------------------
# pullbacks


def pullback(form: OneForm, x: BiPoly, y: BiPoly, names: Sequence[str]) -> tuple[OneForm, BiPoly]:
    """Pull ``form`` back along ``(x, y)`` (Laurent polynomials in the new variables).

    Returns the saturated form and the factor that was divided out, so
    ``pullback = factor * result`` up to the monomial used to clear poles.
    """
    a, b = form.a.substitute(x, y), form.b.substitute(x, y)
    A = a * x.diff(0) + b * y.diff(0)
    B = a * x.diff(1) + b * y.diff(1)
    di = -min(A.low_in(0), B.low_in(0), 0) if not (A.is_zero() and B.is_zero()) else 0
    dj = -min(A.low_in(1), B.low_in(1), 0) if not (A.is_zero() and B.is_zero()) else 0
    A, B = A.shift_exponents(di, dj), B.shift_exponents(di, dj)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SaturationWarning)
        out = OneForm(A, B, tuple(names))
    return out, out.divided


def monomial_substitution(form: OneForm, exps: Sequence[Sequence[int]], names=("u", "v")) -> OneForm:
    """Pull back along ``x = u^a v^b, y = u^c v^d`` for ``exps = [[a, b], [c, d]]``."""
    (a, b), (c, d) = exps
    return pullback(form, BiPoly.monomial(a, b), BiPoly.monomial(c, d), names)[0]


def linear_index(form: OneForm) -> QuadNumber:
    """``-CS`` of the axis ``{x=0}`` at the origin; equals ``l`` for ``y dx + l x dy``."""
    return -camacho_sad_index(form, 0, (0, 0))


# ---------------------------------------------------------------------------
# data model


@dataclass(frozen=True)
class Chart:
    name: str
    form: OneForm
    owned: frozenset = frozenset()
    removed: tuple = ()
    parent: Optional[str] = None
    substitution: Optional[tuple] = None  # parent coordinates as Laurent polynomials here

    def owns(self, p: Point) -> bool:
        if any(p == r for r in self.removed):
            return False
        return all(p[i].is_zero() for i in self.owned)


@dataclass(frozen=True)
class Location:
    chart: str
    axis: int
    value: QuadNumber = Q(0)


@dataclass(frozen=True)
class Curve:
    id: str
    self_int: int
    invariant: bool
    locations: tuple
    kind: str = "exceptional"
    chi: int = 2


@dataclass(frozen=True)
class BlowupRecord:
    index: int
    chart: str
    center: Point
    multiplicity: int
    curve: str
    dicritical: bool
    charts: tuple


@dataclass(frozen=True)
class SurfaceModel:
    atlas: str
    charts: tuple
    curves: tuple
    adjacency: tuple = ()  # ((id1, id2), count) with id1 < id2 in registry order
    blowups: tuple = ()

    # -- lookups --------------------------------------------------------
    def chart(self, name: str) -> Chart:
        for c in self.charts:
            if c.name == name:
                return c
        raise KeyError(f"no chart named {name!r}")

    def curve(self, cid: str) -> Curve:
        for c in self.curves:
            if c.id == cid:
                return c
        raise KeyError(f"no curve named {cid!r}")

    @property
    def chart_names(self) -> list[str]:
        return [c.name for c in self.charts]

    @property
    def curve_ids(self) -> list[str]:
        return [c.id for c in self.curves]

    def edges(self) -> dict:
        return {k: n for k, n in self.adjacency if n > 0}

    def with_(self, **kw) -> SurfaceModel:
        return replace(self, **kw)


def _quiet_form(a: BiPoly, b: BiPoly, names) -> OneForm:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SaturationWarning)
        return OneForm(a, b, tuple(names))


def _is_invariant_at(form: OneForm, loc: Location) -> bool:
    tangent = form.b if loc.axis == 0 else form.a
    return tangent.restrict(loc.axis, loc.value).is_zero()


def _edge_key(model_ids: list[str], u: str, v: str) -> tuple[str, str]:
    return (u, v) if model_ids.index(u) < model_ids.index(v) else (v, u)


def _registry(form_by_chart: dict, specs, edges) -> tuple[tuple, tuple]:
    curves = []
    for cid, self_int, kind, locs in specs:
        first = locs[0]
        inv = _is_invariant_at(form_by_chart[first.chart], first)
        curves.append(Curve(cid, self_int, inv, tuple(locs), kind))
    ids = [c.id for c in curves]
    adj = tuple((_edge_key(ids, u, v), 1) for u, v in edges)
    return tuple(curves), adj


def affine_model(form: OneForm) -> SurfaceModel:
    return SurfaceModel(AFFINE, (Chart("A", form),), ())


def p1xp1_model(form: OneForm, extra_fibers: Iterable[Number] = ()) -> SurfaceModel:
    """P1 x P1 with affine coordinates ``(z, w)``; ``s = 1/z`` and ``t = 1/w``.

    The fibers ``{z=0}, {z=inf}, {w=0}, {w=inf}`` are tracked; ``extra_fibers``
    adds fibers ``{z=c}`` of the first ruling.
    """
    z, w = form.names
    S, T = BiPoly.monomial(-1, 0), BiPoly.monomial(0, -1)
    X, Y = BiPoly.var(0), BiPoly.var(1)
    f1, _ = pullback(form, S, Y, ("s", w))
    f2, _ = pullback(form, X, T, (z, "t"))
    f3, _ = pullback(form, S, T, ("s", "t"))
    charts = (
        Chart("C0", form, frozenset()),
        Chart("C1", f1, frozenset({0}), parent="C0", substitution=(S, Y)),
        Chart("C2", f2, frozenset({1}), parent="C0", substitution=(X, T)),
        Chart("C3", f3, frozenset({0, 1}), parent="C0", substitution=(S, T)),
    )
    forms = {c.name: c.form for c in charts}
    zero = Q(0)
    specs = [
        ("Z0", 0, "fiber", [Location("C0", 0, zero), Location("C2", 0, zero)]),
        ("Zinf", 0, "fiber", [Location("C1", 0, zero), Location("C3", 0, zero)]),
        ("W0", 0, "fiber", [Location("C0", 1, zero), Location("C1", 1, zero)]),
        ("Winf", 0, "fiber", [Location("C2", 1, zero), Location("C3", 1, zero)]),
    ]
    edges = [("Z0", "W0"), ("Z0", "Winf"), ("Zinf", "W0"), ("Zinf", "Winf")]
    for c in extra_fibers:
        c = Q(c)
        if c.is_zero():
            continue
        cid = f"Z{c}"
        specs.append((cid, 0, "fiber", [Location("C0", 0, c), Location("C2", 0, c)]))
        edges += [(cid, "W0"), (cid, "Winf")]
    curves, adj = _registry(forms, specs, edges)
    return SurfaceModel(P1XP1, charts, curves, adj)


def p2_model(form: OneForm) -> SurfaceModel:
    """P2 with affine chart ``(x, y)``, plus ``(u, v) = (y/x, 1/x)`` and ``(p, q) = (x/y, 1/y)``."""
    x, y = form.names
    sub_b = (BiPoly.monomial(0, -1), BiPoly.monomial(1, -1))  # x = 1/v, y = u/v
    sub_c = (BiPoly.monomial(1, -1), BiPoly.monomial(0, -1))  # x = p/q, y = 1/q
    fb, _ = pullback(form, *sub_b, ("u", "v"))
    fc, _ = pullback(form, *sub_c, ("p", "q"))
    charts = (
        Chart("A", form, frozenset()),
        Chart("B", fb, frozenset({1}), parent="A", substitution=sub_b),
        Chart("C", fc, frozenset({0, 1}), parent="A", substitution=sub_c),
    )
    forms = {c.name: c.form for c in charts}
    zero = Q(0)
    specs = [
        ("Lx", 1, "line", [Location("A", 0, zero), Location("C", 0, zero)]),
        ("Ly", 1, "line", [Location("A", 1, zero), Location("B", 0, zero)]),
        ("Linf", 1, "line", [Location("B", 1, zero), Location("C", 1, zero)]),
    ]
    edges = [("Lx", "Ly"), ("Lx", "Linf"), ("Ly", "Linf")]
    curves, adj = _registry(forms, specs, edges)
    return SurfaceModel(P2, charts, curves, adj)


def base_model(form: OneForm, atlas: str = AFFINE, **kw) -> SurfaceModel:
    if atlas == AFFINE:
        return affine_model(form)
    if atlas == P1XP1:
        return p1xp1_model(form, **kw)
    if atlas == P2:
        return p2_model(form)
    raise ValueError(f"unknown atlas {atlas!r}")


# ---------------------------------------------------------------------------
# blowing up


def _point(p: Sequence[Number]) -> Point:
    return (Q(p[0]), Q(p[1]))


def blow_up(model: SurfaceModel, chart_name: str, p: Sequence[Number]) -> SurfaceModel:
    """Blow up the point ``p`` of the given chart.

    Chart ``E{k}a`` has coordinates ``(x1, t)`` with ``x = p0 + x1``,
    ``y = p1 + x1 t`` and owns the exceptional curve ``{x1 = 0}``; chart
    ``E{k}b`` has ``(s, y1)`` with ``x = p0 + s y1``, ``y = p1 + y1`` and owns
    only its origin.
    """
    pt = _point(p)
    chart = model.chart(chart_name)
    if not chart.owns(pt):
        raise ValueError(f"point {pt} is not a point of chart {chart_name}")
    k = len(model.blowups) + 1
    eid = f"E{k}"
    X, Y = BiPoly.var(0), BiPoly.var(1)
    sub_a = (X + pt[0], X * Y + pt[1])
    sub_b = (X * Y + pt[0], Y + pt[1])
    fa, div = pullback(chart.form, *sub_a, ("x%d" % k, "t%d" % k))
    fb, _ = pullback(chart.form, *sub_b, ("s%d" % k, "y%d" % k))
    m = div.low_in(0)
    invariant = fa.b.restrict(0, 0).is_zero()
    ca = Chart(f"{eid}a", fa, frozenset({0}), parent=chart_name, substitution=sub_a)
    cb = Chart(f"{eid}b", fb, frozenset({0, 1}), parent=chart_name, substitution=sub_b)
    charts = []
    for c in model.charts:
        if c.name == chart_name:
            c = replace(c, removed=c.removed + (pt,))
        charts.append(c)
    charts += [ca, cb]

    zero = Q(0)
    through: list[str] = []
    curves = []
    for cv in model.curves:
        hit = [loc for loc in cv.locations if loc.chart == chart_name and pt[loc.axis] == loc.value]
        if not hit:
            curves.append(cv)
            continue
        through.append(cv.id)
        locs = list(cv.locations)
        for loc in hit:
            # {x = p0} lifts to {s = 0} in chart b; {y = p1} to {t = 0} in chart a
            locs.append(Location(cb.name, 0, zero) if loc.axis == 0 else Location(ca.name, 1, zero))
        curves.append(replace(cv, self_int=cv.self_int - 1, locations=tuple(locs)))
    curves.append(Curve(eid, -1, invariant, (Location(ca.name, 0, zero), Location(cb.name, 1, zero))))
    ids = [c.id for c in curves]
    adj = dict(model.adjacency)
    for u in through:
        adj[_edge_key(ids, u, eid)] = adj.get(_edge_key(ids, u, eid), 0) + 1
    for i, u in enumerate(through):
        for v in through[i + 1:]:
            key = _edge_key(ids, u, v)
            if adj.get(key, 0) > 0:
                adj[key] -= 1
    rec = BlowupRecord(k, chart_name, pt, m, eid, not invariant, (ca.name, cb.name))
    return SurfaceModel(
        model.atlas,
        tuple(charts),
        tuple(curves),
        tuple(sorted(adj.items(), key=lambda kv: (ids.index(kv[0][0]), ids.index(kv[0][1])))),
        model.blowups + (rec,),
    )


def is_dicritical(model: SurfaceModel, chart_name: str, p: Sequence[Number]) -> bool:
    return blow_up(model, chart_name, p).blowups[-1].dicritical


def check_transitions(model: SurfaceModel) -> bool:
    """Each chart form agrees with the pullback of its parent's form up to a factor."""
    for c in model.charts:
        if c.parent is None:
            continue
        parent = model.chart(c.parent)
        pulled, _ = pullback(parent.form, *c.substitution, c.form.names)
        if not pulled.equal_up_to_unit(c.form):
            return False
    return True


# ---------------------------------------------------------------------------
# singular points over the whole model


@dataclass(frozen=True)
class ChartReport:
    chart: str
    report: SingularityReport


def model_singularities(model: SurfaceModel, cache: Optional[dict] = None) -> list[ChartReport]:
    out = []
    for c in model.charts:
        key = (c.name, c.form)
        if cache is not None and key in cache:
            pts = cache[key]
        else:
            pts = singular_points(c.form)
            if cache is not None:
                cache[key] = pts
        for p in pts:
            if c.owns(p):
                out.append(ChartReport(c.name, classify_singularity(c.form, p)))
    return out


@dataclass(frozen=True)
class ReductionTrace:
    model: SurfaceModel
    reports: tuple
    dicritical: tuple

    @property
    def blowups(self) -> tuple:
        return self.model.blowups

    @property
    def count(self) -> int:
        return len(self.model.blowups)

    @property
    def is_reduced(self) -> bool:
        return all(r.report.is_reduced for r in self.reports)


def seidenberg_reduce(model_or_form, max_blowups: int = 64, atlas: str = AFFINE) -> ReductionTrace:
    """Blow up non-reduced singular points, first in chart/point order, until none is left."""
    model = model_or_form if isinstance(model_or_form, SurfaceModel) else base_model(model_or_form, atlas)
    cache: dict = {}
    while True:
        reports = model_singularities(model, cache)
        bad = [r for r in reports if not r.report.is_reduced]
        if not bad:
            break
        if len(model.blowups) >= max_blowups:
            raise BudgetExceeded(max_blowups)
        target = bad[0]
        model = blow_up(model, target.chart, target.report.point)
    dic = tuple(b.curve for b in model.blowups if b.dicritical)
    return ReductionTrace(model, tuple(reports), dic)


# ---------------------------------------------------------------------------
# indices along tracked curves


def _shifted(form: OneForm, loc: Location) -> OneForm:
    if loc.value.is_zero():
        return form
    return form.translate((loc.value, 0) if loc.axis == 0 else (0, loc.value))


def _roots(poly: UniPoly, what: str) -> list[QuadNumber]:
    roots, left = roots_in_tower(poly)
    if left:
        raise UnsolvableSingularLocus(f"{what}: " + ", ".join(f.to_string() for f in left))
    return roots


def curve_points(model: SurfaceModel, cid: str) -> list[tuple[str, Location, Point, bool]]:
    """Special points of a tracked curve: singular points if invariant, tangencies otherwise.

    Returns ``(chart, location, point in shifted coordinates, invariant_here)``.
    """
    cv = model.curve(cid)
    out = []
    for loc in cv.locations:
        chart = model.chart(loc.chart)
        form = _shifted(chart.form, loc)
        i = loc.axis
        inv = (form.b if i == 0 else form.a).restrict(i, 0).is_zero()
        coeff = (form.a if i == 0 else form.b) if inv else (form.b if i == 0 else form.a)
        for r in _roots(coeff.restrict(i, 0), f"points on {cid}"):
            shifted = (Q(0), r) if i == 0 else (r, Q(0))
            orig = (loc.value, r) if i == 0 else (r, loc.value)
            if chart.owns(orig):
                out.append((loc.chart, loc, shifted, inv))
    return out


@dataclass(frozen=True)
class CSCheck:
    curve: str
    cs_sum: QuadNumber
    self_int: int
    ok: bool
    terms: tuple  # (chart, point, cs, kind)
    reduced: bool = True


def verify_camacho_sad(model: SurfaceModel, cid: str, require_reduced: bool = False) -> CSCheck:
    """Sum the CS indices of an invariant tracked curve and compare with its self-intersection.

    The residue definition of the index makes sense at any isolated
    singular point, so non-reduced points are accepted unless
    ``require_reduced`` is set; ``CSCheck.reduced`` records whether all were
    reduced.
    """
    cv = model.curve(cid)
    for loc in cv.locations:
        if not _is_invariant_at(model.chart(loc.chart).form, loc):
            raise NotInvariant(f"curve {cid} is not invariant")
    terms = []
    total = Q(0)
    reduced = True
    for chart_name, loc, pt, _ in curve_points(model, cid):
        form = _shifted(model.chart(chart_name).form, loc)
        rep = classify_singularity(form, pt)
        if not rep.is_reduced:
            if require_reduced:
                raise NonReducedOnCurve(f"{rep.kind} point on {cid} in chart {chart_name}")
            reduced = False
        cs = camacho_sad_index(form, loc.axis, pt)
        total = total + cs
        terms.append((chart_name, _unshift(loc, pt), cs, rep.kind))
    return CSCheck(cid, total, cv.self_int, total == cv.self_int, tuple(terms), reduced)


def _unshift(loc: Location, pt: Point) -> Point:
    if loc.axis == 0:
        return (pt[0] + loc.value, pt[1])
    return (pt[0], pt[1] + loc.value)


def cs_at(model: SurfaceModel, cid: str, chart_name: str, p: Sequence[Number]) -> QuadNumber:
    """CS index of a tracked curve at a point given in chart coordinates."""
    pt = _point(p)
    for loc in model.curve(cid).locations:
        if loc.chart == chart_name and pt[loc.axis] == loc.value:
            form = _shifted(model.chart(chart_name).form, loc)
            shifted = (Q(0), pt[1]) if loc.axis == 0 else (pt[0], Q(0))
            return camacho_sad_index(form, loc.axis, shifted)
    raise ValueError(f"curve {cid} does not pass through {pt} in chart {chart_name}")


def tf_dot_curve(model: SurfaceModel, cid: str) -> int:
    """``T_F . C``: ``chi(C) - sum Z`` if invariant, ``C^2 - sum Tang`` otherwise."""
    cv = model.curve(cid)
    pts = curve_points(model, cid)
    invariant = all(_is_invariant_at(model.chart(loc.chart).form, loc) for loc in cv.locations)
    total = 0
    for chart_name, loc, pt, _ in pts:
        form = _shifted(model.chart(chart_name).form, loc)
        if invariant:
            if not classify_singularity(form, pt).is_reduced:
                raise NonReducedOnCurve(f"non-reduced point on {cid} in chart {chart_name}")
            total += z_index(form, loc.axis, pt)
        else:
            total += tangency_order(form, loc.axis, pt)
    return cv.chi - total if invariant else cv.self_int - total


def check_homologous(model: SurfaceModel, c1: str, c2: str) -> bool:
    """Homologous curves (fibers of one ruling) must have equal ``T_F . C``."""
    return tf_dot_curve(model, c1) == tf_dot_curve(model, c2)


# ---------------------------------------------------------------------------
# intersection form and dual graph


def intersection_matrix(model: SurfaceModel, ids: Optional[Sequence[str]] = None) -> list[list[int]]:
    ids = list(ids) if ids is not None else model.curve_ids
    edges = model.edges()
    mat = []
    for u in ids:
        row = []
        for v in ids:
            if u == v:
                row.append(model.curve(u).self_int)
            else:
                key = _edge_key(model.curve_ids, u, v)
                row.append(edges.get(key, 0))
        mat.append(row)
    return mat


def is_negative_definite(mat: list[list[int]]) -> bool:
    """Leading principal minors alternate in sign, starting negative."""
    import sympy

    for k in range(1, len(mat) + 1):
        minor = sympy.Matrix([row[:k] for row in mat[:k]]).det()
        if (minor < 0) != (k % 2 == 1) or minor == 0:
            return False
    return True


def exceptional_ids(model: SurfaceModel) -> list[str]:
    return [c.id for c in model.curves if c.kind == "exceptional"]


def is_tree(model: SurfaceModel, ids: Sequence[str]) -> bool:
    import networkx as nx

    g = nx.MultiGraph()
    g.add_nodes_from(ids)
    for (u, v), n in model.edges().items():
        if u in ids and v in ids:
            for _ in range(n):
                g.add_edge(u, v)
    return nx.is_tree(g) if ids else True


def export_dual_graph(model: SurfaceModel) -> str:
    lines = ["graph dual {"]
    for c in model.curves:
        style = "" if c.invariant else ", style=dashed"
        lines.append(f'  "{c.id}" [label="{c.id} ({c.self_int})", invariant={str(c.invariant).lower()}{style}];')
    for (u, v), n in model.edges().items():
        for _ in range(n):
            lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# flips of Riccati fibers


@dataclass(frozen=True)
class FlipResult:
    lam: QuadNumber
    form: OneForm
    before: SurfaceModel
    blown_up: SurfaceModel
    after: SurfaceModel


def riccati_form(lam: Number) -> OneForm:
    """``lam * w dz - z dw`` on P1 x P1."""
    lam = Q(lam)
    return OneForm(BiPoly.monomial(0, 1, lam), BiPoly.monomial(1, 0, -1), ("z", "w"))


def flip_model(lam: Number, side: str) -> FlipResult:
    """Blow up a point of the fiber ``{z=0}`` and contract the fiber's strict transform.

    Side ``q`` is the point ``w = 0`` and side ``p`` the point ``w = inf``.
    The contraction is the elementary transformation: the blowup chart
    ``(z, t)`` becomes an affine chart of the new P1 x P1, in which the
    exceptional curve is the new fiber over ``z = 0``.
    """
    lam = Q(lam)
    model = p1xp1_model(riccati_form(lam))
    if side == "q":
        chart = "C0"
    elif side == "p":
        chart = "C2"
    else:
        raise ValueError("side must be 'p' or 'q'")
    blown = blow_up(model, chart, (0, 0))
    fiber = blown.curve("Z0")
    if fiber.self_int != -1:
        raise AssertionError("strict transform of the fiber is not a (-1)-curve")
    ca = blown.chart(blown.blowups[-1].charts[0])
    z = BiPoly.var(0)
    if side == "q":
        new_form = _quiet_form(ca.form.a, ca.form.b, ("z", "w"))
    else:
        # the chart coordinate is 1/w on the new surface
        new_form, _ = pullback(ca.form, z, BiPoly.monomial(0, -1), ("z", "w"))
    a0 = new_form.a.coeff(0, 1)
    b0 = new_form.b.coeff(1, 0)
    if a0.is_zero() or b0.is_zero():
        raise AssertionError(f"unexpected local form {new_form}")
    new_lam = -a0 / b0
    if not new_form.equal_up_to_unit(riccati_form(new_lam)):
        raise AssertionError(f"contracted form {new_form} is not of Riccati type")
    rep = classify_singularity(new_form, (0, 0))
    if not rep.is_reduced:
        raise WouldCreateNonReduced(f"flip would produce ratio {new_lam} in Q+")
    after = p1xp1_model(riccati_form(new_lam))
    return FlipResult(new_lam, new_form, model, blown, after)


def flip(lam: Number, side: str) -> QuadNumber:
    """Shift of the Riccati parameter: ``lam + 1`` for side ``p``, ``lam - 1`` for side ``q``."""
    return flip_model(lam, side).lam
