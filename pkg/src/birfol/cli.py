"""Command-line interface: ``birfol <subcommand> ...``.

Exit codes
    0  success
    1  parse error or invalid arguments
    2  blowup budget exhausted
    3  computation left the quadratic field tower
    4  curve is not invariant
    5  matrix is not unimodular
    6  lattice and generator are inconsistent
    7  any other domain error
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import serialize as S
from .algebra.matrix import IntMatrix2, eigen2
from .algebra.quad import QuadNumber
from .blowup import (
    AFFINE,
    P1XP1,
    P2,
    SurfaceModel,
    base_model,
    blow_up,
    export_dual_graph,
    seidenberg_reduce,
    verify_camacho_sad,
)
from .errors import (
    BirfolError,
    BudgetExceeded,
    ComplexEigenvalues,
    FieldTowerError,
    FormSyntaxError,
    InconsistentLattice,
    LatticeMismatch,
    NotInvariant,
    NotStabilizable,
    NotUnimodular,
)
from .liouville import RatOneForm, construct_eta_linear, exterior_derivative, match_linear, singer_check, wedge
from .local import SaturationWarning, SingularityReport, parse_one_form
from .monomial import (
    MonomialMap,
    as_identity_holds,
    bir_group_classify,
    growth_class,
    invariant_foliations,
    is_algebraically_stable,
    is_hyperbolic,
    stabilize_conjugate,
)
from .parse import parse_number
from .torus import (
    TorusAut,
    anosov_check,
    classify_quotient,
    crystallographic_constraint,
    h11_growth,
    homothety,
    homothety_and_commutation,
    lattice_kind,
    stable_unstable_slopes,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_BUDGET = 2
EXIT_FIELD = 3
EXIT_NOT_INVARIANT = 4
EXIT_NOT_UNIMODULAR = 5
EXIT_LATTICE = 6
EXIT_DOMAIN = 7

ATLASES = {"affine": AFFINE, "p2": P2, "p1xp1": P1XP1}


class UsageError(Exception):
    pass


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (FormSyntaxError, UsageError)):
        return EXIT_PARSE
    if isinstance(exc, BudgetExceeded):
        return EXIT_BUDGET
    if isinstance(exc, FieldTowerError):
        return EXIT_FIELD
    if isinstance(exc, NotInvariant):
        return EXIT_NOT_INVARIANT
    if isinstance(exc, NotUnimodular):
        return EXIT_NOT_UNIMODULAR
    if isinstance(exc, (InconsistentLattice, LatticeMismatch)):
        return EXIT_LATTICE
    if isinstance(exc, (ValueError, KeyError)):
        return EXIT_PARSE
    return EXIT_DOMAIN


# ---------------------------------------------------------------------------
# input helpers


def parse_matrix(text: str) -> list[list[QuadNumber]]:
    """``[[1,0],[1,1]]``, ``1,0;1,1`` or ``1 0 1 1``; entries may be ``1+sqrt(2)``, ``i`` ..."""
    body = text.replace("[", " ").replace("]", " ").replace(";", ",")
    chunks = [c.strip() for c in body.split(",") if c.strip()]
    if len(chunks) == 1:
        chunks = chunks[0].split()
    n = {4: 2, 16: 4}.get(len(chunks))
    if n is None:
        raise UsageError(f"expected 4 or 16 matrix entries, got {len(chunks)}")
    vals = [parse_number(c) for c in chunks]
    return [vals[i * n:(i + 1) * n] for i in range(n)]


def _json_entry(v) -> QuadNumber:
    if isinstance(v, dict):
        return S.read_number(v)
    if isinstance(v, list):
        return S.read_number({"exact": v})
    if isinstance(v, (int, str)):
        return parse_number(str(v))
    raise UsageError(f"bad matrix entry {v!r}")


def parse_matrix_input(text: str) -> tuple[list[list[QuadNumber]], Optional[str]]:
    """A matrix string, or JSON ``{"lattice": ..., "matrix": [[...]]}`` (inline or a file path)."""
    body = text.strip()
    if not body.startswith("{") and body.endswith(".json"):
        with open(body) as fh:
            body = fh.read()
    if body.startswith("{"):
        try:
            obj = json.loads(body)
            rows = [[_json_entry(v) for v in row] for row in obj["matrix"]]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"bad JSON matrix input: {exc}") from None
        if len(rows) not in (2, 4) or any(len(r) != len(rows) for r in rows):
            raise UsageError("matrix must be 2x2 or 4x4")
        return rows, obj.get("lattice")
    return parse_matrix(text), None


def _int_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        r = []
        for v in row:
            if not (v.is_rational and v.a.denominator == 1):
                raise UsageError(f"entry {v} is not an integer")
            r.append(int(v.a))
        out.append(r)
    return out


def parse_point(text: str) -> tuple[QuadNumber, QuadNumber]:
    parts = [p.strip() for p in text.strip("() ").split(",")]
    if len(parts) != 2:
        raise UsageError(f"expected a point x,y, got {text!r}")
    return parse_number(parts[0]), parse_number(parts[1])


def parse_bounds(text: str) -> tuple[int, int]:
    try:
        t, a = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--bounds expects t,a with positive integers, got {text!r}") from None
    if t <= 0 or a <= 0:
        raise UsageError("bounds must be positive")
    return t, a


def _guess_lattice(rows) -> str:
    ds = {v.d for row in rows for v in row if v.d != 0}
    if len(rows) == 4:
        return "GeneralZ4"
    if ds == {-1}:
        return "ZiSquare"
    if ds == {-3}:
        return "ZjSquare"
    if not ds:
        return "ESquare"
    raise UsageError("cannot infer the lattice; pass --lattice")


def _form(text: str, names: Optional[Sequence[str]] = None):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SaturationWarning)
        form = parse_one_form(text, names)
    notes = [str(w.message) for w in caught if issubclass(w.category, SaturationWarning)]
    return form, notes


# ---------------------------------------------------------------------------
# JSON fragments


def _report(chart: str, r: SingularityReport) -> dict:
    sd = r.strong_direction
    if isinstance(sd, tuple):
        sd = S.point(sd)
    return {
        "chart": chart,
        "point": S.point(r.point),
        "kind": r.kind,
        "ratio": S.number(r.ratio) if r.ratio is not None else None,
        "milnor_order": r.milnor_order,
        "strong_direction": sd,
        "dulac": S.number(r.dulac) if r.dulac is not None else None,
        "reason": r.reason,
        "separatrices": [{"axis": s.axis, "cs": S.number(s.cs), "z": s.z} for s in r.separatrices],
    }


def _curves(model: SurfaceModel) -> list[dict]:
    return [
        {"id": c.id, "self_int": c.self_int, "invariant": c.invariant, "kind": c.kind}
        for c in model.curves
    ]


def _growth(g) -> dict:
    return {"tag": g.tag, "rate": S.number(g.rate) if g.rate is not None else None}


# ---------------------------------------------------------------------------
# subcommands; each returns (document, text rendering)


def _atlas(name: str) -> str:
    key = name.lower().replace("^", "").replace("_", "")
    if key not in ATLASES:
        raise UsageError(f"unknown atlas {name!r}; choose affine, p2 or p1xp1")
    return ATLASES[key]


def _model(form, atlas: str, fibers: Sequence[str]) -> SurfaceModel:
    kw = {}
    if fibers:
        if atlas != P1XP1:
            raise UsageError("--fiber needs --atlas p1xp1")
        kw["extra_fibers"] = [parse_number(f) for f in fibers]
    return base_model(form, atlas, **kw)


def cmd_reduce(args) -> tuple[dict, str, str]:
    form, notes = _form(args.form)
    atlas = _atlas(args.atlas)
    model = _model(form, atlas, args.fiber)
    trace = seidenberg_reduce(model, args.max_blowups)
    m = trace.model
    log = [
        {
            "index": b.index,
            "chart": b.chart,
            "center": S.point(b.center),
            "multiplicity": b.multiplicity,
            "curve": b.curve,
            "dicritical": b.dicritical,
        }
        for b in m.blowups
    ]
    doc = S.document("reduce", {
        "form": form.to_text(),
        "atlas": atlas,
        "max_blowups": args.max_blowups,
        "blowups": trace.count,
        "dicritical": bool(trace.dicritical),
        "dicritical_curves": list(trace.dicritical),
        "reduced": trace.is_reduced,
        "blowup_log": log,
        "reports": [_report(r.chart, r.report) for r in trace.reports],
        "curves": _curves(m),
        "notes": notes,
    })
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(S.dumps(trace_document(args.form, atlas, args.fiber, m)) + "\n")
    lines = [f"form: {form.to_text()}", f"blowups: {trace.count}"]
    for b in log:
        flag = " (dicritical)" if b["dicritical"] else ""
        lines.append(f"  {b['curve']}: chart {b['chart']} center {_pt(b['center'])} multiplicity {b['multiplicity']}{flag}")
    for r in trace.reports:
        rr = r.report
        ratio = f" ratio {rr.ratio}" if rr.ratio is not None else ""
        dulac = f" dulac {rr.dulac}" if rr.dulac is not None else ""
        lines.append(f"  {r.chart} {_pt(S.point(rr.point))}: {rr.kind}{ratio}{dulac}")
    lines.append(f"reduced: {str(trace.is_reduced).lower()}")
    return doc, "\n".join(lines) + "\n", export_dual_graph(m)


def _pt(p) -> str:
    return "(" + ", ".join(str(S.read_number(c)) for c in p) + ")"


def trace_document(form_text: str, atlas: str, fibers, model: SurfaceModel) -> dict:
    return S.document("trace", {
        "form": form_text,
        "atlas": atlas,
        "fibers": list(fibers or []),
        "centers": [{"chart": b.chart, "point": S.point(b.center)} for b in model.blowups],
    })


def replay_trace(doc: dict) -> SurfaceModel:
    form, _ = _form(doc["form"])
    model = _model(form, doc["atlas"], doc.get("fibers", []))
    for c in doc["centers"]:
        model = blow_up(model, c["chart"], [S.read_number(v) for v in c["point"]])
    return model


def cmd_cs_check(args) -> tuple[dict, str, None]:
    if args.trace:
        with open(args.trace) as fh:
            tdoc = json.load(fh)
        if args.form and parse_one_form(args.form).a != parse_one_form(tdoc["form"]).a:
            raise UsageError("form differs from the one recorded in the trace file")
        model = replay_trace(tdoc)
    else:
        if not args.form:
            raise UsageError("a form or --trace is required")
        form, _ = _form(args.form)
        model = _model(form, _atlas(args.atlas), args.fiber)
    for spec in args.blowup:
        chart, _, pt = spec.partition(":")
        if not pt:
            raise UsageError(f"--blowup expects CHART:x,y, got {spec!r}")
        model = blow_up(model, chart, parse_point(pt))
    try:
        model.curve(args.curve)
    except KeyError:
        raise UsageError(f"unknown curve {args.curve!r}; known: {', '.join(model.curve_ids)}") from None
    res = verify_camacho_sad(model, args.curve)
    doc = S.document("cs-check", {
        "curve": res.curve,
        "sum": S.number(res.cs_sum),
        "self_int": res.self_int,
        "ok": res.ok,
        "all_points_reduced": res.reduced,
        "terms": [
            {"chart": c, "point": S.point(p), "cs": S.number(v), "kind": k}
            for c, p, v, k in res.terms
        ],
    })
    lines = [f"curve {res.curve}: sum CS = {res.cs_sum}, self-intersection = {res.self_int}, ok = {str(res.ok).lower()}"]
    for c, p, v, k in res.terms:
        lines.append(f"  {c} {_pt(S.point(p))}: CS {v} ({k})")
    return doc, "\n".join(lines) + "\n", None


def _classify_monomial(rows) -> tuple[dict, str]:
    f = MonomialMap(IntMatrix2.from_rows(_int_rows(rows)))
    m = f.matrix
    g = growth_class(f)
    e = eigen2(m) if m.trace ** 2 - 4 * m.det >= 0 else None
    holds, first = as_identity_holds(f, 8)
    out = {
        "mode": "monomial",
        "matrix": S.int_matrix(m),
        "growth": _growth(g),
        "eigenvalues": [S.number(v) for v in e.values] if e else None,
        "algebraically_stable": is_algebraically_stable(f),
        "as_identity": {"holds_up_to": 8, "holds": holds, "first_failure": first},
        "stabilizing_conjugator": None,
        "stabilized": None,
        "invariant_foliations": [],
    }
    if is_hyperbolic(m):
        try:
            p, h = stabilize_conjugate(f)
            out["stabilizing_conjugator"] = S.int_matrix(p)
            out["stabilized"] = S.int_matrix(h.matrix)
        except NotStabilizable:
            pass
    try:
        for lf in invariant_foliations(f):
            out["invariant_foliations"].append({
                "coefficients": [S.number(lf.c0), S.number(lf.c1)],
                "eigenvalue": S.number(lf.eigenvalue),
                "alpha": S.number(lf.alpha) if lf.alpha is not None else None,
            })
    except ComplexEigenvalues:
        pass
    lines = [f"monomial {m}: {g}", f"algebraically stable: {str(out['algebraically_stable']).lower()}"]
    if out["stabilized"] is not None:
        lines.append(f"stabilizing conjugator {out['stabilizing_conjugator']} -> {out['stabilized']}")
    for lf in out["invariant_foliations"]:
        c0, c1 = (S.read_number(c) for c in lf["coefficients"])
        lines.append(f"invariant foliation ({c0}) dz/z + ({c1}) dw/w, eigenvalue {S.read_number(lf['eigenvalue'])}")
    return out, "\n".join(lines) + "\n"


def _classify_torus(rows, lattice: Optional[str]) -> tuple[dict, str]:
    lat = lattice_kind(lattice) if lattice else _guess_lattice(rows)
    a = TorusAut(lat, _int_rows(rows) if lat == "GeneralZ4" else rows)
    anosov = anosov_check(a)
    out = {"mode": "torus", "lattice": lat, "matrix": S.matrix(a.rows), "anosov": anosov,
           "growth": None, "slopes": None}
    shown = "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in a.rows) + "]"
    lines = [f"torus {lat} {shown}", f"anosov: {str(anosov).lower()}"]
    if a.is_2x2:
        g = h11_growth(a)
        out["growth"] = _growth(g)
        lines.append(f"H^(1,1) growth: {g}")
        if anosov:
            try:
                dirs = stable_unstable_slopes(a)
            except FieldTowerError:
                dirs = ()
            out["slopes"] = [
                {"role": d.role, "eigenvalue": S.number(d.eigenvalue), "vector": S.point(d.vector)}
                for d in dirs
            ] or None
            for d in dirs:
                lines.append(f"{d.role}: eigenvalue {d.eigenvalue}, direction ({d.vector[0]}, {d.vector[1]})")
    return out, "\n".join(lines) + "\n"


def cmd_classify(args) -> tuple[dict, str, None]:
    rows, lattice = parse_matrix_input(args.matrix)
    if args.mode == "monomial":
        if len(rows) != 2:
            raise UsageError("monomial mode needs a 2x2 matrix")
        out, text = _classify_monomial(rows)
    else:
        out, text = _classify_torus(rows, args.lattice or lattice)
    return S.document("classify", out), text, None


def cmd_bir_group(args) -> tuple[dict, str, None]:
    alpha = parse_number(args.alpha)
    t, a = parse_bounds(args.bounds)
    r = bir_group_classify(alpha, t, a)
    doc = S.document("bir-group", {
        "alpha": S.number(alpha),
        "tag": r.tag,
        "witness": S.int_matrix(r.witness) if r.witness is not None else None,
        "eigenvalue": S.number(r.eigenvalue) if r.eigenvalue is not None else None,
        "relation": list(r.relation) if r.relation else None,
        "bounds": {"t": r.bounds[0], "a": r.bounds[1]},
        "method": r.method,
        "certificate": [{"matrix": m, "order": o} for m, o in r.certificate],
        "caveat": r.caveat,
    })
    text = f"alpha = {alpha}: {r.tag}"
    if r.witness is not None:
        text += f" witness {r.witness} eigenvalue {r.eigenvalue}"
    if r.certificate:
        text += f" ({len(r.certificate)} solutions of det = 1, all of finite order)"
    return doc, text + "\n", None


def cmd_torus_classify(args) -> tuple[dict, str, None]:
    lat = lattice_kind(args.lattice)
    xi = parse_number(args.generator)
    tag = classify_quotient(lat, xi)
    gen = homothety(lat, xi)
    cr = crystallographic_constraint(gen)
    out = {
        "lattice": lat,
        "generator": S.number(xi),
        "tag": tag,
        "crystallographic": {"order": cr.order, "euler_phi": cr.euler_phi, "passes": cr.passes,
                             "diagnostic": cr.diagnostic},
        "homothety": None,
    }
    text = f"{lat} / <{xi}>: {tag}\n{cr.diagnostic}\n"
    if args.anosov:
        rows = parse_matrix(args.anosov)
        phi = TorusAut(lat, _int_rows(rows) if lat == "GeneralZ4" else rows)
        h = homothety_and_commutation(gen, phi)
        out["homothety"] = {
            "commutes": h.commutes,
            "is_homothety": h.is_homothety,
            "ratio": S.number(h.ratio) if h.ratio is not None else None,
            "order": h.order,
            "implication_holds": h.implication_holds,
            "note": h.note,
        }
        text += f"commutes with the Anosov map: {str(h.commutes).lower()}\n"
    return S.document("torus-classify", out), text, None


def cmd_liouville(args) -> tuple[dict, str, None]:
    omega = RatOneForm.parse(args.form)
    alpha = None
    if args.eta is None:
        alpha = match_linear(omega)
        if alpha is None:
            raise UsageError("no eta given and the form is not of the shape w dz + alpha z dw")
        eta = construct_eta_linear(alpha)
        constructed = True
    else:
        eta = RatOneForm.parse(args.eta, omega.names)
        constructed = False
    ok = singer_check(omega, eta)
    doc = S.document("liouville", {
        "form": omega.to_text(),
        "alpha": S.number(alpha) if alpha is not None else None,
        "eta": eta.to_text(),
        "constructed": constructed,
        "singer": ok,
        "d_eta": exterior_derivative(eta).R.to_string(omega.names),
        "d_omega": exterior_derivative(omega).R.to_string(omega.names),
        "eta_wedge_omega": wedge(eta, omega).R.to_string(omega.names),
    })
    return doc, f"eta = {eta.to_text()}\nsinger: {str(ok).lower()}\n", None


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")

    p = argparse.ArgumentParser(prog="birfol", description="Exact computations with foliations and birational maps.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reduce", parents=[common], help="Seidenberg reduction of a 1-form")
    r.add_argument("form")
    r.add_argument("--atlas", default="affine")
    r.add_argument("--fiber", action="append", default=[], help="extra fiber z=c (p1xp1 atlas)")
    r.add_argument("--max-blowups", type=int, default=64)
    r.add_argument("--trace", metavar="FILE", help="write the blowup sequence for cs-check")
    r.set_defaults(func=cmd_reduce)

    c = sub.add_parser("cs-check", parents=[common], help="Camacho-Sad sum along a compact invariant curve")
    c.add_argument("form", nargs="?")
    c.add_argument("--curve", required=True)
    c.add_argument("--atlas", default="affine")
    c.add_argument("--fiber", action="append", default=[])
    c.add_argument("--blowup", action="append", default=[], metavar="CHART:x,y")
    c.add_argument("--trace", metavar="FILE", help="replay blowups recorded by reduce --trace")
    c.set_defaults(func=cmd_cs_check)

    k = sub.add_parser("classify", parents=[common], help="growth class of a monomial map or torus automorphism")
    k.add_argument("matrix")
    k.add_argument("--mode", choices=("monomial", "torus"), default="monomial")
    k.add_argument("--lattice")
    k.set_defaults(func=cmd_classify)

    b = sub.add_parser("bir-group", parents=[common], help="symmetries of w dz + alpha z dw")
    b.add_argument("alpha")
    b.add_argument("--bounds", default="10,50", metavar="t,a")
    b.set_defaults(func=cmd_bir_group)

    t = sub.add_parser("torus-classify", parents=[common], help="quotient of a torus by a homothety")
    t.add_argument("--lattice", required=True)
    t.add_argument("--generator", required=True)
    t.add_argument("--anosov", metavar="MATRIX")
    t.set_defaults(func=cmd_torus_classify)

    lv = sub.add_parser("liouville", parents=[common], help="Singer integrability check")
    lv.add_argument("form")
    lv.add_argument("--eta")
    lv.set_defaults(func=cmd_liouville)

    bt = sub.add_parser("batch", help="run one command per line of FILE; output order follows input")
    bt.add_argument("file")
    bt.add_argument("--jobs", type=int, default=1)
    bt.set_defaults(func=None)
    return p


class _ArgError(Exception):
    def __init__(self, message: str, code: int = EXIT_PARSE) -> None:
        super().__init__(message)
        self.code = code


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one command; returns ``(exit code, stdout, stderr)`` without printing."""
    parser = build_parser()
    try:
        args = _parse(parser, list(argv))
    except _ArgError as exc:
        return exc.code, "", (str(exc) + "\n") if str(exc) else ""
    if args.command == "batch":
        return run_batch(args.file, args.jobs)
    fmt = args.format
    try:
        doc, text, dot = args.func(args)
    except (BirfolError, UsageError, ValueError, KeyError, ArithmeticError, OSError) as exc:
        code = exit_code_for(exc)
        if isinstance(exc, OSError):
            code = EXIT_PARSE
        err = S.error_document(args.command, exc, code)
        if fmt == "json":
            return code, S.dumps(err) + "\n", ""
        return code, "", f"error ({type(exc).__name__}): {exc}\n"
    if fmt == "json":
        return EXIT_OK, S.dumps(doc) + "\n", ""
    if fmt == "dot":
        if dot is None:
            return EXIT_PARSE, "", "--format dot is only available for reduce\n"
        return EXIT_OK, dot, ""
    return EXIT_OK, text, ""


def _parse(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    # argparse exits on error; turn that into an exception so batch mode survives
    def fail(message: str):
        raise _ArgError(f"{parser.prog}: error: {message}")

    parser.error = fail  # type: ignore[method-assign]
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sp in action.choices.values():
                sp.error = fail  # type: ignore[method-assign]
    try:
        return parser.parse_args(argv)
    except SystemExit as exc:  # --help
        raise _ArgError("", code=EXIT_OK if exc.code in (0, None) else EXIT_PARSE) from exc


def _run_line(line: str) -> tuple[int, str, str]:
    try:
        argv = shlex.split(line)
    except ValueError as exc:
        return EXIT_PARSE, "", f"{exc}\n"
    if argv and argv[0] == "batch":
        return EXIT_PARSE, "", "nested batch is not allowed\n"
    return run(argv)


def run_batch(path: str, jobs: int = 1) -> tuple[int, str, str]:
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        return EXIT_PARSE, "", f"{exc}\n"
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_line, lines))
    else:
        results = [_run_line(ln) for ln in lines]
    out, err = [], []
    worst = EXIT_OK
    for line, (code, o, e) in zip(lines, results):
        out.append(o if o.endswith("\n") or not o else o + "\n")
        if e:
            err.append(f"[{line}] {e}")
        worst = max(worst, code)
    return worst, "".join(out), "".join(err)


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
