"""Regenerate tests/data/oracle_values.json from the independent oracles.

Run from the repository root:  python3 tests/make_oracle_values.py
The JSON file is committed; tests read it and never call this script.
"""

from __future__ import annotations

import json
import pathlib
import sys

import sympy

sys.path.insert(0, str(pathlib.Path(__file__).parent))
import oracles as O  # noqa: E402

x, y, u = O.x, O.y, sympy.Symbol("u")

LAMBDAS = {"2": sympy.Integer(2), "sqrt(2)": sympy.sqrt(2), "1+sqrt(2)": 1 + sympy.sqrt(2),
           "-1/3": sympy.Rational(-1, 3), "sqrt(3)": sympy.sqrt(3)}
PAIRS = [(1, 1), (2, 1), (3, 1), (3, 2), (4, 3), (5, 2), (5, 3), (7, 5), (8, 5)]
MIXED = [[[-1, -1], [1, 2]], [[-3, -1], [1, 0]], [[-2, 1], [-1, 1]], [[2, 1], [-1, 0]], [[1, -2], [-1, 3]]]
NONNEG = [[[1, 2], [1, 1]], [[2, 1], [1, 1]], [[0, 1], [1, 2]], [[3, 2], [4, 3]], [[1, 1], [1, 0]]]


def main() -> None:
    out: dict = {}
    out["cf_counts"] = {f"{p}/{q}": O.cf_blowup_count(p, q) for p, q in PAIRS}

    exc = {}
    for key, lam in LAMBDAS.items():
        a, b = lam * y, x  # x dy + lam y dx
        A, B, _ = O.blowup_chart_a(a, b)
        Ab, Bb, _ = O.blowup_chart_b(a, b)
        cs_a = sympy.nsimplify(O.cs_residue(A.subs(O.t, y), B.subs(O.t, y), "x=0"))
        cs_b = sympy.nsimplify(O.cs_residue(Ab, Bb, "y=0"))
        strict = sympy.nsimplify(O.cs_residue(A.subs(O.t, y), B.subs(O.t, y), "y=0"))
        exc[key] = {"chart_a": O.to_triple(cs_a), "chart_b": O.to_triple(cs_b),
                    "sum": O.to_triple(sympy.simplify(cs_a + cs_b)), "strict_y0": O.to_triple(strict),
                    "original_y0": O.to_triple(-lam)}
    out["exceptional_cs"] = exc

    dulac = {}
    for lam, p in [(3, 1), (5, 2), (7, 2), (2, 3)]:
        a, b = -y ** (p + 1), x * (1 + lam * y ** p)
        before = O.cs_residue(a, b, "x=0")
        Ab, Bb, _ = O.blowup_chart_b(a, b)
        after = O.cs_residue(Ab, Bb, "x=0")
        dulac[f"{lam},{p}"] = {"before": int(before), "after": int(after)}
    out["dulac"] = dulac

    out["as_first_failure"] = {str(m): O.as_first_failure(m) for m in MIXED + NONNEG}
    out["iterates_1_2_1_1"] = [O.iterate_exponents([[1, 2], [1, 1]], k) for k in range(1, 9)]
    out["kron_unipotent_max"] = {str(n): int(O.unipotent_kron_entries(n)) for n in (1, 2, 3, 10, 37, 100)}

    singer = {}
    z, w = O.z, O.w
    for key, alpha in {"2": 2, "1+sqrt(2)": 1 + sympy.sqrt(2), "1": 1, "-5/2": sympy.Rational(-5, 2)}.items():
        d_eta, resid = O.singer_identities(w, alpha * z, 1 / z, 1 / w)
        _, resid0 = O.singer_identities(w, alpha * z, 0, 0)
        singer[key] = {"d_eta": str(d_eta), "residual": str(resid), "residual_eta0": str(resid0)}
    out["singer"] = singer

    out["residues"] = {
        "2/u": str(sympy.residue(2 / u, u, 0)),
        "(1+3u)/u^2": str(sympy.residue((1 + 3 * u) / u ** 2, u, 0)),
        "(1+5u^2)/u^3": str(sympy.residue((1 + 5 * u ** 2) / u ** 3, u, 0)),
        "1/(u^2-2)@sqrt2": O.to_triple(sympy.residue(1 / (u ** 2 - 2), u, sympy.sqrt(2))),
    }
    out["eigen"] = {str(m): [O.to_triple(v) for v in O.sympy_eigen(m)]
                    for m in ([[1, 2], [1, 1]], [[2, 1], [1, 1]], [[0, 1], [1, 2]], [[3, 2], [4, 3]])}

    path = pathlib.Path(__file__).parent / "data" / "oracle_values.json"
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
