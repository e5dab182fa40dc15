"""Resolve a resonant node and check Camacho-Sad on every invariant curve.

    python3 demos/resolve_and_check.py [form]
"""

from __future__ import annotations

import sys

from birfol.blowup import export_dual_graph, seidenberg_reduce, verify_camacho_sad
from birfol.local import parse_one_form


def main(text: str = "3*y*dx - 2*x*dy") -> None:
    form = parse_one_form(text)
    trace = seidenberg_reduce(form)
    print(f"{form.to_text()}: {trace.count} blowups, dicritical {list(trace.dicritical) or 'none'}")
    for b in trace.blowups:
        print(f"  {b.curve} over {b.chart} at ({b.center[0]}, {b.center[1]}), multiplicity {b.multiplicity}")
    for curve in trace.model.curves:
        if not curve.invariant:
            print(f"  {curve.id}: not invariant, skipped")
            continue
        check = verify_camacho_sad(trace.model, curve.id)
        parts = " + ".join(f"({cs})" for _, _, cs, _ in check.terms) or "0"
        print(f"  {curve.id}: {parts} = {check.cs_sum}, self-intersection {check.self_int}, ok={check.ok}")
    print(export_dual_graph(trace.model), end="")


if __name__ == "__main__":
    main(*sys.argv[1:2])
