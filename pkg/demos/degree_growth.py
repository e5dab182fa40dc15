"""Degree growth of a monomial map next to the torus automorphism with the same matrix.

    python3 demos/degree_growth.py
"""

from __future__ import annotations

from birfol.algebra.matrix import IntMatrix2
from birfol.monomial import (
    MonomialMap,
    as_identity_holds,
    degree_sequence,
    growth_class,
    invariant_foliations,
    stabilize_conjugate,
)
from birfol.torus import TorusAut, h11_growth, stable_unstable_slopes

MATRICES = [[[1, 0], [1, 1]], [[0, -1], [1, 0]], [[1, 2], [1, 1]], [[-1, -1], [1, 2]]]


def main() -> None:
    for rows in MATRICES:
        f = MonomialMap(IntMatrix2.from_rows(rows))
        degs = [max(m.entries()) for m in degree_sequence(f, 8)]
        print(f"{f.matrix}: monomial {growth_class(f)}, torus {h11_growth(TorusAut('zi', rows))}")
        print(f"  max degree of iterates 1..8: {degs}")
        stable, first = as_identity_holds(f)
        if not stable:
            p, g = stabilize_conjugate(f)
            print(f"  (f^n)* != (f*)^n from n = {first}; conjugate by {p} to {g.matrix}")
        if growth_class(f).tag == "Exponential":
            for lf in invariant_foliations(f):
                print(f"  invariant form w dz + ({lf.alpha}) z dw, multiplier {lf.eigenvalue}")
            u, s = stable_unstable_slopes(TorusAut("zi", rows))
            print(f"  torus slopes: unstable {u.vector[1] / u.vector[0]}, stable {s.vector[1] / s.vector[0]}")


if __name__ == "__main__":
    main()
