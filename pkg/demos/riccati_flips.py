"""Flip a Riccati fiber back and forth and watch the index move.

    python3 demos/riccati_flips.py
"""

from __future__ import annotations

from birfol.algebra.quad import SQRT2
from birfol.blowup import flip_model, p1xp1_model, riccati_form, tf_dot_curve, verify_camacho_sad


def describe(lam) -> str:
    check = verify_camacho_sad(p1xp1_model(riccati_form(lam)), "Z0")
    return ", ".join(str(cs) for _, _, cs, _ in check.terms)


def main() -> None:
    lam = SQRT2
    print(f"start: lambda = {lam}, CS on the fiber z=0: {describe(lam)}")
    for side in ("p", "p", "q", "q"):
        res = flip_model(lam, side)
        lam = res.lam
        print(f"flip side {side}: lambda = {lam}, CS: {describe(lam)}")
    model = p1xp1_model(riccati_form(lam), extra_fibers=[1])
    print(f"T_F . fiber: invariant {tf_dot_curve(model, 'Z0')}, generic {tf_dot_curve(model, 'Z1')}")


if __name__ == "__main__":
    main()
