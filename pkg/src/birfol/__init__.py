"""Exact computations with singular holomorphic foliations on surfaces.

Modules: :mod:`birfol.local` (singularities of 1-forms), :mod:`birfol.blowup`
(atlases, blowups, Camacho-Sad bookkeeping, flips), :mod:`birfol.monomial`
(monomial maps, algebraic stability, symmetries of linear foliations),
:mod:`birfol.torus` (linear torus automorphisms), :mod:`birfol.liouville`
(rational 1-forms and the Singer test) and :mod:`birfol.cli`.
"""

from .algebra import BiPoly, IntMatrix2, Q, QuadNumber, RatFunc
from .blowup import (
    SurfaceModel,
    blow_up,
    flip,
    p1xp1_model,
    p2_model,
    seidenberg_reduce,
    tf_dot_curve,
    verify_camacho_sad,
)
from .liouville import RatOneForm, construct_eta_linear, group_average, singer_check
from .local import OneForm, camacho_sad_index, classify_singularity, dulac_invariant, parse_one_form
from .monomial import MonomialMap, bir_group_classify, growth_class, is_algebraically_stable, stabilize_conjugate
from .torus import TorusAut, anosov_check, classify_quotient, h11_growth

__version__ = "0.1.0"

__all__ = [
    "BiPoly", "IntMatrix2", "MonomialMap", "OneForm", "Q", "QuadNumber", "RatFunc", "RatOneForm",
    "SurfaceModel", "TorusAut", "anosov_check", "bir_group_classify", "blow_up", "camacho_sad_index",
    "classify_quotient", "classify_singularity", "construct_eta_linear", "dulac_invariant", "flip",
    "group_average", "growth_class", "h11_growth", "is_algebraically_stable", "p1xp1_model", "p2_model",
    "parse_one_form", "seidenberg_reduce", "singer_check", "stabilize_conjugate", "tf_dot_curve",
    "verify_camacho_sad",
]
