from __future__ import annotations

import json
import pathlib
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from birfol.algebra.quad import QuadNumber

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def oracle() -> dict:
    return json.loads((DATA / "oracle_values.json").read_text())


def from_triple(t) -> QuadNumber:
    return QuadNumber(Fraction(t[0]), Fraction(t[1]), int(t[2]))


small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def quads(draw, d: int = 2, nonzero: bool = False):
    a = draw(small_fractions)
    b = draw(small_fractions)
    q = QuadNumber(a, b, d)
    if nonzero and q.is_zero():
        q = QuadNumber(1)
    return q
