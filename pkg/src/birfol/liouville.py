"""Rational 1-forms on C^2 and the Singer integrability test.

A form ``P dz + Q dw`` has rational coefficients.  A 2-form is stored as its
coefficient ``R`` of ``dz ^ dw``.  All identities are decided by exact
rational-function arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra.quad import Number, Q
from .algebra.ratfunc import RatFunc
from .errors import CertificationFailed, NotAGroup
from .monomial import MonomialMap
from .parse import parse_form_coefficients

Z = RatFunc.var(0)
W = RatFunc.var(1)


def _rat(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc(x)


@dataclass(frozen=True)
class RatOneForm:
    P: RatFunc
    Q: RatFunc
    names: tuple[str, str] = ("z", "w")

    def __post_init__(self) -> None:
        object.__setattr__(self, "P", _rat(self.P))
        object.__setattr__(self, "Q", _rat(self.Q))
        object.__setattr__(self, "names", tuple(self.names))

    @classmethod
    def parse(cls, text: str, names: Optional[Sequence[str]] = None) -> RatOneForm:
        p, q, pair = parse_form_coefficients(text, names or ("z", "w"))
        return cls(p, q, pair)

    def is_zero(self) -> bool:
        return self.P.is_zero() and self.Q.is_zero()

    def __add__(self, other: RatOneForm) -> RatOneForm:
        return RatOneForm(self.P + other.P, self.Q + other.Q, self.names)

    def __sub__(self, other: RatOneForm) -> RatOneForm:
        return RatOneForm(self.P - other.P, self.Q - other.Q, self.names)

    def scale(self, f: RatFunc | Number) -> RatOneForm:
        return RatOneForm(self.P * f, self.Q * f, self.names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatOneForm):
            return NotImplemented
        return self.P == other.P and self.Q == other.Q

    def __hash__(self) -> int:
        return hash((self.P, self.Q))

    def to_text(self) -> str:
        """Re-parseable rendering such as ``1/z dz + 1/w dw``."""
        z, w = self.names
        parts = []
        for c, v in ((self.P, z), (self.Q, w)):
            if c.is_zero():
                continue
            text = c.to_string(self.names)
            if text == "1":
                parts.append(f"d{v}")
            elif " " in text:
                parts.append(f"({text}) d{v}")
            else:
                parts.append(f"{text} d{v}")
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class RatTwoForm:
    R: RatFunc

    def is_zero(self) -> bool:
        return self.R.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatTwoForm):
            return self.R == other.R
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.R)


def exterior_derivative(eta: RatOneForm) -> RatTwoForm:
    return RatTwoForm(eta.Q.diff(0) - eta.P.diff(1))


def wedge(eta: RatOneForm, omega: RatOneForm) -> RatTwoForm:
    return RatTwoForm(eta.P * omega.Q - eta.Q * omega.P)


def differential(f: RatFunc | Number) -> RatOneForm:
    f = _rat(f)
    return RatOneForm(f.diff(0), f.diff(1))


def wedge_function(f: RatFunc, omega: RatOneForm) -> RatTwoForm:
    """``df ^ omega``."""
    return wedge(differential(f), omega)


def singer_check(omega: RatOneForm, eta: RatOneForm) -> bool:
    """``d eta = 0`` and ``d omega = eta ^ omega``."""
    return exterior_derivative(eta).is_zero() and exterior_derivative(omega) == wedge(eta, omega)


def linear_form(alpha: Number) -> RatOneForm:
    """``w dz + alpha z dw``."""
    return RatOneForm(W, Z * Q(alpha))


LOG_FORM = RatOneForm(Z.inverse(), W.inverse())


def construct_eta_linear(alpha: Number) -> RatOneForm:
    alpha = Q(alpha)
    if alpha.is_zero():
        raise ValueError("alpha must be nonzero")
    eta = LOG_FORM
    if not singer_check(linear_form(alpha), eta):
        raise CertificationFailed(f"Singer identities fail for alpha = {alpha}")
    return eta


def match_linear(omega: RatOneForm) -> Optional[Number]:
    """``alpha`` if ``omega`` is a constant multiple of ``w dz + alpha z dw``."""
    if omega.P.is_zero():
        return None
    ratio = omega.P / W
    if not ratio.is_constant():
        return None
    rest = omega.Q / (Z * ratio)
    if not rest.is_constant():
        return None
    return rest.constant_value()


# ---------------------------------------------------------------------------
# monomial pullback and averaging


def monomial_pullback(g: MonomialMap, form: RatOneForm) -> RatOneForm:
    """Pullback by ``(z, w) -> (z^a w^b, z^c w^d)``."""
    m = g.matrix
    u = Z ** m.a * W ** m.b
    v = Z ** m.c * W ** m.d
    p = form.P.substitute(u, v)
    q = form.Q.substitute(u, v)
    # du = u (a dz/z + b dw/w), dv likewise
    pz = p * u * m.a / Z + q * v * m.c / Z
    pw = p * u * m.b / W + q * v * m.d / W
    return RatOneForm(pz, pw, form.names)


def check_group(group: Sequence[MonomialMap]) -> None:
    mats = {g.matrix for g in group}
    if len(mats) != len(group):
        raise NotAGroup("repeated elements")
    for g in group:
        for h in group:
            if (g @ h).matrix not in mats:
                raise NotAGroup(f"{g.matrix} o {h.matrix} is not in the set")


def group_average(form: RatOneForm, group: Sequence[MonomialMap]) -> RatOneForm:
    group = list(group)
    if not group:
        raise NotAGroup("empty set")
    check_group(group)
    total = RatOneForm(RatFunc(0), RatFunc(0), form.names)
    for g in group:
        total = total + monomial_pullback(g, form)
    out = total.scale(RatFunc(Q(1) / len(group)))
    if exterior_derivative(form).is_zero() and not exterior_derivative(out).is_zero():
        raise CertificationFailed("averaging destroyed closedness")
    return out


IDENTITY = MonomialMap.of(1, 0, 0, 1)
TAU = MonomialMap.of(-1, 0, 0, -1)
