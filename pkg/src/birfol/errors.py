"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class BirfolError(Exception):
    """Base class for all package errors."""


class FieldTowerError(BirfolError, ArithmeticError):
    """A computation left the field Q or Q(sqrt d) it is allowed to live in."""


class FieldTowerMismatch(FieldTowerError):
    """Two operands live in distinct quadratic fields."""


class FieldTowerExceeded(FieldTowerError):
    """The result needs an algebraic extension beyond one quadratic step."""


class FormSyntaxError(BirfolError, SyntaxError):
    def __init__(self, message: str, position: int, text: str = "") -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class NotInvariant(BirfolError):
    """The curve is not invariant by the foliation."""


class IsInvariant(BirfolError):
    """Tangency orders are only defined for non-invariant curves."""


class WeakSeparatrixNotPolynomial(BirfolError):
    pass


class NonReducedOnCurve(BirfolError):
    pass


class BudgetExceeded(BirfolError):
    def __init__(self, budget: int) -> None:
        super().__init__(f"reduction did not finish within {budget} blowups")
        self.budget = budget


class UnsolvableSingularLocus(BirfolError):
    """Singular points exist outside the quadratic tower."""


class WouldCreateNonReduced(BirfolError):
    pass


class NotStabilizable(BirfolError):
    pass


class ComplexEigenvalues(BirfolError):
    pass


class NotUnimodular(BirfolError):
    pass


class InfiniteOrder(BirfolError):
    pass


class LatticeMismatch(BirfolError):
    pass


class InconsistentLattice(BirfolError):
    pass


class NotAGroup(BirfolError):
    pass


class CertificationFailed(BirfolError):
    pass
