"""Exception types shared across the package."""


class QspacesError(Exception):
    """Base class for all package-specific errors."""


class DivisionByNonUnit(QspacesError):
    """Divisor has no invertible body (its constant part vanishes)."""


class ParityViolation(QspacesError):
    """A substitution or image does not respect the even/odd grading."""


class IndeterminateValuation(QspacesError):
    """A denominator vanishes at the expansion point, so no valuation exists."""


class NegativeValuation(QspacesError):
    """A limit diverges because the value has a pole at the expansion point."""


class AlgebraMismatch(QspacesError):
    """Operands live in different free algebras."""


class NonSquareTensorDim(QspacesError):
    """Matrix rows/cols are not a perfect square of a base dimension."""


class SingularTransform(QspacesError):
    """A matrix or basis map required to be invertible is singular."""


class DimensionMismatch(QspacesError):
    """Matrix dimension does not match the supplied parity vector."""


class NonUnitLeadingCoefficient(QspacesError):
    """A relation cannot be oriented: its leading coefficient is not a unit."""


class GeneratorMismatch(QspacesError):
    """Two presentations do not share generators/precedence as required."""


class ResidualDependence(QspacesError):
    """A quotiented generator survives in a relation after substitution."""


class ExprSyntaxError(QspacesError):
    """Expression source does not conform to the grammar."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownSymbol(QspacesError):
    """Expression references a name that is neither parameter nor generator."""


class DivisionByGeneratorExpression(QspacesError):
    """Expression divides by a subexpression containing generators."""


class UnknownId(QspacesError):
    """Catalog lookup failed; carries a nearest-match suggestion."""

    def __init__(self, ident, suggestion=None):
        hint = f"; did you mean {suggestion!r}?" if suggestion else ""
        super().__init__(f"unknown catalog id {ident!r}{hint}")
        self.ident = ident
        self.suggestion = suggestion
