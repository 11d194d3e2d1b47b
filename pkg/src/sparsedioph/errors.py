"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all sparsedioph errors."""


class DimensionMismatch(Error):
    """Operands have incompatible shapes or index sets."""


class SingularMatrix(Error):
    """A nonsingular square matrix was required."""


class RankDeficient(Error):
    """A full-row-rank matrix was required."""


class SingularBasis(Error):
    """The selected column basis has zero determinant."""


class NonPositive(Error):
    """A positive integer argument was required."""


class FactorizationTimeout(Error):
    """Pollard rho exceeded its iteration cap without splitting the input."""


class InvalidDelta(Error):
    """Worst-case instance generation needs a determinant target >= 2."""


class TooLargeForExhaustive(Error):
    """Instance exceeds the cap for exhaustive subset search."""


class NotInCone(Error):
    """The target vector is not a nonnegative combination of the columns."""


class NotPositivelySpanning(Error):
    """The columns do not positively span the ambient space."""


class NoSignMix(Error):
    """A vector with both positive and negative entries was required."""


class HypothesisViolated(Error):
    """Kernel-vector construction needs t > 1 + log2(first entry)."""


class InfeasibleInput(Error):
    """A supplied starting point does not satisfy its constraints."""


class CapExceeded(Error):
    """Right-hand side exceeds the configured pseudo-polynomial search cap."""


class ParseError(Error):
    """Malformed input text; carries source name, line and column (1-based)."""

    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.source = source
