"""Exception types shared across the package."""


class SubshiftAlgebraError(Exception):
    """Base class for all errors raised by this package."""


class EmptyShift(SubshiftAlgebraError):
    """The presented shift space is empty (every state was pruned)."""


class NotCommuting(SubshiftAlgebraError):
    """commuting_root was called on a pair with alpha*beta != beta*alpha."""


class PowersDiffer(SubshiftAlgebraError):
    """common_power_root was called with alpha^p != beta^q."""


class Inconsistent(SubshiftAlgebraError):
    """multi_common_root precondition (pairwise equal powers) fails."""


class RingMismatch(SubshiftAlgebraError):
    """Operands belong to different rings or different shift contexts."""


class ZeroInput(SubshiftAlgebraError):
    """An operation requiring a nonzero element received zero."""


class InternalNonzeroViolation(SubshiftAlgebraError):
    """A reduction step produced zero where the theory guarantees nonzero.

    Raised only on bugs: every multiplication inside the reduction pipeline
    re-verifies nonzero-ness.
    """


class RootExtractionFailure(SubshiftAlgebraError):
    """A word-root rewrite failed; indicates a violated step precondition."""


class NotInCorner(SubshiftAlgebraError):
    """Element has a graded component outside the corner's {c^n} family."""


class NotMinimalCycle(SubshiftAlgebraError):
    """The supplied (set, word) pair is not a minimal cycle without exit."""


class NotADomain(SubshiftAlgebraError):
    """The coefficient ring has zero divisors where a domain is required."""


class ShiftParseError(SubshiftAlgebraError):
    """Error while parsing a shift-specification file."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DuplicateSymbol(ShiftParseError):
    pass


class EmptyAlphabet(ShiftParseError):
    pass


class IllegalForbiddenWord(ShiftParseError):
    pass


class ExprSyntaxError(SubshiftAlgebraError):
    """Syntax error in an algebra/set expression, with 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownLetter(SubshiftAlgebraError):
    """A word literal used a symbol outside the shift's alphabet."""


class BadScalarForRing(SubshiftAlgebraError):
    """A scalar literal cannot be interpreted in the selected ring."""
