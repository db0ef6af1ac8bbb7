"""Exception types shared across the package."""


class MidgbError(Exception):
    """Base class for package-specific errors."""


class ZeroInverseError(MidgbError, ZeroDivisionError):
    """Inversion of 0 in a prime field."""


class NonPrimeFieldError(MidgbError, ValueError):
    """A field size that is not prime."""


class ZeroInputError(MidgbError, ValueError):
    """A zero polynomial where a nonzero one is required."""


class ZeroPolynomialError(MidgbError, ValueError):
    """Root search on the zero polynomial."""


class EmptyQueueError(MidgbError, LookupError):
    """Pair selection from an empty queue."""


class EmptyBatchError(MidgbError, ValueError):
    """Matrix construction from an empty pair batch."""


class BoundViolationError(MidgbError, AssertionError):
    """A polynomial broke a degree bound that should hold by construction.

    This is an internal-error diagnostic: it means the implementation (not the
    input) is wrong, so it is never silently swallowed.
    """

    def __init__(self, stage, poly, limit):
        self.stage = stage
        self.poly = poly
        self.limit = limit
        super().__init__(
            f"{stage}-stage degree bound {limit} violated by {poly} (degree {poly.degree()})"
        )


class ConflictingRootsError(MidgbError, ValueError):
    """Two polynomials force different unique values onto one variable."""

    def __init__(self, variable):
        self.variable = variable
        super().__init__(f"conflicting unique roots for variable index {variable}")


class OrderNotLexError(MidgbError, ValueError):
    """An operation that requires the lex order got another order."""


class ParseError(MidgbError, ValueError):
    """System-file syntax error, with 1-based line/column position."""

    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class TooLargeError(MidgbError, ValueError):
    """Search space too large for exhaustive enumeration."""


class InvalidSizeError(MidgbError, ValueError):
    """Benchmark family size parameter out of range."""
