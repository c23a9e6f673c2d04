"""Exception hierarchy shared across the package."""


class EllipticaError(Exception):
    """Base class for all library errors."""


class ZeroPolynomialError(EllipticaError):
    """An operation that needs a degree or a sign was given the zero polynomial."""


class NonPolynomialQuotient(EllipticaError):
    """Exact polynomial division left a remainder; the input is not admissible."""


class ParseError(EllipticaError):
    """Malformed space expression or inline data string."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DomainError(EllipticaError):
    """Input outside the simply connected / elliptic domain (S1, CP0, b=1, eps<=0, ...)."""


class PurityError(EllipticaError):
    """Operation requires positively elliptic data (|b| = |a|)."""


class NonIntegerChi(EllipticaError):
    """prod(b)/prod(a) is not an integer; the data cannot be realized."""


class NoExactHomology(EllipticaError):
    """The homological Poincare polynomial is not determined by this input."""


class CapExceeded(EllipticaError):
    """Requested census range exceeds the practical cap."""


class UnsupportedLeaf(EllipticaError):
    """Mixed Hodge polynomials are only computed for projective-space products."""


class CounterexampleFound(EllipticaError):
    """A would-be counterexample to the Hilali conjecture; the CLI exits with code 3."""
