"""Exception hierarchy shared by every module in the package."""


class DedekindError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DedekindError, ValueError):
    """An argument lies outside the domain of the operation."""


class ZeroIdealError(DomainError):
    """The zero module was requested; it is not a fractional ideal."""


class OrderMismatchError(DomainError):
    """Operands live in different orders."""


class DegenerateLatticeError(DomainError):
    """A set of vectors does not span a full-rank lattice."""


class NotComaximalError(DomainError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NoComplementError(DomainError):
    """A non-invertible ideal has no principal complement."""


class UnsupportedError(DedekindError):
    """The operation is not available for this kind of order."""


class SingularPrimeError(UnsupportedError):
    """A prime dividing the conductor of a non-maximal order was met."""


class ParseError(DedekindError):
    def __init__(self, message, offset):
        super().__init__(f"parse error at byte {offset}: {message}")
        self.offset = offset
