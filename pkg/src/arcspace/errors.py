"""Exception hierarchy shared across the package."""

from __future__ import annotations


class ArcspaceError(Exception):
    """Base class for all library errors."""


class VarsetMismatchError(ArcspaceError):
    """Operands were built over different variable sets."""


class ParseError(ArcspaceError):
    """Invalid polynomial expression; carries the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(ParseError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable '{name}'", position)
        self.name = name


class NegativeExponentError(ParseError):
    def __init__(self, position: int):
        super().__init__("exponent must be a nonnegative integer literal", position)


class NotRegularError(ArcspaceError):
    """Divisor is not regular in the distinguished variable."""


class NotMonicError(ArcspaceError):
    """Divisor is not monic in t."""


class InvalidCodimError(ArcspaceError):
    """Requested minor size exceeds the matrix dimensions."""


class InsufficientPrecisionError(ArcspaceError):
    def __init__(self, needed: int, have: int):
        super().__init__(f"need precision {needed}, arc is known mod t^{have}")
        self.needed = needed
        self.have = have


class PointNotOnSchemeError(ArcspaceError):
    """A generator does not vanish at the given point."""


class InternalInconsistencyError(ArcspaceError):
    """Two independent computation pipelines disagree (likely a basis bug)."""


class CertificateFailureError(ArcspaceError):
    """No random draw satisfied the contact-order certificate within the limit."""


class VerificationError(ArcspaceError):
    """A quantitative check failed; carries observed and expected values."""

    def __init__(self, message: str, observed, expected):
        super().__init__(f"{message}: observed {observed}, expected {expected}")
        self.observed = observed
        self.expected = expected


class ResourceLimitError(ArcspaceError):
    """A configured computation budget was exhausted."""
