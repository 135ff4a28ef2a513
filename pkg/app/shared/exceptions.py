"""Custom exceptions for the application."""
from typing import Optional


class ARCrystalError(Exception):
    """Base exception for the AR crystal toolkit."""
    def __init__(self, message: str, detail: Optional[str] = None):
        self.message = message
        self.detail = detail
        super().__init__(self.message)


class QuiverValidationError(ARCrystalError):
    """Raised when a quiver specification is not a valid Dynkin quiver."""
    pass


class RankMismatchError(ARCrystalError):
    """Raised when a vector does not match the rank of the quiver."""
    pass


class UnknownVertexError(ARCrystalError):
    """Raised when a vertex index lies outside 1..n."""
    pass


class ForeignModuleError(ARCrystalError):
    """Raised when a module or root does not belong to the quiver at hand."""
    pass


class NotSpecialError(ARCrystalError):
    """Raised when crystal operators are requested on a non-special quiver."""
    pass


class CrystalMembershipError(ARCrystalError):
    """Raised when an element is required to lie in B(lambda) and does not."""
    pass


class NodeLimitExceeded(ARCrystalError):
    """Raised when graph generation exceeds the configured node cap."""
    def __init__(self, message: str, limit: int):
        self.limit = limit
        super().__init__(message)


class AmbiguousSelectionError(ARCrystalError):
    """Raised when a selection rule has several maximal candidates."""
    pass


class UnsupportedOrientationError(ARCrystalError):
    """Raised when promotion is requested outside type A standard orientation."""
    pass


class GraphIsomorphismError(ARCrystalError):
    """Raised when graph_iso is called on graphs without a unique source."""
    pass


class InternalInvariantError(ARCrystalError):
    """Raised when an invariant that the algorithms guarantee is violated."""
    pass


# Errors that come from bad user input rather than failed verification.
INPUT_ERRORS = (
    QuiverValidationError,
    RankMismatchError,
    UnknownVertexError,
    ForeignModuleError,
    NotSpecialError,
    CrystalMembershipError,
    UnsupportedOrientationError,
)
