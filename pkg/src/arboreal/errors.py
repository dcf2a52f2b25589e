"""Exception hierarchy for the arboreal package."""

from enum import Enum
from typing import Any, Optional


class Claim(str, Enum):
    """Identifiers of the assertions a verification run can fail on."""
    BICONNECTED = "BICONNECTED"
    ARBOREAL = "ARBOREAL"
    SPANS = "SPANS"
    DISCONNECTED = "DISCONNECTED"
    RHO_UNIQUE = "RHO_UNIQUE"
    BINDING = "BINDING"
    LEMMA = "LEMMA"
    DECOMPOSITION = "DECOMPOSITION"
    WITNESS = "WITNESS"


class ArborealError(Exception):
    """Base class for every error raised by this package."""


class InputError(ArborealError, ValueError):
    """The caller handed in something that violates an operation's precondition."""


class DuplicateEdgeError(InputError):
    pass


class SelfLoopError(InputError):
    pass


class VertexOutOfRangeError(InputError):
    pass


class CapacityMismatchError(InputError):
    pass


class NotACycleError(InputError):
    pass


class NotTriangulatedError(InputError):
    pass


class KTooSmallError(InputError):
    pass


class NotInFamilyFormError(InputError):
    pass


class NotASpanningTreeError(InputError):
    pass


class DisconnectedError(InputError):
    pass


class IncompleteTreeListError(InputError):
    pass


class FamilyNotCyclesError(InputError):
    pass


class FamilyNotSubsetOfCyclesError(InputError):
    pass


class FacesNotAdjacentError(InputError):
    pass


class OuterFaceChosenError(InputError):
    pass


class InvalidEmbeddingError(InputError):
    pass


class ParseError(InputError):
    """Malformed graph or cycle file."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotACycleInFileError(ParseError):
    pass


class LimitExceededError(ArborealError, RuntimeError):
    """An enumeration guard tripped."""

    def __init__(self, what: str, limit: int, count: Optional[int] = None):
        self.limit = limit
        self.count = count
        detail = f" (exact count {count})" if count is not None else ""
        super().__init__(f"{what} exceeds limit {limit}{detail}")


class CycleLimitExceededError(LimitExceededError):
    def __init__(self, limit: int, count: Optional[int] = None):
        super().__init__("cycle count", limit, count)


class TreeLimitExceededError(LimitExceededError):
    def __init__(self, limit: int, count: Optional[int] = None):
        super().__init__("spanning tree count", limit, count)


class ClaimFailedError(ArborealError, RuntimeError):
    """A verified claim did not hold: either a bug here or a flaw in the construction."""

    def __init__(self, claim: Claim, message: str, report: Any = None):
        self.claim = claim
        self.report = report
        super().__init__(f"claim {claim.value} failed: {message}")


class NoBindingFoundError(ClaimFailedError):
    def __init__(self, message: str):
        super().__init__(Claim.BINDING, message)
