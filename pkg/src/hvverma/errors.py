"""Exception hierarchy shared by every layer of the engine."""

from __future__ import annotations


class HVError(Exception):
    """Base class for all engine errors."""


class FieldMismatchError(HVError, ValueError):
    """Two scalars live in different quadratic fields."""


class ContextError(HVError, ValueError):
    """Objects built over different groups or modules were combined."""


class DegenerateGroupError(HVError, ValueError):
    pass


class PreconditionError(HVError, ValueError):
    pass


class SearchExhaustedError(HVError):
    """No admissible group element was found below the height cap."""


class StripExhaustedError(SearchExhaustedError):
    """Every candidate raising operator failed to make progress."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


class ProofViolationError(HVError):
    """A step that the reduction argument guarantees to succeed did not.

    The partial trace up to the failing step is attached so the event can be
    inspected and replayed.
    """

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


class ParseError(HVError, ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}: {text!r}" if text else message)
        self.text = text
        self.position = position
