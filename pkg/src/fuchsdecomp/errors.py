"""Exception hierarchy.

Every error raised on purpose by the library derives from ``FuchsDecompError``
so the CLI can map it to exit code 1.
"""

from __future__ import annotations


class FuchsDecompError(Exception):
    """Base class for domain errors."""


class DivisionByZero(FuchsDecompError, ZeroDivisionError):
    pass


class FieldSpecMismatch(FuchsDecompError, ValueError):
    pass


class ParseError(FuchsDecompError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DeterminantNotOne(FuchsDecompError, ValueError):
    pass


class IdentityHasNoCircle(FuchsDecompError, ValueError):
    pass


class NonHomotheticUpperTriangular(FuchsDecompError, ValueError):
    pass


class EmptyDomain(FuchsDecompError, ValueError):
    pass


class PresentationError(FuchsDecompError, ValueError):
    def __init__(self, violation):
        super().__init__(f"invalid presentation: {violation}")
        self.violation = violation


class LambdaNotGreaterThanOne(FuchsDecompError, ValueError):
    pass


class BoundaryHit(FuchsDecompError):
    pass


class NonTermination(FuchsDecompError):
    pass


class NotDeckTransformation(FuchsDecompError):
    pass


class PDividesLevel(FuchsDecompError, ValueError):
    pass


class NotDegreeZero(FuchsDecompError, ValueError):
    pass


class ViewportDegenerate(FuchsDecompError, ValueError):
    pass


class DepthCapExceeded(FuchsDecompError, ValueError):
    pass
