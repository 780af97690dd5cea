"""Exception hierarchy.

``ValidationError`` subclasses mean the input was malformed (CLI exit 1);
``BoundError`` subclasses mean a configured size limit was hit (CLI exit 2).
"""


class FinmodError(Exception):
    pass


class ValidationError(FinmodError):
    pass


class BoundError(FinmodError):
    pass


class MissingEmptyOrFull(ValidationError):
    pass


class NotClosedUnderUnion(ValidationError):
    def __init__(self, a, b):
        super().__init__(f"union of opens {sorted(a)} and {sorted(b)} is not open")
        self.witness = (a, b)


class NotClosedUnderIntersection(ValidationError):
    def __init__(self, a, b):
        super().__init__(f"intersection of opens {sorted(a)} and {sorted(b)} is not open")
        self.witness = (a, b)


class NotAPreorder(ValidationError):
    pass


class NotAPoset(ValidationError):
    pass


class NotInKernel(ValidationError):
    pass


class NotAGroup(ValidationError):
    pass


class DegenerateInput(ValidationError):
    pass


class IsolatedVertex(ValidationError):
    pass


class AmbiguousIncidence(ValidationError):
    pass


class FormatError(ValidationError):
    pass


class SearchBoundExceeded(BoundError):
    pass


class OrderBoundExceeded(BoundError):
    pass


class BoundExceeded(BoundError):
    pass


class VerificationFailed(FinmodError):
    """Internal consistency check failed. Indicates a bug, never bad input."""
