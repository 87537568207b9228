"""Exception hierarchy shared by all foldchi modules."""

from __future__ import annotations


class FoldError(Exception):
    """Base class for every error raised by foldchi."""


class UnknownVertex(FoldError, LookupError):
    def __init__(self, vertex: str):
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex


class InvalidGraph(FoldError):
    """A target graph failed structural validation."""

    def __init__(self, report):
        self.report = report
        super().__init__("invalid target graph: " + "; ".join(str(v) for v in report.violations))


class CodimTooSmall(FoldError):
    pass


class WrongCodim(FoldError):
    pass


class NonSphericalSingularValue(FoldError):
    pass


class OddSourceDimension(FoldError):
    pass


class NotAForest(FoldError):
    pass


class InvalidSequence(FoldError):
    def __init__(self, report):
        self.report = report
        super().__init__("invalid critical sequence: " + "; ".join(str(v) for v in report.violations))


class TheoremTextConventionUnderflow(FoldError):
    pass


class BadDeterminant(FoldError, ValueError):
    pass


class Overflow(FoldError, ArithmeticError):
    pass


class TooManyTori(FoldError, ValueError):
    pass


class InputError(FoldError):
    """Raised while reading user-supplied documents."""


class DocumentSyntaxError(InputError):
    pass


class DocumentSchemaError(InputError):
    """Schema violations; ``errors`` holds ``(json_pointer, message)`` pairs."""

    def __init__(self, errors: list[tuple[str, str]]):
        self.errors = errors
        super().__init__("; ".join(f"{ptr or '/'}: {msg}" for ptr, msg in errors))


class GraphValidationError(InputError):
    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(str(v) for v in report.violations))
