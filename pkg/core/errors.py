"""Exception types shared by every package in the toolkit."""

from __future__ import annotations

from typing import Any


class StructureError(ValueError):
    """Base class for errors raised on malformed structures or inputs."""


class CompositionError(StructureError):
    """A pair of morphisms (or shells, or formal sums) is not composable."""


class BoundaryError(StructureError):
    """A shell's edges do not meet at one of its corners."""


class ConstructionError(StructureError):
    """A construction refused its inputs because a required law fails."""

    def __init__(self, law: str, witness: tuple[Any, ...], message: str = ""):
        self.law = law
        self.witness = witness
        super().__init__(message or f"law {law!r} fails at {witness!r}")


class DocumentParseError(StructureError):
    """A structure document could not be parsed."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class StructureLoadError(StructureError):
    """A document parsed but the structure it describes failed validation."""

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        detail = f" (first: {first.law} at {first.witness})" if first else ""
        super().__init__(f"structure failed validation with {len(report.violations)} violation(s){detail}")
