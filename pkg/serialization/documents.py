"""Structure documents: versioned JSON for every structure kind.

Tables are dense nested arrays; an undefined composite is an explicit
``null``.  ``dumps`` produces the canonical text (model field order,
``indent=2``, trailing newline) and ``save(load(p))`` reproduces a canonical
file byte for byte.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Literal, Optional, Union

from pydantic import BaseModel, ValidationError, field_validator, model_validator

from core.category import FiniteCategory, FiniteGroupoid
from core.errors import DocumentParseError, StructureLoadError
from core.validation import validate
from linear.category import LinearCategory
from whisker.validation import validate_whiskering
from whisker.whiskering import WhiskeredCategory, Whiskering

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

Kind = Literal["category", "groupoid", "whiskered-category", "whiskered-groupoid", "linear"]
Structure = Union[FiniteCategory, WhiskeredCategory, LinearCategory]

GROUPOID_KINDS = {"groupoid", "whiskered-groupoid"}
WHISKERED_KINDS = {"whiskered-category", "whiskered-groupoid", "linear"}


# ── Models ────────────────────────────────────────────────────────────────

class MonoidSection(BaseModel):
    """The object monoid of a whiskering; ``unit`` is mandatory."""

    table: list[list[int]]
    unit: int


class StructureDocument(BaseModel):
    format_version: int = FORMAT_VERSION
    kind: Kind
    objects: int
    morphisms: list[tuple[int, int]]
    compose: list[list[Optional[int]]]
    identities: list[int]
    inverses: Optional[list[int]] = None
    monoid: Optional[MonoidSection] = None
    left_action: Optional[list[list[int]]] = None
    right_action: Optional[list[list[int]]] = None
    object_labels: Optional[list[str]] = None
    morphism_labels: Optional[list[str]] = None

    @field_validator("format_version")
    @classmethod
    def check_version(cls, v: int) -> int:
        if v != FORMAT_VERSION:
            raise ValueError(f"unsupported format version {v}, expected {FORMAT_VERSION}")
        return v

    @field_validator("objects")
    @classmethod
    def check_objects(cls, v: int) -> int:
        if v < 0:
            raise ValueError("object count must be non-negative")
        return v

    @model_validator(mode="after")
    def check_sections(self) -> "StructureDocument":
        if self.kind in GROUPOID_KINDS and self.inverses is None:
            raise ValueError(f"kind {self.kind!r} needs an 'inverses' list")
        if self.kind in {"category", "whiskered-category"} and self.inverses is not None:
            raise ValueError(f"kind {self.kind!r} must not carry 'inverses'")
        if self.kind in WHISKERED_KINDS:
            missing = [name for name in ("monoid", "left_action", "right_action") if getattr(self, name) is None]
            if missing:
                raise ValueError(f"kind {self.kind!r} needs {', '.join(missing)}")
        elif self.monoid is not None or self.left_action is not None or self.right_action is not None:
            raise ValueError(f"kind {self.kind!r} must not carry a whiskering")
        return self


# ── Structures <-> documents ──────────────────────────────────────────────

def kind_of(structure: Structure) -> str:
    if isinstance(structure, LinearCategory):
        return "linear"
    if isinstance(structure, WhiskeredCategory):
        return "whiskered-groupoid" if structure.is_groupoid else "whiskered-category"
    return "groupoid" if isinstance(structure, FiniteGroupoid) else "category"


def to_document(structure: Structure) -> StructureDocument:
    kind = kind_of(structure)
    W = structure.base if isinstance(structure, LinearCategory) else structure
    C = W.base if isinstance(W, WhiskeredCategory) else W
    fields = dict(
        kind=kind,
        objects=C.objects,
        morphisms=[tuple(e) for e in C.endpoints],
        compose=[list(row) for row in C.table],
        identities=list(C.identities),
        inverses=list(C.inverses) if isinstance(C, FiniteGroupoid) else None,
        object_labels=list(C.object_labels) or None,
        morphism_labels=list(C.morphism_labels) or None,
    )
    if isinstance(W, WhiskeredCategory):
        w = W.whiskering
        fields.update(
            monoid=MonoidSection(table=[list(row) for row in w.monoid], unit=w.unit),
            left_action=[list(row) for row in w.left],
            right_action=[list(row) for row in w.right],
        )
    return StructureDocument(**fields)


def from_document(doc: StructureDocument) -> Structure:
    common = dict(
        objects=doc.objects,
        endpoints=tuple(tuple(e) for e in doc.morphisms),
        identities=tuple(doc.identities),
        table=tuple(tuple(row) for row in doc.compose),
        object_labels=tuple(doc.object_labels or ()),
        morphism_labels=tuple(doc.morphism_labels or ()),
    )
    if doc.inverses is not None:
        base: FiniteCategory = FiniteGroupoid(**common, inverses=tuple(doc.inverses))
    else:
        base = FiniteCategory(**common)
    if doc.kind not in WHISKERED_KINDS:
        return base
    whiskering = Whiskering(
        monoid=tuple(tuple(row) for row in doc.monoid.table),
        unit=doc.monoid.unit,
        left=tuple(tuple(row) for row in doc.left_action),
        right=tuple(tuple(row) for row in doc.right_action),
    )
    W = WhiskeredCategory(base, whiskering)
    return LinearCategory(W) if doc.kind == "linear" else W


# ── Text ──────────────────────────────────────────────────────────────────

def dumps(structure: Union[Structure, StructureDocument]) -> str:
    doc = structure if isinstance(structure, StructureDocument) else to_document(structure)
    return json.dumps(doc.model_dump(mode="json", exclude_none=True), indent=2, ensure_ascii=False) + "\n"


def parse(text: str) -> StructureDocument:
    """Parse and schema-check a document without validating the structure."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from exc
    try:
        return StructureDocument.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "document"
        raise DocumentParseError(first["msg"], location) from exc


def validate_structure(structure: Structure):
    """Run the validator matching the structure's kind."""
    if isinstance(structure, LinearCategory):
        return validate_whiskering(structure.base)
    if isinstance(structure, WhiskeredCategory):
        return validate_whiskering(structure)
    return validate(structure)


def loads(text: str) -> Structure:
    structure = from_document(parse(text))
    report = validate_structure(structure)
    if not report.ok:
        logger.warning("document refused: %d violation(s)", len(report.violations))
        raise StructureLoadError(report)
    return structure


def load(path: Union[str, Path]) -> Structure:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(structure: Union[Structure, StructureDocument], path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(structure), encoding="utf-8")
