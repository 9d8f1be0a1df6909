"""Finite categories and groupoids as explicit tables.

Morphisms are globally indexed.  ``endpoints[a]`` is ``(source, target)`` and
``table[a][b]`` is the composite ``ab`` (first ``a``, then ``b``) or ``None``
when the pair is not composable.  Composition is always written in this
algebraic order; nothing in the toolkit uses function-application order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

from core.errors import CompositionError, StructureError

ObjId = int
MorId = int


@dataclass(frozen=True)
class FiniteCategory:
    """Objects ``0..objects-1`` and morphisms ``0..len(endpoints)-1``."""
    objects: int
    endpoints: tuple[tuple[ObjId, ObjId], ...]
    identities: tuple[MorId, ...]
    table: tuple[tuple[Optional[MorId], ...], ...]
    object_labels: tuple[str, ...] = ()
    morphism_labels: tuple[str, ...] = ()

    # ── endpoints ─────────────────────────────────────────────────────────

    @property
    def morphism_count(self) -> int:
        return len(self.endpoints)

    def source(self, a: MorId) -> ObjId:
        return self.endpoints[a][0]

    def target(self, a: MorId) -> ObjId:
        return self.endpoints[a][1]

    def identity(self, x: ObjId) -> MorId:
        return self.identities[x]

    def is_identity(self, a: MorId) -> bool:
        return self.identities[self.source(a)] == a

    # ── composition ───────────────────────────────────────────────────────

    def composable(self, a: MorId, b: MorId) -> bool:
        return self.endpoints[a][1] == self.endpoints[b][0]

    def compose(self, a: MorId, b: MorId) -> MorId:
        if self.endpoints[a][1] != self.endpoints[b][0]:
            raise CompositionError(
                f"cannot compose {self.morphism_label(a)}: "
                f"{self.object_label(self.source(a))} -> {self.object_label(self.target(a))} "
                f"with {self.morphism_label(b)}: "
                f"{self.object_label(self.source(b))} -> {self.object_label(self.target(b))}"
            )
        ab = self.table[a][b]
        if ab is None:
            raise CompositionError(
                f"composition table has no entry for ({self.morphism_label(a)}, {self.morphism_label(b)})"
            )
        return ab

    # ── hom-sets ──────────────────────────────────────────────────────────

    @cached_property
    def _homs(self) -> dict[tuple[ObjId, ObjId], tuple[MorId, ...]]:
        homs: dict[tuple[ObjId, ObjId], list[MorId]] = {}
        for a, ends in enumerate(self.endpoints):
            homs.setdefault(ends, []).append(a)
        return {key: tuple(value) for key, value in homs.items()}

    @cached_property
    def _outgoing(self) -> tuple[tuple[MorId, ...], ...]:
        out: list[list[MorId]] = [[] for _ in range(self.objects)]
        for a, (x, _) in enumerate(self.endpoints):
            out[x].append(a)
        return tuple(tuple(row) for row in out)

    def hom(self, x: ObjId, y: ObjId) -> tuple[MorId, ...]:
        return self._homs.get((x, y), ())

    def out_of(self, x: ObjId) -> tuple[MorId, ...]:
        return self._outgoing[x]

    # ── labels ────────────────────────────────────────────────────────────

    def object_label(self, x: ObjId) -> str:
        return self.object_labels[x] if self.object_labels else str(x)

    def morphism_label(self, a: MorId) -> str:
        return self.morphism_labels[a] if self.morphism_labels else str(a)

    def morphism_by_label(self, name: Union[str, int]) -> MorId:
        """Resolve a label (or a decimal index) to a morphism id."""
        if isinstance(name, int):
            index = name
        elif name in self.morphism_labels:
            return self.morphism_labels.index(name)
        elif name.isdigit():
            index = int(name)
        else:
            raise StructureError(f"unknown morphism {name!r}")
        if not 0 <= index < self.morphism_count:
            raise StructureError(f"unknown morphism {name!r}")
        return index


@dataclass(frozen=True)
class FiniteGroupoid(FiniteCategory):
    """A finite category where ``inverses[a]`` inverts ``a``."""
    inverses: tuple[MorId, ...] = ()

    def inverse(self, a: MorId) -> MorId:
        return self.inverses[a]


def compose(C: FiniteCategory, a: MorId, b: MorId) -> MorId:
    return C.compose(a, b)


def inverse(G: FiniteGroupoid, a: MorId) -> MorId:
    return G.inverse(a)


def hom(C: FiniteCategory, x: ObjId, y: ObjId) -> tuple[MorId, ...]:
    return C.hom(x, y)


def is_groupoid(C: FiniteCategory) -> bool:
    return isinstance(C, FiniteGroupoid)
