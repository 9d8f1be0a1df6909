"""Example families of whiskered categories, valid by construction.

These seed every checker in the toolkit.  Each constructor checks its inputs
and raises ``ConstructionError`` with the failing law instead of producing an
invalid structure.
"""

from __future__ import annotations

import logging
from typing import Optional

from core.category import FiniteCategory, FiniteGroupoid
from core.errors import ConstructionError, StructureError
from constructions.actions import ACTIONS, ActionTables, check_actions
from constructions.tables import (
    GROUPS,
    MONOIDS,
    GroupTable,
    MonoidTable,
    require_valid,
    validate_group,
    validate_monoid,
)
from linear.category import linearize
from whisker.validation import validate_whiskering
from whisker.whiskering import WhiskeredCategory, Whiskering

logger = logging.getLogger(__name__)


def codiscrete_whiskered(M: MonoidTable) -> WhiskeredCategory:
    """One morphism ``x->y`` for every ordered pair of elements of ``M``."""
    require_valid(validate_monoid(M), "monoid")
    n = M.size

    def mor(x: int, y: int) -> int:
        return x * n + y

    pairs = [(x, y) for x in range(n) for y in range(n)]
    base = FiniteGroupoid(
        objects=n,
        endpoints=tuple(pairs),
        identities=tuple(mor(x, x) for x in range(n)),
        table=tuple(
            tuple(mor(x, w) if y == z else None for (z, w) in pairs)
            for (x, y) in pairs
        ),
        object_labels=tuple(M.label(x) for x in range(n)),
        morphism_labels=tuple(f"{M.label(x)}->{M.label(y)}" for x, y in pairs),
        inverses=tuple(mor(y, x) for x, y in pairs),
    )
    whiskering = Whiskering(
        monoid=M.table,
        unit=M.unit,
        left=tuple(tuple(mor(M.mul(z, x), M.mul(z, y)) for x, y in pairs) for z in range(n)),
        right=tuple(tuple(mor(M.mul(x, z), M.mul(y, z)) for z in range(n)) for x, y in pairs),
    )
    return WhiskeredCategory(base, whiskering)


def bundle_of_groups(M: MonoidTable, G: GroupTable, actions: ActionTables) -> WhiskeredCategory:
    """Objects ``M``; at each object a copy of ``G``; whiskering through ``λ`` and ``ρ``.

    Morphism ``g@m`` has index ``m * |G| + g``.
    """
    require_valid(validate_monoid(M), "monoid")
    require_valid(validate_group(G), "group")
    report = check_actions(M, G, actions)
    if not report.ok:
        first = report.violations[0]
        logger.warning("bundle refused: %s at %s", first.law, first.witness)
        raise ConstructionError(first.law, first.witness, f"action law {first.law!r} fails at {first.witness}")

    k = G.size

    def mor(g: int, m: int) -> int:
        return m * k + g

    cells = [(g, m) for m in range(M.size) for g in range(k)]
    base = FiniteGroupoid(
        objects=M.size,
        endpoints=tuple((m, m) for _, m in cells),
        identities=tuple(mor(G.unit, m) for m in range(M.size)),
        table=tuple(
            tuple(mor(G.mul(g, h), m) if m == n else None for (h, n) in cells)
            for (g, m) in cells
        ),
        object_labels=tuple(M.label(m) for m in range(M.size)),
        morphism_labels=tuple(f"{G.label(g)}@{M.label(m)}" for g, m in cells),
        inverses=tuple(mor(G.inverse(g), m) for g, m in cells),
    )
    whiskering = Whiskering(
        monoid=M.table,
        unit=M.unit,
        left=tuple(tuple(mor(actions.left[x][g], M.mul(x, m)) for g, m in cells) for x in range(M.size)),
        right=tuple(tuple(mor(actions.right[g][y], M.mul(m, y)) for y in range(M.size)) for g, m in cells),
    )
    return WhiskeredCategory(base, whiskering)


def one_object_from_monoid(N: MonoidTable) -> WhiskeredCategory:
    """A single object with endomorphisms ``N``, whiskered by the trivial monoid.

    A ``GroupTable`` gives a groupoid base.
    """
    require_valid(validate_monoid(N), "monoid")
    common = dict(
        objects=1,
        endpoints=tuple((0, 0) for _ in range(N.size)),
        identities=(N.unit,),
        table=N.table,
        object_labels=("*",),
        morphism_labels=tuple(N.label(a) for a in range(N.size)),
    )
    if isinstance(N, GroupTable):
        base: FiniteCategory = FiniteGroupoid(**common, inverses=N.inverses)
    else:
        base = FiniteCategory(**common)
    whiskering = Whiskering(
        monoid=((0,),),
        unit=0,
        left=(tuple(range(N.size)),),
        right=tuple((a,) for a in range(N.size)),
    )
    return WhiskeredCategory(base, whiskering)


def direct_product(W1: WhiskeredCategory, W2: WhiskeredCategory) -> WhiskeredCategory:
    """Componentwise product; object ``(x1, x2)`` has index ``x1 * n2 + x2``, likewise morphisms."""
    C1, C2 = W1.base, W2.base
    n2, m2 = C2.objects, C2.morphism_count
    objs = [(x1, x2) for x1 in range(C1.objects) for x2 in range(n2)]
    mors = [(a1, a2) for a1 in range(C1.morphism_count) for a2 in range(m2)]

    def cell(a: tuple[int, int], b: tuple[int, int]) -> Optional[int]:
        ab1, ab2 = C1.table[a[0]][b[0]], C2.table[a[1]][b[1]]
        return None if ab1 is None or ab2 is None else ab1 * m2 + ab2

    common = dict(
        objects=len(objs),
        endpoints=tuple(
            (C1.source(a1) * n2 + C2.source(a2), C1.target(a1) * n2 + C2.target(a2)) for a1, a2 in mors
        ),
        identities=tuple(C1.identity(x1) * m2 + C2.identity(x2) for x1, x2 in objs),
        table=tuple(tuple(cell(a, b) for b in mors) for a in mors),
        object_labels=tuple(f"({C1.object_label(x1)},{C2.object_label(x2)})" for x1, x2 in objs),
        morphism_labels=tuple(f"({C1.morphism_label(a1)},{C2.morphism_label(a2)})" for a1, a2 in mors),
    )
    if W1.is_groupoid and W2.is_groupoid:
        base: FiniteCategory = FiniteGroupoid(
            **common, inverses=tuple(C1.inverse(a1) * m2 + C2.inverse(a2) for a1, a2 in mors)
        )
    else:
        base = FiniteCategory(**common)
    whiskering = Whiskering(
        monoid=tuple(
            tuple(W1.mul(x1, y1) * n2 + W2.mul(x2, y2) for y1, y2 in objs) for x1, x2 in objs
        ),
        unit=W1.unit * n2 + W2.unit,
        left=tuple(
            tuple(W1.lw(x1, a1) * m2 + W2.lw(x2, a2) for a1, a2 in mors) for x1, x2 in objs
        ),
        right=tuple(
            tuple(W1.rw(a1, y1) * m2 + W2.rw(a2, y2) for y1, y2 in objs) for a1, a2 in mors
        ),
    )
    product = WhiskeredCategory(base, whiskering)
    require_valid(validate_whiskering(product), "direct product")
    return product


# ── Registry used by the CLI ──────────────────────────────────────────────

FAMILIES = ("codiscrete", "bundle", "monoid-algebra", "one-object")


def _lookup(registry: dict, name: str, what: str):
    if name not in registry:
        raise StructureError(f"unknown {what} {name!r}; choose from {', '.join(sorted(registry))}")
    return registry[name]()


def build_family(family: str, monoid: str = "trivial", group: str = "s3", action: str = "trivial"):
    """Build a named family member; returns ``(structure, kind)``.

    ``one-object`` uses ``group`` when the ``monoid`` option is left at
    ``trivial``, otherwise the named monoid.
    """
    if family == "codiscrete":
        W = codiscrete_whiskered(_lookup(MONOIDS, monoid, "monoid"))
        return W, "whiskered-groupoid"
    if family == "bundle":
        M = _lookup(MONOIDS, monoid, "monoid")
        G = _lookup(GROUPS, group, "group")
        if action not in ACTIONS:
            raise StructureError(f"unknown action {action!r}; choose from {', '.join(sorted(ACTIONS))}")
        return bundle_of_groups(M, G, ACTIONS[action](M, G)), "whiskered-groupoid"
    if family == "one-object":
        N = _lookup(GROUPS, group, "group") if monoid == "trivial" else _lookup(MONOIDS, monoid, "monoid")
        W = one_object_from_monoid(N)
        return W, "whiskered-groupoid" if W.is_groupoid else "whiskered-category"
    if family == "monoid-algebra":
        return linearize(one_object_from_monoid(_lookup(MONOIDS, monoid, "monoid"))), "linear"
    raise StructureError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
