"""Exhaustive structural validation of finite categories and groupoids.

Every violated law is reported with a witness tuple; an empty report means
the tables describe a category (resp. groupoid).
"""

from __future__ import annotations

import logging

import config
from core.category import FiniteCategory, FiniteGroupoid
from core.reports import ValidationReport

logger = logging.getLogger(__name__)


def _check_shape(C: FiniteCategory, report: ValidationReport) -> bool:
    n, m = C.objects, C.morphism_count
    if n > config.MAX_OBJECTS or m > config.MAX_MORPHISMS:
        report.add("size", (n, m), f"caps are {config.MAX_OBJECTS} objects, {config.MAX_MORPHISMS} morphisms")
        return False
    if len(C.identities) != n:
        report.add("shape", ("identities", len(C.identities)), f"expected {n} identities")
    if len(C.table) != m or any(len(row) != m for row in C.table):
        report.add("shape", ("compose",), f"composition table must be {m} x {m}")
    for a, (x, y) in enumerate(C.endpoints):
        if not (0 <= x < n and 0 <= y < n):
            report.add("shape", ("endpoints", a), "endpoint out of range")
    for x, i in enumerate(C.identities):
        if not 0 <= i < m:
            report.add("shape", ("identities", x), "identity out of range")
    if C.object_labels and len(C.object_labels) != n:
        report.add("shape", ("object_labels",), "label count mismatch")
    if C.morphism_labels and len(C.morphism_labels) != m:
        report.add("shape", ("morphism_labels",), "label count mismatch")
    return report.ok


def validate_category(C: FiniteCategory) -> ValidationReport:
    """Check closure, endpoint coherence, units and associativity."""
    report = ValidationReport()
    if not _check_shape(C, report):
        return report

    m = C.morphism_count
    valid = [[False] * m for _ in range(m)]

    # Closure and endpoint coherence.
    for a in range(m):
        row = C.table[a]
        for b in range(m):
            cell = row[b]
            report.checked += 1
            if not C.composable(a, b):
                if cell is not None:
                    report.add("closure", (a, b), "entry defined for a non-composable pair")
                continue
            if cell is None:
                report.add("closure", (a, b), "composable pair has no entry")
            elif not 0 <= cell < m:
                report.add("closure", (a, b), "entry out of range")
            elif C.endpoints[cell] != (C.source(a), C.target(b)):
                report.add("endpoints", (a, b), f"composite {cell} has endpoints {C.endpoints[cell]}")
            else:
                valid[a][b] = True

    # Units.
    for x, i in enumerate(C.identities):
        if C.endpoints[i] != (x, x):
            report.add("identity-endpoints", (x, i))
            continue
        for a in C.out_of(x):
            if valid[i][a] and C.table[i][a] != a:
                report.add("left-unit", (x, a))
        for a in range(m):
            if C.target(a) == x and valid[a][i] and C.table[a][i] != a:
                report.add("right-unit", (a, x))

    # Associativity.
    for a in range(m):
        for b in C.out_of(C.target(a)):
            if not valid[a][b]:
                continue
            ab = C.table[a][b]
            for c in C.out_of(C.target(b)):
                if not valid[b][c]:
                    continue
                bc = C.table[b][c]
                if not (valid[ab][c] and valid[a][bc]):
                    continue
                report.checked += 1
                if C.table[ab][c] != C.table[a][bc]:
                    report.add("associativity", (a, b, c))

    if not report.ok:
        logger.info("category validation found %d violation(s)", len(report.violations))
    return report


def validate_groupoid(G: FiniteGroupoid) -> ValidationReport:
    """Category laws plus ``a·a⁻¹ = 1`` and ``a⁻¹·a = 1``."""
    report = validate_category(G)
    if "size" in report.laws() or "shape" in report.laws():
        return report
    m = G.morphism_count
    if len(G.inverses) != m:
        report.add("shape", ("inverses", len(G.inverses)), f"expected {m} inverses")
        return report
    for a in range(m):
        b = G.inverses[a]
        report.checked += 1
        if not 0 <= b < m or G.endpoints[b] != (G.target(a), G.source(a)):
            report.add("inverse-endpoints", (a, b))
            continue
        if G.table[a][b] != G.identity(G.source(a)):
            report.add("right-inverse", (a, b))
        if G.table[b][a] != G.identity(G.target(a)):
            report.add("left-inverse", (a, b))
    return report


def validate(C: FiniteCategory) -> ValidationReport:
    """Run the validator matching the structure's type."""
    if isinstance(C, FiniteGroupoid):
        return validate_groupoid(C)
    return validate_category(C)
