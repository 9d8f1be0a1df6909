"""Exhaustive checks of the whiskering axioms and of the star bimorphism."""

from __future__ import annotations

import logging

import config
from core.reports import ValidationReport
from core.scan import plan_scan
from core.validation import validate
from whisker.whiskering import WhiskeredCategory, l_mult, r_mult, star
from cubes.shells import comp1, comp2

logger = logging.getLogger(__name__)


def _check_tables(W: WhiskeredCategory, report: ValidationReport) -> bool:
    n, m = W.base.objects, W.base.morphism_count
    w = W.whiskering
    if len(w.monoid) != n or any(len(row) != n for row in w.monoid):
        report.add("shape", ("monoid",), f"monoid table must be {n} x {n}")
    elif any(not 0 <= z < n for row in w.monoid for z in row):
        report.add("shape", ("monoid",), "monoid entry out of range")
    if not 0 <= w.unit < n:
        report.add("shape", ("unit", w.unit), "unit is not an object")
    if len(w.left) != n or any(len(row) != m for row in w.left):
        report.add("shape", ("left_action",), f"left action table must be {n} x {m}")
    elif any(not 0 <= b < m for row in w.left for b in row):
        report.add("shape", ("left_action",), "left action entry out of range")
    if len(w.right) != m or any(len(row) != n for row in w.right):
        report.add("shape", ("right_action",), f"right action table must be {m} x {n}")
    elif any(not 0 <= b < m for row in w.right for b in row):
        report.add("shape", ("right_action",), "right action entry out of range")
    return report.ok


def validate_whiskering(W: WhiskeredCategory) -> ValidationReport:
    """Every violated whiskering axiom, with witnesses.

    The base structure is validated first; whiskering laws are only checked
    on a valid base.
    """
    report = validate(W.base)
    if not report.ok or not _check_tables(W, report):
        return report

    C = W.base
    objects = range(C.objects)
    morphisms = range(C.morphism_count)
    one = W.unit

    for x in objects:
        if W.mul(one, x) != x or W.mul(x, one) != x:
            report.add("monoid-unit", (x,))
        for y in objects:
            for z in objects:
                report.checked += 1
                if W.mul(W.mul(x, y), z) != W.mul(x, W.mul(y, z)):
                    report.add("monoid-associativity", (x, y, z))

    for a in morphisms:
        u, v = C.source(a), C.target(a)
        if W.lw(one, a) != a:
            report.add("left-unit-action", (a,))
        if W.rw(a, one) != a:
            report.add("right-unit-action", (a,))
        for x in objects:
            report.checked += 1
            xa, ax = W.lw(x, a), W.rw(a, x)
            if C.endpoints[xa] != (W.mul(x, u), W.mul(x, v)):
                report.add("left-endpoints", (x, a))
            if C.endpoints[ax] != (W.mul(u, x), W.mul(v, x)):
                report.add("right-endpoints", (a, x))
            for y in objects:
                if W.lw(W.mul(x, y), a) != W.lw(x, W.lw(y, a)):
                    report.add("left-action-associativity", (x, y, a))
                if W.rw(a, W.mul(x, y)) != W.rw(W.rw(a, x), y):
                    report.add("right-action-associativity", (a, x, y))
                if W.lw(x, W.rw(a, y)) != W.rw(W.lw(x, a), y):
                    report.add("bimodule", (x, a, y))

    for x in objects:
        for y in objects:
            if W.lw(x, C.identity(y)) != C.identity(W.mul(x, y)):
                report.add("left-identity", (x, y))
            if W.rw(C.identity(y), x) != C.identity(W.mul(y, x)):
                report.add("right-identity", (y, x))

    for a in morphisms:
        for b in C.out_of(C.target(a)):
            ab = C.table[a][b]
            for x in objects:
                report.checked += 1
                xa, xb = W.lw(x, a), W.lw(x, b)
                if not C.composable(xa, xb) or W.lw(x, ab) != C.table[xa][xb]:
                    report.add("left-functoriality", (x, a, b))
                ax, bx = W.rw(a, x), W.rw(b, x)
                if not C.composable(ax, bx) or W.rw(ab, x) != C.table[ax][bx]:
                    report.add("right-functoriality", (a, b, x))

    if not report.ok:
        logger.info("whiskering validation found %d violation(s)", len(report.violations))
    return report


def _composable_triples(W: WhiskeredCategory):
    C = W.base
    for a in range(C.morphism_count):
        for d in C.out_of(C.target(a)):
            for c in range(C.morphism_count):
                yield a, d, c


def _sample_triple(W: WhiskeredCategory, rng):
    C = W.base
    a = rng.randrange(C.morphism_count)
    return a, rng.choice(C.out_of(C.target(a))), rng.randrange(C.morphism_count)


def check_bimorphism(W: WhiskeredCategory) -> ValidationReport:
    """``(ad)*c = (a*c) ∘₁ (d*c)`` and ``c*(ad) = (c*a) ∘₂ (c*d)`` on composable inputs."""
    C = W.base
    report = ValidationReport()
    plan = plan_scan(
        "bimorphism triples",
        lambda: _composable_triples(W),
        lambda rng: _sample_triple(W, rng),
        limit=config.TRIPLE_SCAN_LIMIT,
        total=sum(len(C.out_of(C.target(a))) for a in range(C.morphism_count)) * C.morphism_count,
    )
    report.exhaustive = plan.exhaustive
    for a, d, c in plan:
        report.checked += 1
        ad = C.compose(a, d)
        if star(W, ad, c) != comp1(C, star(W, a, c), star(W, d, c)):
            report.add("bimorphism-comp1", (a, d, c))
        if star(W, c, ad) != comp2(C, star(W, c, a), star(W, c, d)):
            report.add("bimorphism-comp2", (c, a, d))
    return report


def check_lr_parallel(W: WhiskeredCategory) -> ValidationReport:
    """``l(a, b)`` and ``r(a, b)`` both run ``xu → yv``."""
    C = W.base
    report = ValidationReport()
    for a in range(C.morphism_count):
        for b in range(C.morphism_count):
            report.checked += 1
            expected = (W.mul(C.source(a), C.source(b)), W.mul(C.target(a), C.target(b)))
            left, right = l_mult(W, a, b), r_mult(W, a, b)
            if C.endpoints[left] != expected or C.endpoints[right] != expected:
                report.add("lr-parallel", (a, b))
    return report
