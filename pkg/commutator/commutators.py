"""Commutators ``[a, b] = δ(a*b)`` in a whiskered groupoid, and the rules
``[a, a] = 1`` and ``[a, b] = [b, a]⁻¹`` that they satisfy only sometimes."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from core.reports import ValidationReport
from cubes.defects import delta, product
from whisker.whiskering import WhiskeredCategory, star

logger = logging.getLogger(__name__)


def commutator(W: WhiskeredCategory, a: Any, b: Any) -> Any:
    """``[a, b] = δ(a*b) = (a.v)⁻¹(x.b)⁻¹(a.u)(y.b)``, an endomorphism at ``yv``."""
    return delta(W, star(W, a, b))


def self_commutator_formula(W: WhiskeredCategory, a: Any) -> Any:
    """``(a.y)⁻¹(x.a)⁻¹(a.x)(y.a)`` for ``a: x → y``."""
    x, y = W.source(a), W.target(a)
    return product(W, W.inverse(W.rw(a, y)), W.inverse(W.lw(x, a)), W.rw(a, x), W.lw(y, a))


def commutator_table(W: WhiskeredCategory) -> list[tuple[int, int, int]]:
    """``(a, b, [a, b])`` for every pair, in index order."""
    m = W.base.morphism_count
    return [(a, b, commutator(W, a, b)) for a in range(m) for b in range(m)]


def check_self_commutator_formula(W: WhiskeredCategory) -> ValidationReport:
    report = ValidationReport()
    for a in range(W.base.morphism_count):
        report.checked += 1
        if commutator(W, a, a) != self_commutator_formula(W, a):
            report.add("self-commutator-formula", (a,))
    return report


def check_self_and_antisymmetry(W: WhiskeredCategory) -> ValidationReport:
    """Failures of ``[a, a] = 1`` and of ``[a, b][b, a] = 1``.

    When ``yv ≠ vy`` the two commutators live at different objects and the
    antisymmetry rule counts as failing, with the two objects in the detail.
    """
    C = W.base
    report = ValidationReport()
    m = C.morphism_count
    for a in range(m):
        report.checked += 1
        y = C.target(a)
        if commutator(W, a, a) != C.identity(W.mul(y, y)):
            report.add("self-commutator", (a,))
    for a in range(m):
        for b in range(m):
            report.checked += 1
            yv = W.mul(C.target(a), C.target(b))
            vy = W.mul(C.target(b), C.target(a))
            if yv != vy:
                report.add("antisymmetry", (a, b), f"object mismatch {C.object_label(yv)} != {C.object_label(vy)}")
                continue
            if C.compose(commutator(W, a, b), commutator(W, b, a)) != C.identity(yv):
                report.add("antisymmetry", (a, b))
    return report


@dataclass
class CommutativityCheck:
    """Both sides of the commutativity biconditional, computed independently."""
    rules_hold: bool
    commutative: bool
    rules_witness: Optional[tuple[Any, ...]] = None
    commutative_witness: Optional[tuple[Any, ...]] = None
    rules: ValidationReport = field(default_factory=ValidationReport)

    @property
    def holds(self) -> bool:
        return self.rules_hold == self.commutative


def check_commutativity(W: WhiskeredCategory) -> CommutativityCheck:
    """``[a,a] = 1`` and ``[a,b] = [b,a]⁻¹`` for all ``a, b`` iff ``C₀`` is commutative and ``x.a = a.x``."""
    C = W.base
    rules = check_self_and_antisymmetry(W)
    rules_witness = (rules.violations[0].law, *rules.violations[0].witness) if rules.violations else None

    commutative_witness: Optional[tuple[Any, ...]] = None
    n = C.objects
    for x in range(n):
        for y in range(x):
            if W.mul(x, y) != W.mul(y, x):
                commutative_witness = ("monoid", x, y)
                break
        if commutative_witness:
            break
    if commutative_witness is None:
        for x in range(n):
            for a in range(C.morphism_count):
                if W.lw(x, a) != W.rw(a, x):
                    commutative_witness = ("action", x, a)
                    break
            if commutative_witness:
                break

    result = CommutativityCheck(
        rules_hold=rules.ok,
        commutative=commutative_witness is None,
        rules_witness=rules_witness,
        commutative_witness=commutative_witness,
        rules=rules,
    )
    if not result.holds:
        logger.warning(
            "commutativity biconditional fails: rules %s, commutative %s (witnesses %s, %s)",
            result.rules_hold, result.commutative, rules_witness, commutative_witness,
        )
    return result
